#include "symqcs/graded.hpp"

#include <algorithm>

namespace symqcs {

GradedRing GradedRing::from_algebra(const SymAlgebra& e) {
  GradedRing r;
  r.field = e.field();
  r.cutoff = e.cutoff();
  for (int n = 0; n <= r.cutoff; ++n) r.dims.push_back(e.dim(n));
  r.mult = e.mults;
  return r;
}

RingGenerators ring_generators(const GradedRing& r) {
  RingGenerators out;
  for (int d = 1; d <= r.cutoff; ++d) {
    if (r.dim(d) == 0) continue;
    SpanBuilder decomposable(r.field, r.dim(d));
    for (int a = 1; a < d; ++a) {
      if (r.dim(a) == 0 || r.dim(d - a) == 0) continue;
      decomposable.add_cols(r.mu(a, d - a));
    }
    if (decomposable.dim() < r.dim(d)) out.degrees_with_generators.push_back(d);
  }
  if (!out.degrees_with_generators.empty()) out.max_degree = out.degrees_with_generators.back();
  // Generators past half the window leave open whether more follow beyond it.
  out.finitely_generated_in_window =
      out.degrees_with_generators.empty() || out.max_degree <= r.cutoff / 2;
  return out;
}

void GradedModule::validate(const GradedRing& r) const {
  for (int n = 0; n <= cutoff; ++n) {
    if (dim(n) == 0) continue;
    if (!action(n, 0).is_identity())
      throw InvariantViolation("graded module: unit law fails at level " + std::to_string(n));
    for (int m = 0; n + m <= cutoff; ++m)
      for (int p = 0; n + m + p <= cutoff; ++p) {
        if (r.dim(m) == 0 || r.dim(p) == 0) continue;
        Matrix lhs = action(n + m, p) * action(n, m).kron(Matrix::identity(field, r.dim(p)));
        Matrix rhs = action(n, m + p) * Matrix::identity(field, dim(n)).kron(r.mu(m, p));
        if (!(lhs == rhs))
          throw InvariantViolation("graded module: associativity fails at (" + std::to_string(n) +
                                   "," + std::to_string(m) + "," + std::to_string(p) + ")");
      }
  }
}

bool GradedModule::operator==(const GradedModule& o) const {
  return cutoff == o.cutoff && dims == o.dims && act == o.act && field == o.field;
}

GradedModule GradedModule::ring_as_module(const GradedRing& r) {
  GradedModule m;
  m.field = r.field;
  m.cutoff = r.cutoff;
  m.dims = r.dims;
  m.act = r.mult;
  return m;
}

GradedModule GradedModule::free(const GradedRing& r, const std::vector<int>& gen_degrees) {
  GradedModule m;
  m.field = r.field;
  m.cutoff = r.cutoff;
  m.dims.assign(r.cutoff + 1, 0);
  std::vector<std::vector<int>> offsets(r.cutoff + 1);
  for (int t = 0; t <= r.cutoff; ++t)
    for (int d : gen_degrees) {
      offsets[t].push_back(m.dims[t]);
      if (t >= d) m.dims[t] += r.dim(t - d);
    }
  for (int t = 0; t <= r.cutoff; ++t)
    for (int k = 0; t + k <= r.cutoff; ++k) {
      Matrix a(r.field, m.dims[t + k], m.dims[t] * r.dim(k));
      for (std::size_t i = 0; i < gen_degrees.size(); ++i) {
        int d = gen_degrees[i];
        if (t < d) continue;
        const Matrix& mu = r.mu(t - d, k);
        for (int x = 0; x < r.dim(t - d); ++x)
          for (int y = 0; y < r.dim(k); ++y)
            for (int z = 0; z < r.dim(t - d + k); ++z) {
              const Rat& v = mu.at(z, x * r.dim(k) + y);
              if (v != 0) a.at(offsets[t + k][i] + z, (offsets[t][i] + x) * r.dim(k) + y) = v;
            }
      }
      m.act[{t, k}] = std::move(a);
    }
  return m;
}

GradedModule tail(const GradedModule& m, int n) {
  GradedModule t;
  t.field = m.field;
  t.cutoff = m.cutoff;
  for (int d = 0; d <= m.cutoff; ++d) t.dims.push_back(d >= n ? m.dims[d] : 0);
  for (int a = 0; a <= m.cutoff; ++a)
    for (int b = 0; a + b <= m.cutoff; ++b) {
      int ring_dim = m.dims[a] > 0 ? m.act.at({a, b}).cols() / m.dims[a]
                                   : m.act.at({a, b}).cols();
      if (a >= n)
        t.act[{a, b}] = m.act.at({a, b});
      else
        t.act[{a, b}] = Matrix(m.field, t.dims[a + b], 0 * ring_dim);
    }
  return t;
}

GradedModule tail_quotient(const GradedModule& m, int n) {
  GradedModule q;
  q.field = m.field;
  q.cutoff = m.cutoff;
  for (int d = 0; d <= m.cutoff; ++d) q.dims.push_back(d < n ? m.dims[d] : 0);
  for (int a = 0; a <= m.cutoff; ++a)
    for (int b = 0; a + b <= m.cutoff; ++b) {
      const Matrix& orig = m.act.at({a, b});
      if (a >= n)
        q.act[{a, b}] = Matrix(m.field, q.dims[a + b], 0);
      else if (a + b >= n)
        q.act[{a, b}] = Matrix(m.field, 0, orig.cols());
      else
        q.act[{a, b}] = orig;
    }
  return q;
}

GradedModule graded_shift(const GradedModule& m, int k) {
  if (k < 0 || k > m.cutoff) throw ArgError("graded_shift out of range");
  GradedModule s;
  s.field = m.field;
  s.cutoff = m.cutoff - k;
  for (int n = 0; n <= s.cutoff; ++n) s.dims.push_back(m.dims[k + n]);
  for (int n = 0; n <= s.cutoff; ++n)
    for (int j = 0; n + j <= s.cutoff; ++j) s.act[{n, j}] = m.act.at({k + n, j});
  return s;
}

TorsionReport is_torsion(const GradedModule& m, const GradedRing& r) {
  TorsionReport rep;
  RingGenerators gens = ring_generators(r);
  rep.ring_generator_bound = gens.max_degree;
  rep.ring_supported = gens.finitely_generated_in_window;
  if (!rep.ring_supported) {
    rep.note = "ring not finitely generated within the window; torsion test unsupported";
    return rep;
  }
  int bigN = std::max(1, gens.max_degree);
  rep.torsion_within_window = true;
  for (int d = 0; d <= m.cutoff; ++d) {
    if (m.dim(d) == 0) continue;
    TorsionPieceVerdict v{d, std::nullopt};
    for (int n = 1; bigN * n + d <= m.cutoff; ++n) {
      int cut = bigN * n;
      bool annihilated = true;
      for (int j = cut; d + j <= m.cutoff; ++j)
        if (r.dim(j) > 0 && !m.action(d, j).is_zero()) {
          annihilated = false;
          break;
        }
      if (annihilated) {
        v.annihilation_degree = cut;
        break;
      }
    }
    if (!v.annihilation_degree) rep.torsion_within_window = false;
    rep.pieces.push_back(std::move(v));
  }
  if (rep.torsion_within_window)
    rep.note = "torsion within the window; annihilation beyond the cutoff is not decided";
  return rep;
}

TailHom hom_from_tail(const GradedRing& r, const GradedModule& m, int n, int d) {
  TailHom out;
  std::vector<int> offset;
  int total = 0;
  for (int j = n; j + d <= r.cutoff; ++j) {
    offset.push_back(total);
    total += r.dim(j) * m.dim(j + d);
  }
  out.total_unknowns = total;
  auto var = [&](int j, int row, int col) { return offset[j - n] + row * r.dim(j) + col; };
  std::vector<std::vector<Rat>> rows;
  for (int j = n; j + d <= r.cutoff; ++j)
    for (int i = 1; j + i + d <= r.cutoff; ++i) {
      if (r.dim(i) == 0 || r.dim(j) == 0) continue;
      for (int a = 0; a < r.dim(j); ++a)
        for (int b = 0; b < r.dim(i); ++b)
          for (int row = 0; row < m.dim(j + i + d); ++row) {
            // f_{j+i}(a·b) − f_j(a)·b = 0
            std::vector<Rat> eq(total, Rat(0));
            const Matrix& mu = r.mu(j, i);
            for (int c = 0; c < r.dim(j + i); ++c) {
              const Rat& coeff = mu.at(c, a * r.dim(i) + b);
              if (coeff != 0)
                eq[var(j + i, row, c)] = r.field.add(eq[var(j + i, row, c)], coeff);
            }
            const Matrix& act = m.act.at({j + d, i});
            for (int x = 0; x < m.dim(j + d); ++x) {
              const Rat& coeff = act.at(row, x * r.dim(i) + b);
              if (coeff != 0) eq[var(j, x, a)] = r.field.sub(eq[var(j, x, a)], coeff);
            }
            bool nonzero = false;
            for (const auto& c : eq)
              if (c != 0) {
                nonzero = true;
                break;
              }
            if (nonzero) rows.push_back(std::move(eq));
          }
    }
  Matrix cons(r.field, static_cast<int>(rows.size()), total);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (int c = 0; c < total; ++c) cons.at(static_cast<int>(i), c) = rows[i][c];
  out.basis = kernel_basis(cons);
  // restriction of degree-d maps A → M along A_{≥n} ↪ A: f ↦ (a ↦ f(1)·a)
  out.restriction = Matrix(r.field, total, m.dim(d));
  for (int vcol = 0; vcol < m.dim(d); ++vcol)
    for (int j = n; j + d <= r.cutoff; ++j) {
      if (r.dim(j) == 0) continue;
      const Matrix& act = m.act.at({d, j});
      for (int a = 0; a < r.dim(j); ++a)
        for (int row = 0; row < m.dim(j + d); ++row) {
          const Rat& coeff = act.at(row, vcol * r.dim(j) + a);
          if (coeff != 0) out.restriction.at(var(j, row, a), vcol) = coeff;
        }
    }
  out.restriction_wellformed = true;
  return out;
}

TorsClosedReport is_tors_closed(const GradedModule& m, const GradedRing& r, int n_max) {
  TorsClosedReport rep;
  rep.n_max = n_max;
  rep.cutoff = r.cutoff;
  int bigN = std::max(1, ring_generators(r).max_degree);
  for (int n = 1; n <= n_max; ++n)
    for (int d = 0; n + d <= r.cutoff; ++d) {
      TailHom h = hom_from_tail(r, m, n, d);
      bool ok = true;
      auto expr = solve(h.basis, h.restriction);  // restriction lands in solutions
      if (!expr) ok = false;
      if (ok && rank(h.restriction) != m.dim(d)) ok = false;  // injective
      if (ok && h.basis.cols() != m.dim(d)) ok = false;       // same dimension ⇒ bijective
      bool determined = n + d + bigN <= r.cutoff;
      rep.cells.push_back({n, d, ok, determined});
      if (determined && !ok) rep.closed = false;
    }
  rep.note = "verdict covers cells with n+d+" + std::to_string(bigN) +
             " <= cutoff; edge cells are truncation-indeterminate";
  return rep;
}

GradedPresentation presentation_of(const GradedModule& m, const GradedRing& r) {
  GradedPresentation p;
  for (int d = 0; d <= m.cutoff; ++d) {
    if (m.dim(d) == 0) continue;
    SpanBuilder covered(m.field, m.dim(d));
    for (int d2 = 0; d2 < d; ++d2) {
      if (m.dim(d2) == 0 || r.dim(d - d2) == 0) continue;
      covered.add_cols(m.act.at({d2, d - d2}));
    }
    for (int v = 0; v < m.dim(d) && covered.dim() < m.dim(d); ++v) {
      std::vector<Rat> e(m.dim(d), Rat(0));
      e[v] = 1;
      if (covered.add(e)) {
        p.gen_degrees.push_back(d);
        p.gen_lifts.push_back(std::move(e));
      }
    }
  }
  std::vector<Matrix> cover = presentation_cover(p, m, r);
  GradedModule freemod = GradedModule::free(r, p.gen_degrees);
  std::vector<std::vector<int>> offsets(r.cutoff + 1);
  for (int t = 0; t <= r.cutoff; ++t) {
    int off = 0;
    for (int dg : p.gen_degrees) {
      offsets[t].push_back(off);
      if (t >= dg) off += r.dim(t - dg);
    }
  }
  std::vector<SpanBuilder> covered_rel;
  for (int t = 0; t <= r.cutoff; ++t) covered_rel.emplace_back(m.field, freemod.dim(t));
  auto saturate = [&](int t, const std::vector<Rat>& v) {
    covered_rel[t].add(v);
    for (int j = 1; t + j <= r.cutoff; ++j) {
      if (r.dim(j) == 0) continue;
      const Matrix& a = freemod.act.at({t, j});
      for (int b = 0; b < r.dim(j); ++b) {
        std::vector<Rat> w(freemod.dim(t + j), Rat(0));
        for (int row = 0; row < freemod.dim(t + j); ++row) {
          Rat acc(0);
          for (int x = 0; x < freemod.dim(t); ++x) {
            const Rat& coeff = a.at(row, x * r.dim(j) + b);
            if (coeff != 0 && v[x] != 0) acc = m.field.add(acc, m.field.mul(coeff, v[x]));
          }
          w[row] = acc;
        }
        covered_rel[t + j].add(std::move(w));
      }
    }
  };
  for (int t = 0; t <= r.cutoff; ++t) {
    Matrix kb = kernel_basis(cover[t]);
    for (int c = 0; c < kb.cols(); ++c) {
      auto v = kb.col_vec(c);
      if (covered_rel[t].contains(v)) continue;
      p.rel_degrees.push_back(t);
      std::vector<std::vector<Rat>> entry(p.gen_degrees.size());
      for (std::size_t i = 0; i < p.gen_degrees.size(); ++i) {
        int dg = p.gen_degrees[i];
        if (t >= dg) {
          entry[i].assign(r.dim(t - dg), Rat(0));
          for (int x = 0; x < r.dim(t - dg); ++x) entry[i][x] = v[offsets[t][i] + x];
        }
      }
      p.rel_entries.push_back(std::move(entry));
      saturate(t, v);
    }
  }
  return p;
}

std::vector<Matrix> presentation_cover(const GradedPresentation& p, const GradedModule& m,
                                       const GradedRing& r) {
  std::vector<Matrix> cover;
  for (int t = 0; t <= r.cutoff; ++t) {
    int cols = 0;
    for (int dg : p.gen_degrees)
      if (t >= dg) cols += r.dim(t - dg);
    Matrix c(m.field, m.dim(t), cols);
    int off = 0;
    for (std::size_t i = 0; i < p.gen_degrees.size(); ++i) {
      int dg = p.gen_degrees[i];
      if (t < dg) continue;
      const Matrix& a = m.act.at({dg, t - dg});
      for (int x = 0; x < r.dim(t - dg); ++x)
        for (int row = 0; row < m.dim(t); ++row) {
          Rat acc(0);
          for (int g = 0; g < m.dim(dg); ++g) {
            const Rat& coeff = a.at(row, g * r.dim(t - dg) + x);
            if (coeff != 0 && p.gen_lifts[i][g] != 0)
              acc = m.field.add(acc, m.field.mul(coeff, p.gen_lifts[i][g]));
          }
          c.at(row, off + x) = acc;
        }
      off += r.dim(t - dg);
    }
    cover.push_back(std::move(c));
  }
  return cover;
}

GradedModule presented_module(const GradedPresentation& p, const GradedRing& r) {
  GradedModule freemod = GradedModule::free(r, p.gen_degrees);
  std::vector<SpanBuilder> rel;
  for (int t = 0; t <= r.cutoff; ++t) rel.emplace_back(r.field, freemod.dim(t));
  std::vector<std::vector<int>> offsets(r.cutoff + 1);
  for (int t = 0; t <= r.cutoff; ++t) {
    int off = 0;
    for (int dg : p.gen_degrees) {
      offsets[t].push_back(off);
      if (t >= dg) off += r.dim(t - dg);
    }
  }
  for (std::size_t j = 0; j < p.rel_degrees.size(); ++j) {
    int t = p.rel_degrees[j];
    std::vector<Rat> v(freemod.dim(t), Rat(0));
    for (std::size_t i = 0; i < p.gen_degrees.size(); ++i)
      for (std::size_t x = 0; x < p.rel_entries[j][i].size(); ++x)
        v[offsets[t][i] + static_cast<int>(x)] = p.rel_entries[j][i][x];
    rel[t].add(v);
    for (int k = 1; t + k <= r.cutoff; ++k) {
      if (r.dim(k) == 0) continue;
      const Matrix& a = freemod.act.at({t, k});
      for (int b = 0; b < r.dim(k); ++b) {
        std::vector<Rat> w(freemod.dim(t + k), Rat(0));
        for (int row = 0; row < freemod.dim(t + k); ++row) {
          Rat acc(0);
          for (int x = 0; x < freemod.dim(t); ++x) {
            const Rat& coeff = a.at(row, x * r.dim(k) + b);
            if (coeff != 0 && v[x] != 0) acc = r.field.add(acc, r.field.mul(coeff, v[x]));
          }
          w[row] = acc;
        }
        rel[t + k].add(std::move(w));
      }
    }
  }
  GradedModule q;
  q.field = r.field;
  q.cutoff = r.cutoff;
  std::vector<QuotientSpace> quots;
  for (int t = 0; t <= r.cutoff; ++t) {
    quots.emplace_back(r.field, freemod.dim(t), rel[t].basis());
    q.dims.push_back(quots[t].dim());
  }
  for (int t = 0; t <= r.cutoff; ++t)
    for (int k = 0; t + k <= r.cutoff; ++k) {
      Matrix a(r.field, q.dims[t + k], q.dims[t] * r.dim(k));
      const Matrix& fa = freemod.act.at({t, k});
      Matrix lift = quots[t].lift();
      for (int x = 0; x < q.dims[t]; ++x)
        for (int b = 0; b < r.dim(k); ++b) {
          std::vector<Rat> w(freemod.dim(t + k), Rat(0));
          for (int row = 0; row < freemod.dim(t + k); ++row) {
            Rat acc(0);
            for (int y = 0; y < freemod.dim(t); ++y) {
              const Rat& coeff = fa.at(row, y * r.dim(k) + b);
              if (coeff != 0 && lift.at(y, x) != 0)
                acc = r.field.add(acc, r.field.mul(coeff, lift.at(y, x)));
            }
            w[row] = acc;
          }
          auto pw = quots[t + k].project(w);
          for (int row = 0; row < q.dims[t + k]; ++row) a.at(row, x * r.dim(k) + b) = pw[row];
        }
      q.act[{t, k}] = std::move(a);
    }
  return q;
}

std::vector<Matrix> filtration_piece(const GradedModule& m, const GradedRing& r, int n) {
  std::vector<Matrix> levels;
  for (int t = 0; t <= m.cutoff; ++t) {
    if (t <= n) {
      levels.push_back(Matrix::identity(m.field, m.dim(t)));
      continue;
    }
    SpanBuilder sb(m.field, m.dim(t));
    if (m.dim(n) > 0 && r.dim(t - n) > 0) sb.add_cols(m.act.at({n, t - n}));
    levels.push_back(sb.basis());
  }
  return levels;
}

std::vector<Matrix> filtration_tail_piece(const GradedModule& m, const GradedRing& r, int n) {
  auto levels = filtration_piece(m, r, n);
  for (int t = 0; t < n && t <= m.cutoff; ++t) levels[t] = Matrix(m.field, m.dim(t), 0);
  return levels;
}

GradedModule suspension_slice(const GradedModule& m, const GradedRing& r, int n) {
  auto levels = filtration_tail_piece(m, r, n);
  GradedModule s;
  s.field = m.field;
  s.cutoff = m.cutoff - n;
  for (int k = 0; k <= s.cutoff; ++k) s.dims.push_back(levels[n + k].cols());
  for (int k = 0; k <= s.cutoff; ++k)
    for (int j = 0; k + j <= s.cutoff; ++j) {
      Matrix a(m.field, s.dims[k + j], s.dims[k] * r.dim(j));
      if (s.dims[k + j] > 0 && s.dims[k] > 0 && r.dim(j) > 0) {
        const Matrix& act = m.act.at({n + k, j});
        Matrix cols(m.field, m.dim(n + k + j), s.dims[k] * r.dim(j));
        for (int x = 0; x < s.dims[k]; ++x)
          for (int b = 0; b < r.dim(j); ++b)
            for (int row = 0; row < m.dim(n + k + j); ++row) {
              Rat acc(0);
              for (int y = 0; y < m.dim(n + k); ++y) {
                const Rat& coeff = act.at(row, y * r.dim(j) + b);
                if (coeff != 0 && levels[n + k].at(y, x) != 0)
                  acc = m.field.add(acc, m.field.mul(coeff, levels[n + k].at(y, x)));
              }
              cols.at(row, x * r.dim(j) + b) = acc;
            }
        auto sol = solve(levels[n + k + j], cols);
        if (!sol) throw InvariantViolation("suspension slice not action-stable");
        a = *sol;
      }
      s.act[{k, j}] = std::move(a);
    }
  return s;
}

GradedModule random_fg_module(const GradedRing& r, Rng& rng, int max_gens, int max_gen_degree,
                              int max_rels) {
  GradedPresentation p;
  int ngens = static_cast<int>(rng.uniform(1, max_gens));
  for (int i = 0; i < ngens; ++i)
    p.gen_degrees.push_back(static_cast<int>(rng.uniform(0, max_gen_degree)));
  std::sort(p.gen_degrees.begin(), p.gen_degrees.end());
  int nrels = static_cast<int>(rng.uniform(0, max_rels));
  for (int j = 0; j < nrels; ++j) {
    int mindeg = *std::min_element(p.gen_degrees.begin(), p.gen_degrees.end());
    int t = static_cast<int>(rng.uniform(mindeg + 1, std::min(r.cutoff, mindeg + 3)));
    std::vector<std::vector<Rat>> entry(p.gen_degrees.size());
    for (std::size_t i = 0; i < p.gen_degrees.size(); ++i)
      if (t >= p.gen_degrees[i]) {
        entry[i].assign(r.dim(t - p.gen_degrees[i]), Rat(0));
        for (auto& x : entry[i]) x = rng.small_int();
      }
    p.rel_degrees.push_back(t);
    p.rel_entries.push_back(std::move(entry));
  }
  return presented_module(p, r);
}

}  // namespace symqcs
