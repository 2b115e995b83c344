#include "symqcs/emod.hpp"

#include <algorithm>

namespace symqcs {

const Matrix& EModule::action(int n, int m) const {
  auto it = actions.find({n, m});
  if (it == actions.end()) throw ArgError("module action cell out of range");
  return it->second;
}

std::vector<Rat> EModule::act(int deg_m, const std::vector<Rat>& m, int deg_e,
                              const std::vector<Rat>& e) const {
  const Matrix& a = action(deg_m, deg_e);
  const Field& f = field();
  int de = algebra->dim(deg_e);
  std::vector<Rat> out(dim(deg_m + deg_e), Rat(0));
  for (int i = 0; i < dim(deg_m); ++i) {
    if (m[i] == 0) continue;
    for (int j = 0; j < de; ++j) {
      if (e[j] == 0) continue;
      Rat c = f.mul(m[i], e[j]);
      for (int r = 0; r < a.rows(); ++r) {
        const Rat& v = a.at(r, i * de + j);
        if (v != 0) out[r] = f.add(out[r], f.mul(v, c));
      }
    }
  }
  return out;
}

AxiomReport check_module_axioms(const EModule& m) {
  AxiomReport rep;
  const SymAlgebra& e = *m.algebra;
  const Field& f = m.field();
  int N = m.cutoff();
  for (int n = 0; n <= N; ++n)
    for (int k = 0; n + k <= N; ++k) {
      if (m.dim(n) == 0 || e.dim(k) == 0) continue;
      const Matrix& a = m.action(n, k);
      bool bad = false;
      for (int i = 1; i < n && !bad; ++i) {
        Matrix lhs = a * m.seq.levels[n].gen_actions[i - 1].kron(Matrix::identity(f, e.dim(k)));
        Matrix rhs = action_of(m.seq.levels[n + k],
                               block_sum(adjacent_transposition(n, i), Permutation::identity(k))) *
                     a;
        if (!(lhs == rhs)) bad = true;
      }
      for (int j = 1; j < k && !bad; ++j) {
        Matrix lhs = a * Matrix::identity(f, m.dim(n)).kron(e.seq.levels[k].gen_actions[j - 1]);
        Matrix rhs = action_of(m.seq.levels[n + k],
                               block_sum(Permutation::identity(n), adjacent_transposition(k, j))) *
                     a;
        if (!(lhs == rhs)) bad = true;
      }
      if (bad) rep.violations.push_back({"equivariance", n, k, -1});
    }
  for (int n = 0; n <= N; ++n)
    for (int k = 0; n + k <= N; ++k)
      for (int p = 0; n + k + p <= N; ++p) {
        if (m.dim(n) == 0 || e.dim(k) == 0 || e.dim(p) == 0) continue;
        Matrix lhs = m.action(n + k, p) * m.action(n, k).kron(Matrix::identity(f, e.dim(p)));
        Matrix rhs = m.action(n, k + p) * Matrix::identity(f, m.dim(n)).kron(e.mult(k, p));
        if (!(lhs == rhs)) rep.violations.push_back({"associativity", n, k, p});
      }
  for (int n = 0; n <= N; ++n) {
    if (m.dim(n) == 0) continue;
    Matrix right = m.action(n, 0) * Matrix::identity(f, m.dim(n)).kron(e.unit);
    if (!right.is_identity()) rep.violations.push_back({"unit", n, -1, -1});
  }
  return rep;
}

bool EModuleMap::is_valid() const {
  if (!components_equivariant(source.seq, target.seq, components)) return false;
  const SymAlgebra& e = *source.algebra;
  const Field& f = source.field();
  for (int n = 0; n <= source.cutoff(); ++n)
    for (int k = 0; n + k <= source.cutoff(); ++k) {
      if (source.dim(n) == 0 || e.dim(k) == 0) continue;
      Matrix lhs = components[n + k] * source.action(n, k);
      Matrix rhs = target.action(n, k) * components[n].kron(Matrix::identity(f, e.dim(k)));
      if (!(lhs == rhs)) return false;
    }
  return true;
}

bool EModuleMap::is_mono() const {
  for (int n = 0; n <= source.cutoff(); ++n)
    if (kernel_basis(components[n]).cols() > 0) return false;
  return true;
}

bool EModuleMap::is_iso() const {
  for (int n = 0; n <= source.cutoff(); ++n) {
    if (source.dim(n) != target.dim(n)) return false;
    if (rank(components[n]) != source.dim(n)) return false;
  }
  return true;
}

EModuleMap compose(const EModuleMap& g, const EModuleMap& f) {
  EModuleMap h;
  h.source = f.source;
  h.target = g.target;
  for (std::size_t n = 0; n < f.components.size(); ++n)
    h.components.push_back(g.components[n] * f.components[n]);
  return h;
}

EModule algebra_as_module(std::shared_ptr<const SymAlgebra> e) {
  EModule m;
  m.algebra = e;
  m.seq = e->seq;
  m.actions = e->mults;
  return m;
}

EModule free_module(std::shared_ptr<const SymAlgebra> e, int m) {
  if (m > e->cutoff()) throw ArgError("free_module degree exceeds cutoff");
  const Field& f = e->field();
  EModule out;
  out.algebra = e;
  out.seq = SymSeq::zero(f, e->cutoff());
  for (int n = m; n <= e->cutoff(); ++n) {
    long long d = (factorial(n) / factorial(n - m)) * e->dim(n - m);
    if (d > max_level_dim()) throw ConfigError("free module level exceeds SYMQCS_MAX_DIM");
    out.seq.levels[n] = induce_tail(n, e->seq.levels[n - m]);
  }
  for (int n = 0; n <= e->cutoff(); ++n)
    for (int k = 0; n + k <= e->cutoff(); ++k) {
      int de = e->dim(k);
      Matrix a(f, out.dim(n + k), out.dim(n) * de);
      if (n >= m && out.dim(n) > 0 && de > 0) {
        auto reps = coset_reps(n, n - m);
        int inner = e->dim(n - m);
        for (std::size_t r = 0; r < reps.size(); ++r) {
          Permutation rr = block_sum(reps[r], Permutation::identity(k));
          TailFactor fac = factor_tail(rr, n + k, n + k - m);
          Matrix h = action_of(e->seq.levels[n + k - m], fac.h);
          const Matrix& mu = e->mult(n - m, k);
          // column ((r,b), y) ↦ rows (fac.rep, h·μ(b⊗y))
          Matrix hmu = h * mu;
          for (int b = 0; b < inner; ++b)
            for (int y = 0; y < de; ++y)
              for (int z = 0; z < e->dim(n + k - m); ++z) {
                const Rat& v = hmu.at(z, b * de + y);
                if (v != 0)
                  a.at(fac.rep_index * e->dim(n + k - m) + z,
                       (static_cast<int>(r) * inner + b) * de + y) = v;
              }
        }
      }
      out.actions[{n, k}] = std::move(a);
    }
  return out;
}

EModule direct_sum(const EModule& a, const EModule& b) {
  if (a.algebra != b.algebra && !(*a.algebra == *b.algebra))
    throw ArgError("direct_sum: algebra mismatch");
  EModule s;
  s.algebra = a.algebra;
  s.seq = SymSeq::zero(a.field(), a.cutoff());
  for (int n = 0; n <= a.cutoff(); ++n)
    s.seq.levels[n] = direct_sum(a.seq.levels[n], b.seq.levels[n]);
  const Field& f = a.field();
  for (int n = 0; n <= a.cutoff(); ++n)
    for (int k = 0; n + k <= a.cutoff(); ++k) {
      int de = a.algebra->dim(k);
      Matrix m(f, s.dim(n + k), s.dim(n) * de);
      const Matrix& aa = a.action(n, k);
      const Matrix& bb = b.action(n, k);
      for (int i = 0; i < a.dim(n); ++i)
        for (int y = 0; y < de; ++y)
          for (int r = 0; r < a.dim(n + k); ++r) {
            const Rat& v = aa.at(r, i * de + y);
            if (v != 0) m.at(r, i * de + y) = v;
          }
      for (int i = 0; i < b.dim(n); ++i)
        for (int y = 0; y < de; ++y)
          for (int r = 0; r < b.dim(n + k); ++r) {
            const Rat& v = bb.at(r, i * de + y);
            if (v != 0) m.at(a.dim(n + k) + r, (a.dim(n) + i) * de + y) = v;
          }
      s.actions[{n, k}] = std::move(m);
    }
  return s;
}

EModule shift(const EModule& m, int k) {
  if (k < 0 || k > m.cutoff()) throw ArgError("shift out of range");
  EModule s;
  s.algebra = m.algebra;
  s.seq = SymSeq::zero(m.field(), m.cutoff() - k);
  for (int n = 0; n <= s.cutoff(); ++n) s.seq.levels[n] = restrict_tail(m.seq.levels[k + n], k);
  for (int n = 0; n <= s.cutoff(); ++n)
    for (int j = 0; n + j <= s.cutoff(); ++j) s.actions[{n, j}] = m.action(k + n, j);
  return s;
}

EModuleMap free_map(std::shared_ptr<const SymAlgebra> e, int m, const EModule& target,
                    const std::vector<Rat>& gen_image) {
  EModuleMap out;
  out.source = free_module(e, m);
  out.target = target;
  const Field& f = e->field();
  for (int n = 0; n <= e->cutoff(); ++n) {
    Matrix comp(f, target.dim(n), out.source.dim(n));
    if (n >= m && out.source.dim(n) > 0) {
      auto reps = coset_reps(n, n - m);
      int inner = e->dim(n - m);
      for (std::size_t r = 0; r < reps.size(); ++r) {
        Matrix rho = action_of(target.seq.levels[n], reps[r]);
        for (int b = 0; b < inner; ++b) {
          std::vector<Rat> eb(inner, Rat(0));
          eb[b] = 1;
          auto xb = target.act(m, gen_image, n - m, eb);
          for (int row = 0; row < target.dim(n); ++row) {
            Rat acc(0);
            for (int z = 0; z < target.dim(n); ++z)
              if (rho.at(row, z) != 0 && xb[z] != 0)
                acc = f.add(acc, f.mul(rho.at(row, z), xb[z]));
            comp.at(row, static_cast<int>(r) * inner + b) = acc;
          }
        }
      }
    }
    out.components.push_back(std::move(comp));
  }
  return out;
}

EModule day_module(const EModule& m, const EModule& n) {
  EModule out;
  out.algebra = m.algebra;
  out.seq = day_tensor(m.seq, n.seq);
  const SymAlgebra& e = *m.algebra;
  const Field& f = m.field();
  for (int t = 0; t <= m.cutoff(); ++t)
    for (int k = 0; t + k <= m.cutoff(); ++k) {
      int de = e.dim(k);
      auto src_blocks = day_layout(m.seq, n.seq, t);
      auto tgt_blocks = day_layout(m.seq, n.seq, t + k);
      Matrix a(f, out.dim(t + k), out.dim(t) * de);
      for (const auto& b : src_blocks) {
        const DayBlock* tb = nullptr;
        for (const auto& x : tgt_blocks)
          if (x.p == b.p && x.q == b.q + k) tb = &x;
        if (!tb || de == 0) continue;
        auto reps = shuffle_reps(b.p, b.q);
        for (int r = 0; r < b.num_shuffles; ++r) {
          Permutation w = block_sum(reps[r], Permutation::identity(k));
          ShuffleFactor fac = factor_shuffle(w, b.p, b.q + k);
          Matrix rho_m = action_of(m.seq.levels[b.p], fac.sigma);
          Matrix rho_n = action_of(n.seq.levels[b.q + k], fac.tau);
          const Matrix& alpha = n.action(b.q, k);
          Matrix rho_alpha = rho_n * alpha;  // N_q⊗E_k → N_{q+k}, then τ
          for (int i = 0; i < b.dim_m; ++i)
            for (int i2 = 0; i2 < b.dim_m; ++i2) {
              if (rho_m.at(i2, i) == 0) continue;
              for (int j = 0; j < b.dim_n; ++j)
                for (int y = 0; y < de; ++y)
                  for (int j2 = 0; j2 < tb->dim_n; ++j2) {
                    const Rat& v = rho_alpha.at(j2, j * de + y);
                    if (v == 0) continue;
                    a.at(tb->index(fac.rep_index, i2, j2), b.index(r, i, j) * de + y) =
                        f.add(a.at(tb->index(fac.rep_index, i2, j2), b.index(r, i, j) * de + y),
                              f.mul(rho_m.at(i2, i), v));
                  }
            }
        }
      }
      out.actions[{t, k}] = std::move(a);
    }
  return out;
}

std::vector<Matrix> total_action_components(const EModule& m) {
  const SymAlgebra& e = *m.algebra;
  SymSeq prod = day_tensor(m.seq, e.seq);
  std::vector<Matrix> comps;
  for (int t = 0; t <= m.cutoff(); ++t) {
    auto blocks = day_layout(m.seq, e.seq, t);
    Matrix a(m.field(), m.dim(t), prod.dim(t));
    for (const auto& b : blocks) {
      auto reps = shuffle_reps(b.p, b.q);
      const Matrix& alpha = m.action(b.p, b.q);
      for (int r = 0; r < b.num_shuffles; ++r) {
        Matrix rho = action_of(m.seq.levels[t], reps[r]) * alpha;
        for (int i = 0; i < b.dim_m; ++i)
          for (int j = 0; j < b.dim_n; ++j)
            for (int row = 0; row < m.dim(t); ++row) {
              const Rat& v = rho.at(row, i * b.dim_n + j);
              if (v != 0) a.at(row, b.index(r, i, j)) = v;
            }
      }
    }
    comps.push_back(std::move(a));
  }
  return comps;
}

std::vector<Matrix> total_left_action_components(const EModule& n) {
  const SymAlgebra& e = *n.algebra;
  auto tw = twist_components(e.seq, n.seq);
  auto act = total_action_components(n);
  std::vector<Matrix> comps;
  for (int t = 0; t <= n.cutoff(); ++t) comps.push_back(act[t] * tw[t]);
  return comps;
}

Smash smash_over_e(const EModule& m, const EModule& n) {
  if (!(*m.algebra == *n.algebra)) throw ArgError("smash_over_e: algebra mismatch");
  const SymAlgebra& e = *m.algebra;
  EModule emod = algebra_as_module(m.algebra);
  EModule mn = day_module(m, n);
  SymSeq me = day_tensor(m.seq, e.seq);
  SymSeq en = day_tensor(e.seq, n.seq);

  // route 1: (M∧E)∧N → M∧N via the right action on M
  auto act_m = total_action_components(m);
  std::vector<Matrix> id_n;
  for (int t = 0; t <= m.cutoff(); ++t) id_n.push_back(Matrix::identity(m.field(), n.dim(t)));
  auto route1 = day_tensor_of_maps(me, n.seq, m.seq, n.seq, act_m, id_n);

  // route 2: (M∧E)∧N → M∧(E∧N) → M∧N via the twisted left action on N
  auto assoc = associator_components(m.seq, e.seq, n.seq);
  auto lambda = total_left_action_components(n);
  std::vector<Matrix> id_m;
  for (int t = 0; t <= m.cutoff(); ++t) id_m.push_back(Matrix::identity(m.field(), m.dim(t)));
  auto through = day_tensor_of_maps(m.seq, en, m.seq, n.seq, id_m, lambda);

  Smash s;
  s.mod.algebra = m.algebra;
  s.mod.seq = SymSeq::zero(m.field(), m.cutoff());
  std::vector<QuotientSpace> quots;
  for (int t = 0; t <= m.cutoff(); ++t) {
    Matrix d = route1[t] - through[t] * assoc[t];
    quots.emplace_back(m.field(), mn.dim(t), image_basis(d));
    SnModule lvl;
    lvl.n = t;
    lvl.dim = quots[t].dim();
    lvl.field = m.field();
    for (int g = 0; g < std::max(0, t - 1); ++g)
      lvl.gen_actions.push_back(quots[t].induced(mn.seq.levels[t].gen_actions[g]));
    s.mod.seq.levels[t] = std::move(lvl);
    s.project.push_back(quots[t].projection());
    s.lift.push_back(quots[t].lift());
  }
  const Field& f = m.field();
  for (int t = 0; t <= m.cutoff(); ++t)
    for (int k = 0; t + k <= m.cutoff(); ++k) {
      int de = e.dim(k);
      Matrix a(f, s.mod.dim(t + k), s.mod.dim(t) * de);
      if (s.mod.dim(t) > 0 && de > 0) {
        const Matrix& big = mn.action(t, k);
        // a = project_{t+k} ∘ big ∘ (lift_t ⊗ I_{E_k})
        Matrix lifted = big * s.lift[t].kron(Matrix::identity(f, de));
        a = s.project[t + k] * lifted;
      }
      s.mod.actions[{t, k}] = std::move(a);
    }
  return s;
}

EModuleMap smash_map_right(const EModule& m, const EModuleMap& f, const Smash& sm,
                           const Smash& sn) {
  std::vector<Matrix> id_m;
  for (int t = 0; t <= m.cutoff(); ++t) id_m.push_back(Matrix::identity(m.field(), m.dim(t)));
  auto mid = day_tensor_of_maps(m.seq, f.source.seq, m.seq, f.target.seq, id_m, f.components);
  EModuleMap out;
  out.source = sm.mod;
  out.target = sn.mod;
  for (int t = 0; t <= m.cutoff(); ++t)
    out.components.push_back(sn.project[t] * mid[t] * sm.lift[t]);
  return out;
}

EModuleMap free_smash_iso(std::shared_ptr<const SymAlgebra> e, int m, int n, const Smash& s) {
  // generator of F_{m+n}E ↦ class of (identity shuffle, gen_m ⊗ gen_n)
  int level = m + n;
  auto fm = free_module(e, m);
  auto fn = free_module(e, n);
  auto blocks = day_layout(fm.seq, fn.seq, level);
  const DayBlock* b = nullptr;
  for (const auto& x : blocks)
    if (x.p == m && x.q == n) b = &x;
  if (!b) throw InvariantViolation("free_smash_iso: missing (m,n) block");
  std::vector<Rat> v(s.project[level].cols(), Rat(0));
  v[b->index(0, 0, 0)] = 1;
  std::vector<Rat> img(s.mod.dim(level), Rat(0));
  for (int r = 0; r < s.mod.dim(level); ++r) {
    Rat acc(0);
    for (int c = 0; c < s.project[level].cols(); ++c)
      if (s.project[level].at(r, c) != 0 && v[c] != 0)
        acc = e->field().add(acc, e->field().mul(s.project[level].at(r, c), v[c]));
    img[r] = acc;
  }
  return free_map(e, level, s.mod, img);
}

EModuleMap smash_unit_left(const EModule& m, const Smash& s) {
  auto lambda = total_left_action_components(m);
  EModuleMap out;
  out.source = s.mod;
  out.target = m;
  for (int t = 0; t <= m.cutoff(); ++t) out.components.push_back(lambda[t] * s.lift[t]);
  return out;
}

EModuleMap smash_unit_right(const EModule& m, const Smash& s) {
  auto act = total_action_components(m);
  EModuleMap out;
  out.source = s.mod;
  out.target = m;
  for (int t = 0; t <= m.cutoff(); ++t) out.components.push_back(act[t] * s.lift[t]);
  return out;
}

HomLevel internal_hom_level(const EModule& m, const EModule& n, int k) {
  const SymAlgebra& e = *m.algebra;
  const Field& f = m.field();
  HomLevel h;
  h.k = k;
  h.valid_up_to = m.cutoff() - k;
  int total = 0;
  for (int t = 0; t <= h.valid_up_to; ++t) {
    h.level_offsets.push_back(total);
    h.level_shapes.push_back({n.dim(t + k), m.dim(t)});
    total += n.dim(t + k) * m.dim(t);
  }
  auto var = [&](int t, int row, int col) {
    return h.level_offsets[t] + row * h.level_shapes[t].second + col;
  };
  std::vector<std::vector<Rat>> rows;
  auto push_nonzero = [&](std::vector<Rat>&& eq) {
    for (const auto& c : eq)
      if (c != 0) {
        rows.push_back(std::move(eq));
        return;
      }
  };
  // Σ_t-equivariance: φ_t ρ_M(s_i) = ρ_{N_{t+k}}(id_k × s_i) φ_t
  for (int t = 0; t <= h.valid_up_to; ++t) {
    if (m.dim(t) == 0 || n.dim(t + k) == 0) continue;
    for (int i = 1; i < t; ++i) {
      const Matrix& gm = m.seq.levels[t].gen_actions[i - 1];
      Matrix gn = action_of(n.seq.levels[t + k],
                            block_sum(Permutation::identity(k), adjacent_transposition(t, i)));
      for (int row = 0; row < n.dim(t + k); ++row)
        for (int col = 0; col < m.dim(t); ++col) {
          std::vector<Rat> eq(total, Rat(0));
          for (int x = 0; x < m.dim(t); ++x)
            if (gm.at(x, col) != 0)
              eq[var(t, row, x)] = f.add(eq[var(t, row, x)], gm.at(x, col));
          for (int y = 0; y < n.dim(t + k); ++y)
            if (gn.at(row, y) != 0)
              eq[var(t, y, col)] = f.sub(eq[var(t, y, col)], gn.at(row, y));
          push_nonzero(std::move(eq));
        }
    }
  }
  // action compatibility: φ_{t+j} α^M_{t,j} = α^{N[k]}_{t,j} (φ_t ⊗ id_{E_j})
  for (int t = 0; t <= h.valid_up_to; ++t)
    for (int j = 1; t + j <= h.valid_up_to; ++j) {
      if (m.dim(t) == 0 || e.dim(j) == 0 || n.dim(t + j + k) == 0) continue;
      const Matrix& am = m.action(t, j);
      const Matrix& an = n.action(t + k, j);
      for (int col_m = 0; col_m < m.dim(t); ++col_m)
        for (int col_e = 0; col_e < e.dim(j); ++col_e)
          for (int row = 0; row < n.dim(t + j + k); ++row) {
            std::vector<Rat> eq(total, Rat(0));
            for (int x = 0; x < m.dim(t + j); ++x) {
              const Rat& c = am.at(x, col_m * e.dim(j) + col_e);
              if (c != 0) eq[var(t + j, row, x)] = f.add(eq[var(t + j, row, x)], c);
            }
            for (int y = 0; y < n.dim(t + k); ++y) {
              const Rat& c = an.at(row, y * e.dim(j) + col_e);
              if (c != 0) eq[var(t, y, col_m)] = f.sub(eq[var(t, y, col_m)], c);
            }
            push_nonzero(std::move(eq));
          }
    }
  Matrix cons(f, static_cast<int>(rows.size()), total);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (int c = 0; c < total; ++c) cons.at(static_cast<int>(i), c) = rows[i][c];
  h.solution_basis = kernel_basis(cons);
  // Σ_k-module structure through the action on N[k]
  h.rep.n = k;
  h.rep.dim = h.solution_basis.cols();
  h.rep.field = f;
  for (int i = 1; i < k; ++i) {
    Matrix big(f, total, total);
    for (int t = 0; t <= h.valid_up_to; ++t) {
      if (m.dim(t) == 0 || n.dim(t + k) == 0) continue;
      Matrix g = action_of(n.seq.levels[t + k],
                           block_sum(adjacent_transposition(k, i), Permutation::identity(t)));
      for (int row = 0; row < n.dim(t + k); ++row)
        for (int row2 = 0; row2 < n.dim(t + k); ++row2) {
          if (g.at(row2, row) == 0) continue;
          for (int col = 0; col < m.dim(t); ++col)
            big.at(var(t, row2, col), var(t, row, col)) = g.at(row2, row);
        }
    }
    auto x = solve(h.solution_basis, big * h.solution_basis);
    if (!x) throw InvariantViolation("hom space not Σ_k-stable");
    h.rep.gen_actions.push_back(std::move(*x));
  }
  return h;
}

Matrix hom_component(const HomLevel& h, const EModule& m, const EModule& n, int j, int t) {
  Matrix comp(m.field(), h.level_shapes[t].first, h.level_shapes[t].second);
  for (int row = 0; row < comp.rows(); ++row)
    for (int col = 0; col < comp.cols(); ++col)
      comp.at(row, col) =
          h.solution_basis.at(h.level_offsets[t] + row * comp.cols() + col, j);
  return comp;
}

Matrix hom_evaluation_at_generator(const HomLevel& h, const EModule& src_free, int m,
                                   const EModule& n) {
  // generator of F_mE sits at index 0 of level m
  int rows = n.dim(m + h.k);
  Matrix ev(n.field(), rows, h.solution_basis.cols());
  for (int j = 0; j < h.solution_basis.cols(); ++j)
    for (int row = 0; row < rows; ++row)
      ev.at(row, j) = h.solution_basis.at(h.level_offsets[m] + row * src_free.dim(m) + 0, j);
  return ev;
}

Matrix hom_structure_map(const HomLevel& hk, const HomLevel& hkl, const EModule& m,
                         const EModule& n, int l) {
  const SymAlgebra& e = *m.algebra;
  const Field& f = m.field();
  int k = hk.k;
  int de = e.dim(l);
  int total_target = hkl.solution_basis.rows();
  Matrix stacked(f, total_target, hk.rep.dim * de);
  for (int j = 0; j < hk.rep.dim; ++j)
    for (int y = 0; y < de; ++y) {
      std::vector<Rat> ey(de, Rat(0));
      ey[y] = 1;
      for (int t = 0; t <= hkl.valid_up_to; ++t) {
        if (m.dim(t) == 0 || n.dim(t + k + l) == 0) continue;
        Matrix phi_t = hom_component(hk, m, n, j, t);
        // ψ_t = ρ(id_k×χ_{t,l}) ∘ α^N_{k+t,l} ∘ (φ_t ⊗ y): right multiplication
        // with the t-block moved past the new l-block. N[k][l] = N[k+l] already
        // has its shift letters in order, so no further relabel is applied.
        Matrix shuffled = action_of(n.seq.levels[k + t + l],
                                    block_sum(Permutation::identity(k), chi(t, l)));
        for (int col = 0; col < m.dim(t); ++col) {
          std::vector<Rat> fv(n.dim(t + k), Rat(0));
          for (int row = 0; row < n.dim(t + k); ++row) fv[row] = phi_t.at(row, col);
          auto prod = n.act(t + k, fv, l, ey);
          for (int row = 0; row < n.dim(t + k + l); ++row) {
            Rat acc(0);
            for (int z = 0; z < n.dim(t + k + l); ++z)
              if (shuffled.at(row, z) != 0 && prod[z] != 0)
                acc = f.add(acc, f.mul(shuffled.at(row, z), prod[z]));
            stacked.at(hkl.level_offsets[t] + row * m.dim(t) + col, j * de + y) = acc;
          }
        }
      }
    }
  auto x = solve(hkl.solution_basis, stacked);
  if (!x) throw InvariantViolation("hom structure map leaves the solution space");
  return *x;
}

EModuleMap counit_map(std::shared_ptr<const SymAlgebra> e, const VResult& v,
                      const GradedPresentation& pres, const EModule& target) {
  std::vector<EModuleMap> gen_maps;
  for (std::size_t i = 0; i < pres.gen_degrees.size(); ++i)
    gen_maps.push_back(free_map(e, pres.gen_degrees[i], target, pres.gen_lifts[i]));
  EModuleMap out;
  out.source = v.mod;
  out.target = target;
  for (int t = 0; t <= e->cutoff(); ++t) {
    Matrix cover(e->field(), target.dim(t), 0);
    for (const auto& gm : gen_maps) cover = cover.hcat(gm.components[t]);
    out.components.push_back(cover * v.lift[t]);
  }
  return out;
}

std::vector<Matrix> phi_map(const EModule& m, int k, bool with_shuffles) {
  const SymAlgebra& e = *m.algebra;
  const Field& f = m.field();
  std::vector<Matrix> comps;
  for (int t = 0; t + k <= m.cutoff(); ++t) {
    Matrix c = m.action(t, k) * swap_matrix(f, e.dim(k), m.dim(t));
    if (with_shuffles && m.dim(t + k) > 0)
      c = action_of(m.seq.levels[t + k], chi(t, k)) * c;
    comps.push_back(std::move(c));
  }
  return comps;
}

GradedModule u_functor(const EModule& m) {
  GradedModule g;
  g.field = m.field();
  g.cutoff = m.cutoff();
  for (int n = 0; n <= m.cutoff(); ++n) g.dims.push_back(m.dim(n));
  g.act = m.actions;
  return g;
}

GradedRing u_ring(const SymAlgebra& e) { return GradedRing::from_algebra(e); }

VResult v_functor(std::shared_ptr<const SymAlgebra> e, const GradedPresentation& pres) {
  const Field& f = e->field();
  int cutoff = e->cutoff();
  // big free module ⊕_i F_{n_i}E and block offsets per level
  EModule fs;
  bool first = true;
  std::vector<EModule> gensmods;
  for (int d : pres.gen_degrees) gensmods.push_back(free_module(e, d));
  if (gensmods.empty()) {
    VResult out;
    out.mod.algebra = e;
    out.mod.seq = SymSeq::zero(f, cutoff);
    for (int t = 0; t <= cutoff; ++t)
      for (int k = 0; t + k <= cutoff; ++k)
        out.mod.actions[{t, k}] = Matrix(f, 0, 0);
    for (int t = 0; t <= cutoff; ++t) {
      out.project.push_back(Matrix(f, 0, 0));
      out.lift.push_back(Matrix(f, 0, 0));
      out.relation_images.push_back(Matrix(f, 0, 0));
    }
    return out;
  }
  for (const auto& g : gensmods) {
    if (first) {
      fs = g;
      first = false;
    } else
      fs = direct_sum(fs, g);
  }
  std::vector<std::vector<int>> offsets(cutoff + 1);
  for (int t = 0; t <= cutoff; ++t) {
    int off = 0;
    for (const auto& g : gensmods) {
      offsets[t].push_back(off);
      off += g.dim(t);
    }
  }
  // relation map ⊕_j F_{m_j}E → FS: generator j ↦ Σ_i (identity coset, r_{ij}),
  // extended freely; its image is the relation submodule
  std::vector<EModuleMap> relmaps;
  for (std::size_t j = 0; j < pres.rel_degrees.size(); ++j) {
    int mj = pres.rel_degrees[j];
    std::vector<Rat> img(fs.dim(mj), Rat(0));
    for (std::size_t i = 0; i < pres.gen_degrees.size(); ++i) {
      int ni = pres.gen_degrees[i];
      if (mj < ni || pres.rel_entries[j][i].empty()) continue;
      // identity tail-coset of F_{n_i}E_{m_j} is rep index 0; entry coordinates fill it
      for (std::size_t x = 0; x < pres.rel_entries[j][i].size(); ++x)
        img[offsets[mj][i] + static_cast<int>(x)] =
            f.add(img[offsets[mj][i] + static_cast<int>(x)], pres.rel_entries[j][i][x]);
    }
    relmaps.push_back(free_map(e, mj, fs, img));
  }
  std::vector<Matrix> relation_images;
  for (int t = 0; t <= cutoff; ++t) {
    Matrix cols(f, fs.dim(t), 0);
    for (const auto& rm : relmaps) cols = cols.hcat(rm.components[t]);
    relation_images.push_back(std::move(cols));
  }
  VResult out;
  out.gen_degrees = pres.gen_degrees;
  out.relation_images = relation_images;
  out.mod.algebra = e;
  out.mod.seq = SymSeq::zero(f, cutoff);
  std::vector<QuotientSpace> quots;
  for (int t = 0; t <= cutoff; ++t) {
    quots.emplace_back(f, fs.dim(t), image_basis(relation_images[t]));
    SnModule lvl;
    lvl.n = t;
    lvl.dim = quots[t].dim();
    lvl.field = f;
    for (int g = 0; g < std::max(0, t - 1); ++g)
      lvl.gen_actions.push_back(quots[t].induced(fs.seq.levels[t].gen_actions[g]));
    out.mod.seq.levels[t] = std::move(lvl);
    out.project.push_back(quots[t].projection());
    out.lift.push_back(quots[t].lift());
  }
  for (int t = 0; t <= cutoff; ++t)
    for (int k = 0; t + k <= cutoff; ++k) {
      int de = e->dim(k);
      Matrix a(f, out.mod.dim(t + k), out.mod.dim(t) * de);
      if (out.mod.dim(t) > 0 && de > 0)
        a = out.project[t + k] * fs.action(t, k) * out.lift[t].kron(Matrix::identity(f, de));
      out.mod.actions[{t, k}] = std::move(a);
    }
  return out;
}

static bool algebra_has_trivial_actions(const SymAlgebra& e) {
  for (int n = 0; n <= e.cutoff(); ++n)
    for (const auto& g : e.seq.levels[n].gen_actions)
      if (!g.is_identity()) return false;
  return true;
}

EModule suspension_trivial(std::shared_ptr<const SymAlgebra> e, int degree, int base_dim) {
  if (!algebra_has_trivial_actions(*e))
    throw ArgError("suspension_trivial requires a trivial-action algebra");
  const Field& f = e->field();
  EModule m;
  m.algebra = e;
  m.seq = SymSeq::zero(f, e->cutoff());
  for (int t = degree; t <= e->cutoff(); ++t)
    m.seq.levels[t] = SnModule::trivial(f, t, base_dim * e->dim(t - degree));
  for (int t = 0; t <= e->cutoff(); ++t)
    for (int k = 0; t + k <= e->cutoff(); ++k) {
      if (t < degree || m.dim(t) == 0) {
        m.actions[{t, k}] = Matrix(f, m.dim(t + k), m.dim(t) * e->dim(k));
        continue;
      }
      m.actions[{t, k}] =
          Matrix::identity(f, base_dim).kron(e->mult(t - degree, k));
    }
  return m;
}

EModule suspension_tail(std::shared_ptr<const SymAlgebra> e, int degree) {
  const Field& f = e->field();
  // generated-in-degree check within the window
  for (int t = degree; t <= e->cutoff(); ++t) {
    if (e->dim(t) == 0) continue;
    SpanBuilder sb(f, e->dim(t));
    if (t == degree)
      sb.add_cols(Matrix::identity(f, e->dim(t)));
    else if (e->dim(degree) > 0 && e->dim(t - degree) > 0)
      sb.add_cols(e->mult(degree, t - degree));
    if (sb.dim() < e->dim(t))
      throw ArgError("suspension_tail: E_{>=n} is not generated in degree n within the window");
  }
  EModule m;
  m.algebra = e;
  m.seq = SymSeq::zero(f, e->cutoff());
  for (int t = degree; t <= e->cutoff(); ++t) m.seq.levels[t] = e->seq.levels[t];
  for (int t = 0; t <= e->cutoff(); ++t)
    for (int k = 0; t + k <= e->cutoff(); ++k) {
      if (t < degree)
        m.actions[{t, k}] = Matrix(f, m.dim(t + k), 0);
      else
        m.actions[{t, k}] = e->mult(t, k);
    }
  return m;
}

AMap a_map(std::shared_ptr<const SymAlgebra> e, int n) {
  const Field& f = e->field();
  AMap out;
  if (n == 0) {
    GradedPresentation pres;
    pres.gen_degrees = {0};
    pres.gen_lifts = {{Rat(1)}};
    out.domain = v_functor(e, pres);
    out.map.source = out.domain.mod;
    out.map.target = algebra_as_module(e);
    // V of a single degree-0 generator with no relations is F_0E = E itself
    for (int t = 0; t <= e->cutoff(); ++t) out.map.components.push_back(out.domain.lift[t]);
    return out;
  }
  if (!algebra_has_trivial_actions(*e))
    throw ArgError("a_map for n >= 1 is implemented for trivial-action commutative algebras");
  GradedRing r = u_ring(*e);
  GradedModule a = GradedModule::ring_as_module(r);
  GradedModule t = tail(a, n);
  GradedPresentation pres = presentation_of(t, r);
  out.domain = v_functor(e, pres);
  EModule emod = algebra_as_module(e);
  // counit: generator i ↦ its lift in E_{n_i}
  std::vector<EModuleMap> gen_maps;
  for (std::size_t i = 0; i < pres.gen_degrees.size(); ++i)
    gen_maps.push_back(free_map(e, pres.gen_degrees[i], emod, pres.gen_lifts[i]));
  out.map.source = out.domain.mod;
  out.map.target = emod;
  for (int lvl = 0; lvl <= e->cutoff(); ++lvl) {
    Matrix cover(f, e->dim(lvl), 0);
    for (const auto& gm : gen_maps) cover = cover.hcat(gm.components[lvl]);
    out.map.components.push_back(cover * out.domain.lift[lvl]);
  }
  return out;
}

EModuleMap submodule_generated(const EModule& ambient,
                               const std::vector<std::pair<int, std::vector<Rat>>>& gens) {
  const SymAlgebra& e = *ambient.algebra;
  const Field& f = ambient.field();
  int N = ambient.cutoff();
  std::vector<SpanBuilder> span;
  for (int t = 0; t <= N; ++t) span.emplace_back(f, ambient.dim(t));
  for (const auto& [deg, vec] : gens) {
    if (deg > N) throw ArgError("generator degree exceeds cutoff");
    span[deg].add(vec);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    // group orbit
    for (int t = 0; t <= N; ++t) {
      Matrix b = span[t].basis();
      for (const auto& g : ambient.seq.levels[t].gen_actions)
        if (span[t].add_cols(g * b)) changed = true;
    }
    // right multiplication
    for (int t = 0; t <= N; ++t) {
      if (span[t].dim() == 0) continue;
      Matrix b = span[t].basis();
      for (int k = 1; t + k <= N; ++k) {
        if (e.dim(k) == 0) continue;
        for (int c = 0; c < b.cols(); ++c) {
          auto v = b.col_vec(c);
          for (int y = 0; y < e.dim(k); ++y) {
            std::vector<Rat> ey(e.dim(k), Rat(0));
            ey[y] = 1;
            if (span[t + k].add(ambient.act(t, v, k, ey))) changed = true;
          }
        }
      }
    }
  }
  EModuleMap inc;
  inc.target = ambient;
  inc.source.algebra = ambient.algebra;
  inc.source.seq = SymSeq::zero(f, N);
  for (int t = 0; t <= N; ++t) {
    Matrix b = span[t].basis();
    SnModule lvl;
    lvl.n = t;
    lvl.dim = b.cols();
    lvl.field = f;
    for (int g = 0; g < std::max(0, t - 1); ++g) {
      auto x = solve(b, ambient.seq.levels[t].gen_actions[g] * b);
      if (!x) throw InvariantViolation("submodule not action-stable");
      lvl.gen_actions.push_back(std::move(*x));
    }
    inc.source.seq.levels[t] = std::move(lvl);
    inc.components.push_back(std::move(b));
  }
  for (int t = 0; t <= N; ++t)
    for (int k = 0; t + k <= N; ++k) {
      int de = e.dim(k);
      Matrix cols(f, ambient.dim(t + k), inc.source.dim(t) * de);
      for (int c = 0; c < inc.source.dim(t); ++c) {
        auto v = inc.components[t].col_vec(c);
        for (int y = 0; y < de; ++y) {
          std::vector<Rat> ey(de, Rat(0));
          ey[y] = 1;
          auto w = ambient.act(t, v, k, ey);
          for (int row = 0; row < ambient.dim(t + k); ++row) cols.at(row, c * de + y) = w[row];
        }
      }
      auto x = solve(inc.components[t + k], cols);
      if (!x) throw InvariantViolation("submodule not E-stable");
      inc.source.actions[{t, k}] = std::move(*x);
    }
  return inc;
}

EModule trivial_symmetric_module(std::shared_ptr<const SymAlgebra> e, const GradedModule& m) {
  if (!algebra_has_trivial_actions(*e))
    throw ArgError("trivial_symmetric_module requires a trivial-action algebra");
  EModule out;
  out.algebra = e;
  out.seq = SymSeq::zero(e->field(), e->cutoff());
  for (int t = 0; t <= e->cutoff(); ++t)
    out.seq.levels[t] = SnModule::trivial(e->field(), t, m.dim(t));
  out.actions = m.act;
  return out;
}

}  // namespace symqcs
