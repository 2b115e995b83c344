#include "symqcs/symseq.hpp"

#include <cstdlib>
#include <map>

namespace symqcs {

int max_level_dim() {
  static int cap = [] {
    const char* env = std::getenv("SYMQCS_MAX_DIM");
    return env ? std::atoi(env) : 5000;
  }();
  return cap;
}

static void check_dim_cap(long long dim) {
  if (dim > max_level_dim())
    throw ConfigError("level dimension " + std::to_string(dim) + " exceeds SYMQCS_MAX_DIM=" +
                      std::to_string(max_level_dim()));
}

SymSeq SymSeq::zero(Field f, int cutoff) {
  SymSeq s;
  s.field = f;
  s.cutoff = cutoff;
  for (int n = 0; n <= cutoff; ++n) s.levels.push_back(SnModule::zero(f, n));
  return s;
}

SymSeq SymSeq::unit(Field f, int cutoff) {
  SymSeq s = zero(f, cutoff);
  s.levels[0] = SnModule::trivial(f, 0, 1);
  return s;
}

SymSeq SymSeq::representable(Field f, int m, int cutoff) {
  if (m > cutoff) throw ArgError("representable degree exceeds cutoff");
  SymSeq s = zero(f, cutoff);
  s.levels[m] = SnModule::regular(f, m);
  return s;
}

void SymSeq::validate() const {
  if (static_cast<int>(levels.size()) != cutoff + 1)
    throw InvariantViolation("SymSeq: wrong number of levels");
  for (int n = 0; n <= cutoff; ++n) {
    if (levels[n].n != n) throw InvariantViolation("SymSeq: level degree mismatch");
    levels[n].validate();
  }
}

bool SymSeqMap::is_equivariant() const {
  return components_equivariant(*source, *target, components);
}

void SymSeqMap::validate() const {
  if (!source || !target) throw InvariantViolation("SymSeqMap: missing endpoints");
  if (source->cutoff != target->cutoff) throw InvariantViolation("SymSeqMap: cutoff mismatch");
  for (int n = 0; n <= source->cutoff; ++n) {
    if (components[n].rows() != target->dim(n) || components[n].cols() != source->dim(n))
      throw InvariantViolation("SymSeqMap: component shape mismatch at level " +
                               std::to_string(n));
  }
  if (!is_equivariant()) throw InvariantViolation("SymSeqMap: not equivariant");
}

bool SymSeqMap::is_zero() const {
  for (const auto& c : components)
    if (!c.is_zero()) return false;
  return true;
}

bool SymSeqMap::is_iso() const {
  for (int n = 0; n <= source->cutoff; ++n) {
    if (source->dim(n) != target->dim(n)) return false;
    if (rank(components[n]) != source->dim(n)) return false;
  }
  return true;
}

SymSeqMap compose(const SymSeqMap& g, const SymSeqMap& f) {
  SymSeqMap h;
  h.source = f.source;
  h.target = g.target;
  for (std::size_t n = 0; n < f.components.size(); ++n)
    h.components.push_back(g.components[n] * f.components[n]);
  return h;
}

SymSeqMap identity_map(const SymSeq& m) {
  SymSeqMap f;
  f.source = &m;
  f.target = &m;
  for (int n = 0; n <= m.cutoff; ++n) f.components.push_back(Matrix::identity(m.field, m.dim(n)));
  return f;
}

bool components_equivariant(const SymSeq& src, const SymSeq& tgt,
                            const std::vector<Matrix>& comps) {
  for (int n = 0; n <= src.cutoff; ++n) {
    if (src.dim(n) == 0 || tgt.dim(n) == 0) continue;
    for (int i = 0; i < n - 1; ++i) {
      const Matrix& gs = src.levels[n].gen_actions[i];
      const Matrix& gt = tgt.levels[n].gen_actions[i];
      if (!(comps[n] * gs == gt * comps[n])) return false;
    }
  }
  return true;
}

std::vector<DayBlock> day_layout(const SymSeq& m, const SymSeq& n, int level) {
  std::vector<DayBlock> blocks;
  int offset = 0;
  for (int p = 0; p <= level; ++p) {
    int q = level - p;
    int dm = m.dim(p), dn = n.dim(q);
    if (dm == 0 || dn == 0) continue;
    DayBlock b;
    b.p = p;
    b.q = q;
    b.offset = offset;
    b.num_shuffles = static_cast<int>(binomial(level, p));
    b.dim_m = dm;
    b.dim_n = dn;
    blocks.push_back(b);
    offset += b.size();
  }
  return blocks;
}

static int day_dim(const std::vector<DayBlock>& blocks) {
  int d = 0;
  for (const auto& b : blocks) d += b.size();
  return d;
}

SymSeq day_tensor(const SymSeq& m, const SymSeq& n) {
  if (m.cutoff != n.cutoff) throw ArgError("day_tensor cutoff mismatch");
  if (m.field != n.field) throw ConfigError("day_tensor field mismatch");
  SymSeq out = SymSeq::zero(m.field, m.cutoff);
  for (int t = 0; t <= m.cutoff; ++t) {
    auto blocks = day_layout(m, n, t);
    int dim = day_dim(blocks);
    check_dim_cap(dim);
    SnModule lvl;
    lvl.n = t;
    lvl.dim = dim;
    lvl.field = m.field;
    for (int g = 1; g < t; ++g) {
      Permutation s = adjacent_transposition(t, g);
      Matrix a(m.field, dim, dim);
      for (const auto& b : blocks) {
        auto reps = shuffle_reps(b.p, b.q);
        for (int r = 0; r < b.num_shuffles; ++r) {
          ShuffleFactor fac = factor_shuffle(s.compose(reps[r]), b.p, b.q);
          Matrix am = action_of(m.levels[b.p], fac.sigma);
          Matrix an = action_of(n.levels[b.q], fac.tau);
          for (int i = 0; i < b.dim_m; ++i)
            for (int i2 = 0; i2 < b.dim_m; ++i2) {
              if (am.at(i2, i) == 0) continue;
              for (int j = 0; j < b.dim_n; ++j)
                for (int j2 = 0; j2 < b.dim_n; ++j2) {
                  if (an.at(j2, j) == 0) continue;
                  a.at(b.index(fac.rep_index, i2, j2), b.index(r, i, j)) =
                      m.field.mul(am.at(i2, i), an.at(j2, j));
                }
            }
        }
      }
      lvl.gen_actions.push_back(std::move(a));
    }
    out.levels[t] = std::move(lvl);
  }
  return out;
}

std::vector<Matrix> day_tensor_of_maps(const SymSeq& m, const SymSeq& n, const SymSeq& m2,
                                       const SymSeq& n2, const std::vector<Matrix>& f,
                                       const std::vector<Matrix>& g) {
  std::vector<Matrix> comps;
  for (int t = 0; t <= m.cutoff; ++t) {
    auto src = day_layout(m, n, t);
    auto tgt = day_layout(m2, n2, t);
    std::map<std::pair<int, int>, const DayBlock*> tgt_by_pq;
    for (const auto& b : tgt) tgt_by_pq[{b.p, b.q}] = &b;
    Matrix a(m.field, day_dim(tgt), day_dim(src));
    for (const auto& b : src) {
      auto it = tgt_by_pq.find({b.p, b.q});
      if (it == tgt_by_pq.end()) continue;
      const DayBlock& tb = *it->second;
      const Matrix& fp = f[b.p];
      const Matrix& gq = g[b.q];
      for (int r = 0; r < b.num_shuffles; ++r)
        for (int i = 0; i < b.dim_m; ++i)
          for (int i2 = 0; i2 < tb.dim_m; ++i2) {
            if (fp.at(i2, i) == 0) continue;
            for (int j = 0; j < b.dim_n; ++j)
              for (int j2 = 0; j2 < tb.dim_n; ++j2) {
                if (gq.at(j2, j) == 0) continue;
                a.at(tb.index(r, i2, j2), b.index(r, i, j)) =
                    m.field.mul(fp.at(i2, i), gq.at(j2, j));
              }
          }
    }
    comps.push_back(std::move(a));
  }
  return comps;
}

static std::vector<Matrix> twist_impl(const SymSeq& m, const SymSeq& n, bool with_chi) {
  std::vector<Matrix> comps;
  for (int t = 0; t <= m.cutoff; ++t) {
    auto src = day_layout(m, n, t);
    auto tgt = day_layout(n, m, t);
    std::map<std::pair<int, int>, const DayBlock*> tgt_by_pq;
    for (const auto& b : tgt) tgt_by_pq[{b.p, b.q}] = &b;
    Matrix a(m.field, day_dim(tgt), day_dim(src));
    for (const auto& b : src) {
      const DayBlock& tb = *tgt_by_pq.at({b.q, b.p});
      auto reps = shuffle_reps(b.p, b.q);
      for (int r = 0; r < b.num_shuffles; ++r) {
        Permutation alpha = with_chi ? reps[r].compose(chi(b.q, b.p)) : reps[r];
        ShuffleFactor fac = factor_shuffle(alpha, b.q, b.p);
        Matrix an = action_of(n.levels[b.q], fac.sigma);  // Σ_q heads the target block
        Matrix am = action_of(m.levels[b.p], fac.tau);
        for (int j = 0; j < b.dim_n; ++j)
          for (int j2 = 0; j2 < b.dim_n; ++j2) {
            if (an.at(j2, j) == 0) continue;
            for (int i = 0; i < b.dim_m; ++i)
              for (int i2 = 0; i2 < b.dim_m; ++i2) {
                if (am.at(i2, i) == 0) continue;
                a.at(tb.index(fac.rep_index, j2, i2), b.index(r, i, j)) =
                    m.field.mul(an.at(j2, j), am.at(i2, i));
              }
          }
      }
    }
    comps.push_back(std::move(a));
  }
  return comps;
}

std::vector<Matrix> twist_components(const SymSeq& m, const SymSeq& n) {
  return twist_impl(m, n, true);
}

std::vector<Matrix> naive_twist_components(const SymSeq& m, const SymSeq& n) {
  return twist_impl(m, n, false);
}

std::vector<Matrix> associator_components(const SymSeq& a, const SymSeq& b, const SymSeq& c) {
  SymSeq ab = day_tensor(a, b);
  SymSeq bc = day_tensor(b, c);
  std::vector<Matrix> comps;
  for (int t = 0; t <= a.cutoff; ++t) {
    auto src_outer = day_layout(ab, c, t);
    auto tgt_outer = day_layout(a, bc, t);
    Matrix mat(a.field, day_dim(tgt_outer), day_dim(src_outer));
    for (const auto& ob : src_outer) {
      int r = ob.p, cdeg = ob.q;  // (A∧B)-degree r, C-degree cdeg
      auto outer_reps = shuffle_reps(r, cdeg);
      auto inner_blocks = day_layout(a, b, r);
      for (const auto& ib : inner_blocks) {
        int p = ib.p, q = ib.q;
        auto inner_reps = shuffle_reps(p, q);
        for (int s1 = 0; s1 < ob.num_shuffles; ++s1)
          for (int s2 = 0; s2 < ib.num_shuffles; ++s2) {
            Permutation alpha =
                outer_reps[s1].compose(block_sum(inner_reps[s2], Permutation::identity(cdeg)));
            ShuffleFactor f1 = factor_shuffle(alpha, p, q + cdeg);
            ShuffleFactor f2 = factor_shuffle(f1.tau, q, cdeg);
            Matrix sa = action_of(a.levels[p], f1.sigma);
            Matrix sb = action_of(b.levels[q], f2.sigma);
            Matrix sc = action_of(c.levels[cdeg], f2.tau);
            const DayBlock* tb = nullptr;
            for (const auto& x : tgt_outer)
              if (x.p == p && x.q == q + cdeg) tb = &x;
            auto bc_blocks = day_layout(b, c, q + cdeg);
            const DayBlock* ibc = nullptr;
            for (const auto& x : bc_blocks)
              if (x.p == q && x.q == cdeg) ibc = &x;
            for (int i = 0; i < ib.dim_m; ++i)
              for (int i2 = 0; i2 < ib.dim_m; ++i2) {
                if (sa.at(i2, i) == 0) continue;
                for (int j = 0; j < ib.dim_n; ++j)
                  for (int j2 = 0; j2 < ib.dim_n; ++j2) {
                    if (sb.at(j2, j) == 0) continue;
                    for (int k = 0; k < ob.dim_n; ++k)
                      for (int k2 = 0; k2 < ob.dim_n; ++k2) {
                        if (sc.at(k2, k) == 0) continue;
                        int src_idx = ob.index(s1, ib.index(s2, i, j), k);
                        int bc_idx = ibc->index(f2.rep_index, j2, k2);
                        int tgt_idx = tb->index(f1.rep_index, i2, bc_idx);
                        Rat v = a.field.mul(sa.at(i2, i), a.field.mul(sb.at(j2, j), sc.at(k2, k)));
                        mat.at(tgt_idx, src_idx) = a.field.add(mat.at(tgt_idx, src_idx), v);
                      }
                  }
              }
          }
      }
    }
    comps.push_back(std::move(mat));
  }
  return comps;
}

SeqWithMap kernel_seq(const SymSeq& src, const SymSeq& tgt, const std::vector<Matrix>& comps) {
  (void)tgt;
  SeqWithMap out;
  out.seq = SymSeq::zero(src.field, src.cutoff);
  for (int t = 0; t <= src.cutoff; ++t) {
    Matrix k = kernel_basis(comps[t]);
    SnModule lvl;
    lvl.n = t;
    lvl.dim = k.cols();
    lvl.field = src.field;
    for (int g = 0; g < std::max(0, t - 1); ++g) {
      Matrix ak = src.levels[t].gen_actions[g] * k;
      auto x = solve(k, ak);  // restricted action in the kernel basis
      if (!x) throw InvariantViolation("kernel not action-stable");
      lvl.gen_actions.push_back(std::move(*x));
    }
    out.seq.levels[t] = std::move(lvl);
    out.map.push_back(std::move(k));
  }
  return out;
}

SeqWithMap cokernel_seq(const SymSeq& src, const SymSeq& tgt, const std::vector<Matrix>& comps) {
  (void)src;
  SeqWithMap out;
  out.seq = SymSeq::zero(tgt.field, tgt.cutoff);
  for (int t = 0; t <= tgt.cutoff; ++t) {
    QuotientSpace q(tgt.field, tgt.dim(t), comps[t]);
    SnModule lvl;
    lvl.n = t;
    lvl.dim = q.dim();
    lvl.field = tgt.field;
    for (int g = 0; g < std::max(0, t - 1); ++g)
      lvl.gen_actions.push_back(q.induced(tgt.levels[t].gen_actions[g]));
    out.seq.levels[t] = std::move(lvl);
    out.map.push_back(q.projection());
  }
  return out;
}

std::vector<Matrix> representable_product_iso(Field f, int m, int n, int cutoff) {
  SymSeq fm = SymSeq::representable(f, m, cutoff);
  SymSeq fn = SymSeq::representable(f, n, cutoff);
  std::vector<Matrix> comps;
  auto perms = all_permutations(m + n);
  std::map<std::vector<int>, int> idx;
  for (std::size_t i = 0; i < perms.size(); ++i) idx[perms[i].images()] = static_cast<int>(i);
  auto sig_m = all_permutations(m);
  auto sig_n = all_permutations(n);
  for (int t = 0; t <= cutoff; ++t) {
    auto blocks = day_layout(fm, fn, t);
    int src_dim = day_dim(blocks);
    int tgt_dim = (t == m + n) ? static_cast<int>(factorial(m + n)) : 0;
    Matrix a(f, tgt_dim, src_dim);
    if (t == m + n && !blocks.empty()) {
      const DayBlock& b = blocks[0];  // only the (m,n) block is nonzero
      auto reps = shuffle_reps(m, n);
      for (int r = 0; r < b.num_shuffles; ++r)
        for (int i = 0; i < b.dim_m; ++i)
          for (int j = 0; j < b.dim_n; ++j) {
            Permutation img = reps[r].compose(block_sum(sig_m[i], sig_n[j]));
            a.at(idx.at(img.images()), b.index(r, i, j)) = 1;
          }
    }
    comps.push_back(std::move(a));
  }
  return comps;
}

}  // namespace symqcs
