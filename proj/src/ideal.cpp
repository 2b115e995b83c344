#include "symqcs/ideal.hpp"

namespace symqcs {

static SpanBuilder span_of(const Field& f, const Matrix& basis) {
  SpanBuilder sb(f, basis.rows());
  sb.add_cols(basis);
  return sb;
}

bool SigmaIdeal::contains(int degree, const std::vector<Rat>& v) const {
  if (degree > cutoff()) throw ArgError("degree exceeds cutoff");
  return span_of(algebra->field(), levels[degree]).contains(v);
}

bool SigmaIdeal::contains(const SigmaIdeal& other) const {
  for (int t = 0; t <= cutoff(); ++t) {
    auto sb = span_of(algebra->field(), levels[t]);
    if (!sb.contains_cols(other.levels[t])) return false;
  }
  return true;
}

bool SigmaIdeal::equal_levels(const SigmaIdeal& other) const {
  for (int t = 0; t <= cutoff(); ++t)
    if (level_dim(t) != other.level_dim(t)) return false;
  return contains(other);
}

bool SigmaIdeal::is_zero() const {
  for (int t = 0; t <= cutoff(); ++t)
    if (level_dim(t) > 0) return false;
  return true;
}

bool SigmaIdeal::contains_positive_part() const {
  for (int t = 1; t <= cutoff(); ++t)
    if (level_dim(t) < algebra->dim(t)) return false;
  return true;
}

SigmaIdeal sigma_closure(std::shared_ptr<const SymAlgebra> e, std::vector<HomElem> gens) {
  const Field& f = e->field();
  int N = e->cutoff();
  std::vector<SpanBuilder> span;
  for (int t = 0; t <= N; ++t) span.emplace_back(f, e->dim(t));
  for (const auto& g : gens) {
    if (g.degree > N) throw ArgError("generator degree exceeds cutoff");
    if (static_cast<int>(g.coords.size()) != e->dim(g.degree))
      throw ArgError("generator coordinate length mismatch");
    span[g.degree].add(g.coords);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (int t = 0; t <= N; ++t) {
      if (span[t].dim() == 0) continue;
      Matrix b = span[t].basis();
      for (const auto& g : e->seq.levels[t].gen_actions)
        if (span[t].add_cols(g * b)) changed = true;
    }
    for (int t = 0; t <= N; ++t) {
      if (span[t].dim() == 0) continue;
      Matrix b = span[t].basis();
      for (int k = 1; t + k <= N; ++k) {
        if (e->dim(k) == 0) continue;
        for (int c = 0; c < b.cols(); ++c) {
          auto v = b.col_vec(c);
          for (int y = 0; y < e->dim(k); ++y) {
            std::vector<Rat> ey(e->dim(k), Rat(0));
            ey[y] = 1;
            if (span[t + k].add(e->multiply(t, v, k, ey))) changed = true;
          }
        }
      }
    }
  }
  SigmaIdeal out;
  out.algebra = e;
  out.generators = std::move(gens);
  for (int t = 0; t <= N; ++t) out.levels.push_back(span[t].basis());
  return out;
}

SigmaIdeal zero_ideal(std::shared_ptr<const SymAlgebra> e) { return sigma_closure(e, {}); }

SigmaIdeal positive_part(std::shared_ptr<const SymAlgebra> e) {
  std::vector<HomElem> gens;
  for (int t = 1; t <= e->cutoff(); ++t)
    for (int i = 0; i < e->dim(t); ++i) {
      std::vector<Rat> v(e->dim(t), Rat(0));
      v[i] = 1;
      gens.push_back({t, std::move(v)});
    }
  return sigma_closure(e, std::move(gens));
}

SigmaIdeal ideal_sum(const SigmaIdeal& a, const SigmaIdeal& b) {
  if (!(*a.algebra == *b.algebra)) throw ArgError("ideal_sum: algebra mismatch");
  std::vector<HomElem> gens = a.generators;
  gens.insert(gens.end(), b.generators.begin(), b.generators.end());
  for (int t = 0; t <= a.cutoff(); ++t)
    for (int c = 0; c < b.levels[t].cols(); ++c) gens.push_back({t, b.levels[t].col_vec(c)});
  for (int t = 0; t <= a.cutoff(); ++t)
    for (int c = 0; c < a.levels[t].cols(); ++c) gens.push_back({t, a.levels[t].col_vec(c)});
  return sigma_closure(a.algebra, std::move(gens));
}

SigmaIdeal ideal_product(const SigmaIdeal& a, const SigmaIdeal& b) {
  if (!(*a.algebra == *b.algebra)) throw ArgError("ideal_product: algebra mismatch");
  const auto& e = a.algebra;
  std::vector<HomElem> gens;
  for (int s = 0; s <= a.cutoff(); ++s) {
    if (a.level_dim(s) == 0) continue;
    for (int t = 0; s + t <= a.cutoff(); ++t) {
      if (b.level_dim(t) == 0) continue;
      for (int i = 0; i < a.level_dim(s); ++i)
        for (int j = 0; j < b.level_dim(t); ++j)
          gens.push_back(
              {s + t, e->multiply(s, a.levels[s].col_vec(i), t, b.levels[t].col_vec(j))});
    }
  }
  return sigma_closure(e, std::move(gens));
}

TwoSidedReport is_two_sided(const SigmaIdeal& i) {
  TwoSidedReport rep;
  const auto& e = i.algebra;
  for (int n = 1; n <= i.cutoff(); ++n) {
    if (e->dim(n) == 0) continue;
    for (int m = 0; n + m <= i.cutoff(); ++m) {
      if (i.level_dim(m) == 0) continue;
      auto target = span_of(e->field(), i.levels[n + m]);
      for (int y = 0; y < e->dim(n); ++y) {
        std::vector<Rat> ey(e->dim(n), Rat(0));
        ey[y] = 1;
        for (int x = 0; x < i.level_dim(m); ++x) {
          auto prod = e->multiply(n, ey, m, i.levels[m].col_vec(x));
          if (!target.contains(prod)) {
            rep.two_sided = false;
            rep.failures.push_back({n, m, y, x});
          }
        }
      }
    }
  }
  return rep;
}

namespace {
Matrix reshape(const Field& f, const std::vector<Rat>& v, int ra, int rb) {
  Matrix m(f, ra, rb);
  for (int i = 0; i < ra; ++i)
    for (int j = 0; j < rb; ++j) m.at(i, j) = v[i * rb + j];
  return m;
}

bool rank_one_factor(const Matrix& m, std::vector<Rat>& u, std::vector<Rat>& v) {
  if (rank(m) != 1) return false;
  int pr = -1, pc = -1;
  for (int i = 0; i < m.rows() && pr < 0; ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (m.at(i, j) != 0) {
        pr = i;
        pc = j;
        break;
      }
  u.assign(m.rows(), Rat(0));
  v.assign(m.cols(), Rat(0));
  const Field& f = m.field();
  for (int i = 0; i < m.rows(); ++i) u[i] = m.at(i, pc);
  Rat inv = f.inv(m.at(pr, pc));
  for (int j = 0; j < m.cols(); ++j) v[j] = f.mul(inv, m.at(pr, j));
  return true;
}
}  // namespace

PrimeReport is_prime_up_to(const SigmaIdeal& p, std::uint64_t seed) {
  PrimeReport rep;
  const auto& e = p.algebra;
  const Field& f = e->field();
  Rng rng(seed);
  for (int a = 0; a <= p.cutoff(); ++a)
    for (int b = a; a + b <= p.cutoff(); ++b) {
      if (e->dim(a) == 0 || e->dim(b) == 0) continue;
      QuotientSpace qa(f, e->dim(a), p.levels[a]);
      QuotientSpace qb(f, e->dim(b), p.levels[b]);
      QuotientSpace qab(f, e->dim(a + b), p.levels[a + b]);
      if (qa.dim() == 0 || qb.dim() == 0) continue;
      PrimeCellReport cell;
      cell.a = a;
      cell.b = b;
      Matrix beta = qab.project_matrix(e->mult(a, b) * qa.lift().kron(qb.lift()));
      Matrix ker = kernel_basis(beta);
      if (ker.cols() == 0) {
        rep.cells.push_back(std::move(cell));
        continue;
      }
      bool found = false;
      for (int c = 0; c < ker.cols() && !found; ++c) {
        Matrix r = reshape(f, ker.col_vec(c), qa.dim(), qb.dim());
        std::vector<Rat> u, v;
        if (rank_one_factor(r, u, v)) {
          cell.zero_divisor_found = true;
          cell.witness_left = std::move(u);
          cell.witness_right = std::move(v);
          found = true;
        }
      }
      for (int it = 0; it < 200 && !found; ++it) {
        std::vector<Rat> u(qa.dim());
        bool nz = false;
        for (auto& x : u) {
          x = rng.small_int();
          if (x != 0) nz = true;
        }
        if (!nz) continue;
        Matrix bu(f, qab.dim(), qb.dim());
        for (int j = 0; j < qb.dim(); ++j)
          for (int r = 0; r < qab.dim(); ++r) {
            Rat acc(0);
            for (int i = 0; i < qa.dim(); ++i) {
              const Rat& c = beta.at(r, i * qb.dim() + j);
              if (c != 0 && u[i] != 0) acc = f.add(acc, f.mul(c, u[i]));
            }
            bu.at(r, j) = acc;
          }
        Matrix kb = kernel_basis(bu);
        if (kb.cols() > 0) {
          cell.zero_divisor_found = true;
          cell.witness_left = std::move(u);
          cell.witness_right = kb.col_vec(0);
          found = true;
        }
      }
      if (!found && ker.cols() > 1) cell.exact = false;
      if (cell.zero_divisor_found) rep.prime_up_to_cutoff = false;
      if (!cell.exact) rep.complete = false;
      rep.cells.push_back(std::move(cell));
    }
  return rep;
}

SigmaIdeal radical_up_to(const SigmaIdeal& i, std::uint64_t seed) {
  (void)seed;
  const auto& e = i.algebra;
  std::vector<HomElem> gens = i.generators;
  for (int t = 0; t <= i.cutoff(); ++t)
    for (int c = 0; c < i.level_dim(t); ++c) gens.push_back({t, i.levels[t].col_vec(c)});
  // spanning family: level basis vectors with some power inside the window
  for (int d = 1; 2 * d <= i.cutoff(); ++d) {
    for (int x = 0; x < e->dim(d); ++x) {
      std::vector<Rat> b(e->dim(d), Rat(0));
      b[x] = 1;
      std::vector<Rat> power = b;
      int deg = d;
      for (int t = 2; t * d <= i.cutoff(); ++t) {
        power = e->multiply(deg, power, d, b);
        deg += d;
        bool zero = true;
        for (const auto& c : power)
          if (c != 0) zero = false;
        if (zero || i.contains(deg, power)) {
          gens.push_back({d, b});
          break;
        }
      }
    }
  }
  return sigma_closure(e, std::move(gens));
}

FinGenReport is_finitely_sigma_generated(std::shared_ptr<const SymAlgebra> e,
                                         const std::vector<HomElem>& gens) {
  SigmaIdeal closure = sigma_closure(e, gens);
  FinGenReport rep;
  for (int t = 1; t <= e->cutoff(); ++t)
    if (closure.level_dim(t) < e->dim(t)) {
      rep.finitely_sigma_generated = false;
      rep.failing_degrees.push_back(t);
    }
  return rep;
}

}  // namespace symqcs
