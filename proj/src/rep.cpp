#include "symqcs/rep.hpp"

#include <algorithm>
#include <map>

namespace symqcs {

SnModule SnModule::trivial(Field f, int n, int dim) {
  SnModule m;
  m.n = n;
  m.dim = dim;
  m.field = f;
  for (int i = 1; i < n; ++i) m.gen_actions.push_back(Matrix::identity(f, dim));
  return m;
}

static std::map<std::vector<int>, int> perm_index_map(const std::vector<Permutation>& perms) {
  std::map<std::vector<int>, int> idx;
  for (std::size_t i = 0; i < perms.size(); ++i) idx[perms[i].images()] = static_cast<int>(i);
  return idx;
}

SnModule SnModule::regular(Field f, int n) {
  auto perms = all_permutations(n);
  auto idx = perm_index_map(perms);
  SnModule m;
  m.n = n;
  m.dim = static_cast<int>(perms.size());
  m.field = f;
  for (int i = 1; i < n; ++i) {
    Permutation s = adjacent_transposition(n, i);
    Matrix a(f, m.dim, m.dim);
    for (int j = 0; j < m.dim; ++j) a.at(idx.at(s.compose(perms[j]).images()), j) = 1;
    m.gen_actions.push_back(std::move(a));
  }
  return m;
}

SnModule SnModule::conjugation(Field f, int n) {
  auto perms = all_permutations(n);
  auto idx = perm_index_map(perms);
  SnModule m;
  m.n = n;
  m.dim = static_cast<int>(perms.size());
  m.field = f;
  for (int i = 1; i < n; ++i) {
    Permutation s = adjacent_transposition(n, i);
    Matrix a(f, m.dim, m.dim);
    for (int j = 0; j < m.dim; ++j)
      a.at(idx.at(s.compose(perms[j]).compose(s).images()), j) = 1;  // s = s⁻¹
    m.gen_actions.push_back(std::move(a));
  }
  return m;
}

SnModule SnModule::sign_rep(Field f, int n) {
  SnModule m;
  m.n = n;
  m.dim = 1;
  m.field = f;
  for (int i = 1; i < n; ++i) {
    Matrix a(f, 1, 1);
    a.set(0, 0, Rat(-1));
    m.gen_actions.push_back(std::move(a));
  }
  return m;
}

void SnModule::validate() const {
  if (static_cast<int>(gen_actions.size()) != std::max(0, n - 1))
    throw InvariantViolation("SnModule: wrong number of generator actions");
  for (const auto& a : gen_actions) {
    if (a.rows() != dim || a.cols() != dim)
      throw InvariantViolation("SnModule: generator action shape mismatch");
    if (!(a * a).is_identity()) throw InvariantViolation("SnModule: s_i^2 != id");
  }
  for (std::size_t i = 0; i + 1 < gen_actions.size(); ++i) {
    const Matrix &a = gen_actions[i], &b = gen_actions[i + 1];
    if (!(a * b * a == b * a * b)) throw InvariantViolation("SnModule: braid relation fails");
  }
  for (std::size_t i = 0; i + 2 < gen_actions.size(); ++i)
    for (std::size_t j = i + 2; j < gen_actions.size(); ++j) {
      const Matrix &a = gen_actions[i], &b = gen_actions[j];
      if (!(a * b == b * a)) throw InvariantViolation("SnModule: far commutation fails");
    }
}

bool SnModule::operator==(const SnModule& o) const {
  return n == o.n && dim == o.dim && field == o.field && gen_actions == o.gen_actions;
}

Matrix action_of(const SnModule& m, const Permutation& s) {
  if (s.degree() != m.n) throw ArgError("action_of: permutation degree mismatch");
  Matrix a = Matrix::identity(m.field, m.dim);
  for (int i : s.adjacent_word()) a = a * m.gen_actions[i - 1];
  return a;
}

SnModule direct_sum(const SnModule& a, const SnModule& b) {
  if (a.n != b.n || a.field != b.field) throw ArgError("direct_sum degree/field mismatch");
  SnModule m;
  m.n = a.n;
  m.dim = a.dim + b.dim;
  m.field = a.field;
  for (int i = 0; i < std::max(0, a.n - 1); ++i) {
    Matrix g(a.field, m.dim, m.dim);
    for (int r = 0; r < a.dim; ++r)
      for (int c = 0; c < a.dim; ++c) g.at(r, c) = a.gen_actions[i].at(r, c);
    for (int r = 0; r < b.dim; ++r)
      for (int c = 0; c < b.dim; ++c) g.at(a.dim + r, a.dim + c) = b.gen_actions[i].at(r, c);
    m.gen_actions.push_back(std::move(g));
  }
  return m;
}

ProductRep ProductRep::tensor(const SnModule& mp, const SnModule& nq) {
  if (mp.field != nq.field) throw ConfigError("tensor field mismatch");
  ProductRep w;
  w.p = mp.n;
  w.q = nq.n;
  w.dim = mp.dim * nq.dim;
  w.field = mp.field;
  Matrix iq = Matrix::identity(nq.field, nq.dim), ip = Matrix::identity(mp.field, mp.dim);
  for (const auto& a : mp.gen_actions) w.p_gen_actions.push_back(a.kron(iq));
  for (const auto& b : nq.gen_actions) w.q_gen_actions.push_back(ip.kron(b));
  return w;
}

void ProductRep::validate() const {
  for (const auto& a : p_gen_actions)
    for (const auto& b : q_gen_actions)
      if (!(a * b == b * a))
        throw InvariantViolation("ProductRep: the two actions do not commute");
}

Matrix ProductRep::action(const Permutation& sigma, const Permutation& tau) const {
  Matrix a = Matrix::identity(field, dim);
  for (int i : sigma.adjacent_word()) a = a * p_gen_actions[i - 1];
  for (int i : tau.adjacent_word()) a = a * q_gen_actions[i - 1];
  return a;
}

SnModule induce(const ProductRep& w) {
  w.validate();
  int t = w.p + w.q;
  auto reps = shuffle_reps(w.p, w.q);
  int ncos = static_cast<int>(reps.size());
  SnModule m;
  m.n = t;
  m.dim = ncos * w.dim;
  m.field = w.field;
  for (int g = 1; g < t; ++g) {
    Permutation s = adjacent_transposition(t, g);
    Matrix a(w.field, m.dim, m.dim);
    for (int r = 0; r < ncos; ++r) {
      ShuffleFactor fac = factor_shuffle(s.compose(reps[r]), w.p, w.q);
      Matrix inner = w.action(fac.sigma, fac.tau);
      for (int i = 0; i < w.dim; ++i)
        for (int j = 0; j < w.dim; ++j) {
          if (inner.at(i, j) == 0) continue;
          a.at(fac.rep_index * w.dim + i, r * w.dim + j) = inner.at(i, j);
        }
    }
    m.gen_actions.push_back(std::move(a));
  }
  return m;
}

SnModule induce_tail(int l, const SnModule& w) {
  int q = w.n;
  auto reps = coset_reps(l, q);
  int ncos = static_cast<int>(reps.size());
  SnModule m;
  m.n = l;
  m.dim = ncos * w.dim;
  m.field = w.field;
  for (int g = 1; g < l; ++g) {
    Permutation s = adjacent_transposition(l, g);
    Matrix a(w.field, m.dim, m.dim);
    for (int r = 0; r < ncos; ++r) {
      TailFactor fac = factor_tail(s.compose(reps[r]), l, q);
      Matrix inner = action_of(w, fac.h);
      for (int i = 0; i < w.dim; ++i)
        for (int j = 0; j < w.dim; ++j) {
          if (inner.at(i, j) == 0) continue;
          a.at(fac.rep_index * w.dim + i, r * w.dim + j) = inner.at(i, j);
        }
    }
    m.gen_actions.push_back(std::move(a));
  }
  return m;
}

SnModule restrict_tail(const SnModule& m, int k) {
  if (k < 0 || k > m.n) throw ArgError("restrict_tail: bad k");
  SnModule r;
  r.n = m.n - k;
  r.dim = m.dim;
  r.field = m.field;
  for (int i = k + 1; i < m.n; ++i) r.gen_actions.push_back(m.gen_actions[i - 1]);
  return r;
}

Coinvariants coinvariants(const SnModule& m) {
  SpanBuilder rel(m.field, m.dim);
  for (const auto& a : m.gen_actions) {
    Matrix d = a - Matrix::identity(m.field, m.dim);
    rel.add_cols(d);
  }
  QuotientSpace q(m.field, m.dim, rel.basis());
  Coinvariants c{SnModule::trivial(m.field, m.n, q.dim()), q.projection()};
  return c;
}

Matrix maschke_average(const SnModule& m) {
  if (characteristic_divides_factorial(m.field, m.n))
    throw ConfigError("maschke_average: characteristic divides n!");
  Matrix sum(m.field, m.dim, m.dim);
  long long count = 0;
  for (const auto& s : all_permutations(m.n)) {
    sum = sum + action_of(m, s);
    ++count;
  }
  return sum.scaled(m.field.inv(Rat(count)));
}

SnModule random_snmodule(Field f, int n, int dim, Rng& rng) {
  // Trivial ⊕ sign summands conjugated by a seeded invertible matrix: always a
  // valid Σ_n-module of the requested dimension, with non-monomial matrices.
  if (dim <= 0) return SnModule::zero(f, n);
  SnModule base;
  if (n < 2)
    base = SnModule::trivial(f, n, dim);
  else if (dim == 1)
    base = (rng.next() & 1) ? SnModule::sign_rep(f, n) : SnModule::trivial(f, n, 1);
  else
    base = direct_sum(SnModule::trivial(f, n, dim - 1), SnModule::sign_rep(f, n));
  if (n < 2) return base;
  Matrix t(f, base.dim, base.dim);
  std::optional<Matrix> tinv;
  do {
    for (int r = 0; r < base.dim; ++r)
      for (int c = 0; c < base.dim; ++c) t.set(r, c, rng.small_int());
    tinv = inverse(t);
  } while (!tinv);
  SnModule out = base;
  for (auto& g : out.gen_actions) g = t * g * *tinv;
  return out;
}

}  // namespace symqcs
