#include "symqcs/algebra.hpp"

#include <algorithm>

namespace symqcs {

const Matrix& SymAlgebra::mult(int n, int m) const {
  auto it = mults.find({n, m});
  if (it == mults.end()) throw ArgError("multiplication cell out of range");
  return it->second;
}

std::vector<Rat> SymAlgebra::multiply(int deg_a, const std::vector<Rat>& a, int deg_b,
                                      const std::vector<Rat>& b) const {
  const Matrix& mu = mult(deg_a, deg_b);
  std::vector<Rat> t(static_cast<std::size_t>(dim(deg_a)) * dim(deg_b), Rat(0));
  for (int i = 0; i < dim(deg_a); ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < dim(deg_b); ++j) {
      if (b[j] == 0) continue;
      t[static_cast<std::size_t>(i) * dim(deg_b) + j] = field().mul(a[i], b[j]);
    }
  }
  std::vector<Rat> out(dim(deg_a + deg_b), Rat(0));
  for (int r = 0; r < mu.rows(); ++r)
    for (int c = 0; c < mu.cols(); ++c)
      if (mu.at(r, c) != 0 && t[c] != 0)
        out[r] = field().add(out[r], field().mul(mu.at(r, c), t[c]));
  return out;
}

bool SymAlgebra::operator==(const SymAlgebra& o) const {
  if (seq.cutoff != o.seq.cutoff || !(unit == o.unit)) return false;
  for (int n = 0; n <= seq.cutoff; ++n)
    if (!(seq.levels[n] == o.seq.levels[n])) return false;
  return mults == o.mults;
}

AxiomReport check_axioms(const SymAlgebra& e) {
  AxiomReport rep;
  const Field& f = e.field();
  int N = e.cutoff();
  if (e.dim(0) != 1) rep.violations.push_back({"shape", 0, -1, -1});
  for (int n = 0; n <= N; ++n)
    for (int m = 0; n + m <= N; ++m) {
      if (e.dim(n) == 0 || e.dim(m) == 0) continue;
      const Matrix& mu = e.mult(n, m);
      bool bad = false;
      for (int i = 1; i < n && !bad; ++i) {
        Matrix lhs = mu * e.seq.levels[n].gen_actions[i - 1].kron(Matrix::identity(f, e.dim(m)));
        Matrix rhs = action_of(e.seq.levels[n + m],
                               block_sum(adjacent_transposition(n, i), Permutation::identity(m))) *
                     mu;
        if (!(lhs == rhs)) bad = true;
      }
      for (int j = 1; j < m && !bad; ++j) {
        Matrix lhs = mu * Matrix::identity(f, e.dim(n)).kron(e.seq.levels[m].gen_actions[j - 1]);
        Matrix rhs = action_of(e.seq.levels[n + m],
                               block_sum(Permutation::identity(n), adjacent_transposition(m, j))) *
                     mu;
        if (!(lhs == rhs)) bad = true;
      }
      if (bad) rep.violations.push_back({"equivariance", n, m, -1});
    }
  for (int n = 0; n <= N; ++n)
    for (int m = 0; n + m <= N; ++m)
      for (int p = 0; n + m + p <= N; ++p) {
        if (e.dim(n) == 0 || e.dim(m) == 0 || e.dim(p) == 0) continue;
        Matrix lhs = e.mult(n + m, p) * e.mult(n, m).kron(Matrix::identity(f, e.dim(p)));
        Matrix rhs = e.mult(n, m + p) * Matrix::identity(f, e.dim(n)).kron(e.mult(m, p));
        if (!(lhs == rhs)) rep.violations.push_back({"associativity", n, m, p});
      }
  for (int n = 0; n <= N; ++n) {
    if (e.dim(n) == 0) continue;
    Matrix right = e.mult(n, 0) * Matrix::identity(f, e.dim(n)).kron(e.unit);
    Matrix left = e.mult(0, n) * e.unit.kron(Matrix::identity(f, e.dim(n)));
    if (!right.is_identity() || !left.is_identity())
      rep.violations.push_back({"unit", n, -1, -1});
  }
  return rep;
}

AxiomReport check_commutative(const SymAlgebra& e, bool naive) {
  AxiomReport rep;
  const Field& f = e.field();
  int N = e.cutoff();
  for (int n = 0; n <= N; ++n)
    for (int m = 0; n + m <= N; ++m) {
      if (e.dim(n) == 0 || e.dim(m) == 0) continue;
      Matrix swapped = e.mult(m, n) * swap_matrix(f, e.dim(n), e.dim(m));
      Matrix mu = e.mult(n, m);
      Matrix rhs = naive ? mu : action_of(e.seq.levels[n + m], chi(n, m)) * mu;
      if (!(swapped == rhs)) rep.violations.push_back({naive ? "naive" : "commutative", n, m, -1});
    }
  return rep;
}

bool is_algebra_morphism(const SymAlgebra& src, const SymAlgebra& tgt,
                         const std::vector<Matrix>& comps) {
  if (!components_equivariant(src.seq, tgt.seq, comps)) return false;
  int N = src.cutoff();
  for (int n = 0; n <= N; ++n)
    for (int m = 0; n + m <= N; ++m) {
      if (src.dim(n) == 0 || src.dim(m) == 0) continue;
      Matrix lhs = comps[n + m] * src.mult(n, m);
      Matrix rhs = tgt.mult(n, m) * comps[n].kron(comps[m]);
      if (!(lhs == rhs)) return false;
    }
  return comps[0] * src.unit == tgt.unit;
}

// ---- T(V) -------------------------------------------------------------------

static long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

SymAlgebra tensor_algebra(Field f, int d, int cutoff) {
  if (d < 0) throw ArgError("tensor_algebra: negative dimension");
  SymAlgebra e;
  e.seq = SymSeq::zero(f, cutoff);
  for (int n = 0; n <= cutoff; ++n) {
    long long dim = ipow(d, n);
    if (dim > max_level_dim()) throw ConfigError("tensor_algebra level exceeds SYMQCS_MAX_DIM");
    SnModule lvl;
    lvl.n = n;
    lvl.dim = static_cast<int>(dim);
    lvl.field = f;
    for (int i = 1; i < n; ++i) {
      // place permutation: s_i swaps letters i and i+1 of the word
      Matrix a(f, lvl.dim, lvl.dim);
      for (int w = 0; w < lvl.dim; ++w) {
        int hi = static_cast<int>(ipow(d, n - i));
        int lo = static_cast<int>(ipow(d, n - i - 1));
        int li = (w / hi) % d;
        int lj = (w / lo) % d;
        int w2 = w + (lj - li) * hi + (li - lj) * lo;
        a.at(w2, w) = 1;
      }
      lvl.gen_actions.push_back(std::move(a));
    }
    e.seq.levels[n] = std::move(lvl);
  }
  for (int n = 0; n <= cutoff; ++n)
    for (int m = 0; n + m <= cutoff; ++m)
      e.mults[{n, m}] = Matrix::identity(f, e.dim(n) * e.dim(m));  // concatenation of words
  e.unit = Matrix::identity(f, 1);
  return e;
}

// ---- Λ(V) -------------------------------------------------------------------

namespace {
struct ExteriorData {
  std::vector<Matrix> psi;   // Λ-coordinates of a tensor word: C(d,n) × d^n
  std::vector<Matrix> lift;  // strictly increasing words as tensors: d^n × C(d,n)
};

std::vector<int> word_letters(int w, int d, int n) {
  std::vector<int> letters(n);
  for (int i = n - 1; i >= 0; --i) {
    letters[i] = w % d;
    w /= d;
  }
  return letters;
}

ExteriorData exterior_data(Field f, int d, int cutoff) {
  ExteriorData x;
  SymAlgebra t = tensor_algebra(f, d, cutoff);
  for (int n = 0; n <= cutoff; ++n) {
    int dn = t.dim(n);
    // Span of words with a repeated letter together with w + s_i(w); this is
    // the action-closed subspace the quotient formula names.
    SpanBuilder rel(f, dn);
    for (int w = 0; w < dn; ++w) {
      auto letters = word_letters(w, d, n);
      bool repeat = false;
      for (int i = 0; i < n && !repeat; ++i)
        for (int j = i + 1; j < n; ++j)
          if (letters[i] == letters[j]) {
            repeat = true;
            break;
          }
      if (repeat) {
        std::vector<Rat> v(dn, Rat(0));
        v[w] = 1;
        rel.add(std::move(v));
      }
    }
    for (int i = 1; i < n; ++i) {
      const Matrix& a = t.seq.levels[n].gen_actions[i - 1];
      for (int w = 0; w < dn; ++w) {
        std::vector<Rat> v(dn, Rat(0));
        v[w] = 1;
        for (int r = 0; r < dn; ++r)
          if (a.at(r, w) != 0) v[r] = f.add(v[r], a.at(r, w));
        rel.add(std::move(v));
      }
    }
    QuotientSpace q(f, dn, rel.basis());
    std::vector<int> incr_words;
    for (int w = 0; w < dn; ++w) {
      auto letters = word_letters(w, d, n);
      bool incr = true;
      for (int i = 0; i + 1 < n; ++i)
        if (letters[i] >= letters[i + 1]) incr = false;
      if (incr) incr_words.push_back(w);
    }
    if (static_cast<int>(incr_words.size()) != q.dim())
      throw InvariantViolation("exterior: increasing words do not match quotient dimension");
    Matrix lift(f, dn, q.dim());
    for (std::size_t j = 0; j < incr_words.size(); ++j)
      lift.at(incr_words[j], static_cast<int>(j)) = 1;
    Matrix c = q.project_matrix(lift);
    auto cinv = inverse(c);
    if (!cinv) throw InvariantViolation("exterior: increasing words do not project to a basis");
    x.psi.push_back(*cinv * q.projection());
    x.lift.push_back(std::move(lift));
  }
  return x;
}
}  // namespace

SymAlgebra exterior_algebra(Field f, int d, int cutoff) {
  SymAlgebra t = tensor_algebra(f, d, cutoff);
  ExteriorData x = exterior_data(f, d, cutoff);
  SymAlgebra e;
  e.seq = SymSeq::zero(f, cutoff);
  for (int n = 0; n <= cutoff; ++n) {
    SnModule lvl;
    lvl.n = n;
    lvl.dim = x.psi[n].rows();
    lvl.field = f;
    for (int i = 1; i < n; ++i)
      lvl.gen_actions.push_back(x.psi[n] * t.seq.levels[n].gen_actions[i - 1] * x.lift[n]);
    e.seq.levels[n] = std::move(lvl);
  }
  for (int n = 0; n <= cutoff; ++n)
    for (int m = 0; n + m <= cutoff; ++m)
      e.mults[{n, m}] = x.psi[n + m] * x.lift[n].kron(x.lift[m]);
  e.unit = Matrix::identity(f, 1);
  return e;
}

std::vector<Matrix> exterior_quotient_map(Field f, int d, int cutoff) {
  return exterior_data(f, d, cutoff).psi;
}

// ---- kΣ_* -------------------------------------------------------------------

SymAlgebra sym_group_algebra(Field f, int cutoff) {
  SymAlgebra e;
  e.seq = SymSeq::zero(f, cutoff);
  for (int n = 0; n <= cutoff; ++n) {
    if (factorial(n) > max_level_dim())
      throw ConfigError("sym_group_algebra level exceeds SYMQCS_MAX_DIM");
    e.seq.levels[n] = SnModule::conjugation(f, n);
  }
  std::vector<std::vector<Permutation>> perms;
  std::vector<std::map<std::vector<int>, int>> index;
  for (int n = 0; n <= cutoff; ++n) {
    perms.push_back(all_permutations(n));
    std::map<std::vector<int>, int> idx;
    for (std::size_t i = 0; i < perms[n].size(); ++i)
      idx[perms[n][i].images()] = static_cast<int>(i);
    index.push_back(std::move(idx));
  }
  for (int n = 0; n <= cutoff; ++n)
    for (int m = 0; n + m <= cutoff; ++m) {
      Matrix mu(f, e.dim(n + m), e.dim(n) * e.dim(m));
      for (int i = 0; i < e.dim(n); ++i)
        for (int j = 0; j < e.dim(m); ++j)
          mu.at(index[n + m].at(block_sum(perms[n][i], perms[m][j]).images()),
                i * e.dim(m) + j) = 1;
      e.mults[{n, m}] = std::move(mu);
    }
  e.unit = Matrix::identity(f, 1);
  return e;
}

// ---- trivial action -----------------------------------------------------------

void MonomialPresentation::validate() const {
  if (vars.size() != degrees.size())
    throw ArgError("presentation: vars/degrees length mismatch");
  for (int d : degrees)
    if (d < 1) throw ArgError("presentation: generator degrees must be positive");
  for (const auto& r : relations) {
    if (r.size() != vars.size()) throw ArgError("presentation: relation arity mismatch");
    long long deg = 0;
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (r[i] < 0) throw ArgError("presentation: negative exponent");
      deg += static_cast<long long>(r[i]) * degrees[i];
    }
    if (deg == 0) throw ArgError("presentation: degree-zero relation");
  }
}

MonomialPresentation MonomialPresentation::parse(const std::string& text) {
  MonomialPresentation p;
  auto lb = text.find('['), rb = text.find(']');
  if (lb == std::string::npos || rb == std::string::npos || rb < lb)
    throw ArgError("cannot parse ring '" + text + "'");
  std::string inner = text.substr(lb + 1, rb - lb - 1);
  std::size_t pos = 0;
  while (pos < inner.size()) {
    auto comma = inner.find(',', pos);
    if (comma == std::string::npos) comma = inner.size();
    std::string v = inner.substr(pos, comma - pos);
    v.erase(std::remove(v.begin(), v.end(), ' '), v.end());
    if (!v.empty()) {
      p.vars.push_back(v);
      p.degrees.push_back(1);
    }
    pos = comma + 1;
  }
  auto slash = text.find('/', rb);
  if (slash != std::string::npos) {
    auto lp = text.find('(', slash), rp = text.rfind(')');
    if (lp == std::string::npos || rp == std::string::npos)
      throw ArgError("cannot parse relations in '" + text + "'");
    std::string rels = text.substr(lp + 1, rp - lp - 1);
    pos = 0;
    while (pos < rels.size()) {
      auto comma = rels.find(',', pos);
      if (comma == std::string::npos) comma = rels.size();
      std::string mono = rels.substr(pos, comma - pos);
      mono.erase(std::remove(mono.begin(), mono.end(), ' '), mono.end());
      if (!mono.empty()) p.relations.push_back(parse_monomial_exponents(p.vars, mono));
      pos = comma + 1;
    }
  }
  p.validate();
  return p;
}

std::vector<int> parse_monomial_exponents(const std::vector<std::string>& vars,
                                          const std::string& mono) {
  std::vector<int> expo(vars.size(), 0);
  std::size_t i = 0;
  while (i < mono.size()) {
    if (mono[i] == '*') {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < mono.size() && mono[j] != '^' && mono[j] != '*') ++j;
    std::string var = mono.substr(i, j - i);
    int pow = 1;
    if (j < mono.size() && mono[j] == '^') {
      std::size_t k = j + 1;
      while (k < mono.size() && isdigit(static_cast<unsigned char>(mono[k]))) ++k;
      pow = std::stoi(mono.substr(j + 1, k - j - 1));
      j = k;
    }
    auto it = std::find(vars.begin(), vars.end(), var);
    if (it == vars.end()) throw ArgError("unknown variable '" + var + "'");
    expo[it - vars.begin()] += pow;
    i = j;
  }
  return expo;
}

static bool divisible(const std::vector<int>& mono, const std::vector<int>& rel) {
  for (std::size_t i = 0; i < mono.size(); ++i)
    if (mono[i] < rel[i]) return false;
  return true;
}

static void enumerate_monomials(const MonomialPresentation& p, std::size_t var, int remaining,
                                std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (var == p.vars.size()) {
    if (remaining == 0) out.push_back(cur);
    return;
  }
  for (int e = remaining / p.degrees[var]; e >= 0; --e) {
    cur[var] = e;
    enumerate_monomials(p, var + 1, remaining - e * p.degrees[var], cur, out);
  }
  cur[var] = 0;
}

std::vector<std::vector<int>> monomial_basis(const MonomialPresentation& p, int n) {
  std::vector<std::vector<int>> all;
  std::vector<int> cur(p.vars.size(), 0);
  enumerate_monomials(p, 0, n, cur, all);
  std::vector<std::vector<int>> out;
  for (auto& m : all) {
    bool dead = false;
    for (const auto& r : p.relations)
      if (divisible(m, r)) {
        dead = true;
        break;
      }
    if (!dead) out.push_back(std::move(m));
  }
  return out;
}

SymAlgebra trivial_action(Field f, const MonomialPresentation& pres, int cutoff) {
  pres.validate();
  SymAlgebra e;
  e.seq = SymSeq::zero(f, cutoff);
  std::vector<std::vector<std::vector<int>>> bases;
  std::vector<std::map<std::vector<int>, int>> index;
  for (int n = 0; n <= cutoff; ++n) {
    bases.push_back(monomial_basis(pres, n));
    if (static_cast<long long>(bases[n].size()) > max_level_dim())
      throw ConfigError("trivial_action level exceeds SYMQCS_MAX_DIM");
    std::map<std::vector<int>, int> idx;
    for (std::size_t i = 0; i < bases[n].size(); ++i) idx[bases[n][i]] = static_cast<int>(i);
    index.push_back(std::move(idx));
    e.seq.levels[n] = SnModule::trivial(f, n, static_cast<int>(bases[n].size()));
  }
  if (e.dim(0) != 1) throw ArgError("presentation does not give a connected graded ring");
  for (int n = 0; n <= cutoff; ++n)
    for (int m = 0; n + m <= cutoff; ++m) {
      Matrix mu(f, e.dim(n + m), e.dim(n) * e.dim(m));
      for (int i = 0; i < e.dim(n); ++i)
        for (int j = 0; j < e.dim(m); ++j) {
          std::vector<int> prod = bases[n][i];
          for (std::size_t v = 0; v < prod.size(); ++v) prod[v] += bases[m][j][v];
          auto it = index[n + m].find(prod);
          if (it != index[n + m].end()) mu.at(it->second, i * e.dim(m) + j) = 1;
        }
      e.mults[{n, m}] = std::move(mu);
    }
  e.unit = Matrix::identity(f, 1);
  return e;
}

std::vector<Matrix> total_mult_components(const SymAlgebra& e) {
  SymSeq sq = day_tensor(e.seq, e.seq);
  std::vector<Matrix> comps;
  for (int t = 0; t <= e.cutoff(); ++t) {
    auto blocks = day_layout(e.seq, e.seq, t);
    Matrix a(e.field(), e.dim(t), sq.dim(t));
    for (const auto& b : blocks) {
      auto reps = shuffle_reps(b.p, b.q);
      const Matrix& mu = e.mult(b.p, b.q);
      for (int r = 0; r < b.num_shuffles; ++r) {
        Matrix rho = action_of(e.seq.levels[t], reps[r]) * mu;
        for (int i = 0; i < b.dim_m; ++i)
          for (int j = 0; j < b.dim_n; ++j)
            for (int row = 0; row < e.dim(t); ++row) {
              const Rat& v = rho.at(row, i * b.dim_n + j);
              if (v != 0) a.at(row, b.index(r, i, j)) = v;
            }
      }
    }
    comps.push_back(std::move(a));
  }
  return comps;
}

}  // namespace symqcs
