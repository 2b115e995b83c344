#include "symqcs/projtop.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace symqcs {

FamilyBuildReport make_prime_family(std::shared_ptr<const SymAlgebra> e,
                                    std::vector<std::pair<std::string, SigmaIdeal>> candidates) {
  FamilyBuildReport rep;
  rep.family.algebra = e;
  for (auto& [name, ideal] : candidates) {
    if (ideal.contains_positive_part()) {
      rep.rejected_contains_positive.push_back(name);
      continue;
    }
    if (!is_prime_up_to(ideal).prime_up_to_cutoff) {
      rep.rejected_not_prime.push_back(name);
      continue;
    }
    bool dup = false;
    for (const auto& p : rep.family.primes)
      if (p.equal_levels(ideal)) {
        dup = true;
        break;
      }
    if (dup) {
      rep.deduplicated.push_back(name);
      continue;
    }
    rep.family.primes.push_back(std::move(ideal));
    rep.family.names.push_back(name);
  }
  return rep;
}

std::vector<int> v_set(const SigmaIdeal& i, const PrimeFamily& fam) {
  std::vector<int> out;
  for (int p = 0; p < fam.size(); ++p)
    if (fam.primes[p].contains(i)) out.push_back(p);
  return out;
}

std::vector<int> d_set(const HomElem& f, const PrimeFamily& fam) {
  std::vector<int> out;
  for (int p = 0; p < fam.size(); ++p)
    if (!fam.primes[p].contains(f.degree, f.coords)) out.push_back(p);
  return out;
}

static std::vector<int> set_union(std::vector<int> a, const std::vector<int>& b) {
  for (int x : b)
    if (std::find(a.begin(), a.end(), x) == a.end()) a.push_back(x);
  std::sort(a.begin(), a.end());
  return a;
}

static std::vector<int> set_intersect(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  for (int x : a)
    if (std::find(b.begin(), b.end(), x) != b.end()) out.push_back(x);
  return out;
}

static std::string idx_str(const std::vector<int>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + "}";
}

TopologyReport check_topology_laws(const PrimeFamily& fam, const std::vector<SigmaIdeal>& ideals,
                                   const std::vector<HomElem>& elements) {
  TopologyReport rep;
  for (std::size_t i = 0; i < ideals.size(); ++i)
    for (std::size_t j = i; j < ideals.size(); ++j) {
      auto prod = ideal_product(ideals[i], ideals[j]);
      auto lhs = v_set(prod, fam);
      auto rhs = set_union(v_set(ideals[i], fam), v_set(ideals[j], fam));
      rep.checks.push_back({"V(IJ)=V(I)∪V(J)",
                            "ideals " + std::to_string(i) + "," + std::to_string(j) + " -> " +
                                idx_str(lhs),
                            lhs == rhs});
      auto sum = ideal_sum(ideals[i], ideals[j]);
      auto lhs2 = v_set(sum, fam);
      auto rhs2 = set_intersect(v_set(ideals[i], fam), v_set(ideals[j], fam));
      rep.checks.push_back({"V(I+J)=V(I)∩V(J)",
                            "ideals " + std::to_string(i) + "," + std::to_string(j) + " -> " +
                                idx_str(lhs2),
                            lhs2 == rhs2});
    }
  const auto& e = fam.algebra;
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (std::size_t j = i; j < elements.size(); ++j) {
      HomElem fg;
      fg.degree = elements[i].degree + elements[j].degree;
      fg.coords =
          e->multiply(elements[i].degree, elements[i].coords, elements[j].degree,
                      elements[j].coords);
      auto lhs = d_set(fg, fam);
      auto rhs = set_intersect(d_set(elements[i], fam), d_set(elements[j], fam));
      rep.checks.push_back({"D(f)∩D(g)=D(fg)",
                            "elements " + std::to_string(i) + "," + std::to_string(j) + " -> " +
                                idx_str(lhs),
                            lhs == rhs});
    }
  for (const auto& c : rep.checks)
    if (!c.verified) rep.all_verified = false;
  return rep;
}

SpectralReport check_spectral_properties(const PrimeFamily& fam,
                                         const std::vector<HomElem>& elements) {
  SpectralReport rep;
  // T0: distinct points must differ on some level subspace
  for (int i = 0; i < fam.size(); ++i)
    for (int j = i + 1; j < fam.size(); ++j)
      if (fam.primes[i].equal_levels(fam.primes[j])) {
        rep.t0 = false;
        rep.indistinguishable_pairs.push_back({i, j});
      }
  // quasi-compactness: greedy subcovers of each covered D(a) by basis opens
  for (std::size_t a = 0; a < elements.size(); ++a) {
    auto da = d_set(elements[a], fam);
    std::vector<std::vector<int>> basis_opens;
    for (std::size_t b = 0; b < elements.size(); ++b) {
      auto db = d_set(elements[b], fam);
      if (set_intersect(db, da).size() == db.size()) basis_opens.push_back(db);
    }
    std::vector<int> covered;
    int used = 0;
    for (const auto& db : basis_opens) {
      if (covered.size() == da.size()) break;
      auto bigger = set_union(covered, db);
      if (bigger.size() > covered.size()) {
        covered = bigger;
        ++used;
      }
    }
    SpectralReport::Subcover sc;
    sc.open = "D(element " + std::to_string(a) + ")";
    sc.cover_size = static_cast<int>(basis_opens.size());
    sc.subcover_size = used;
    sc.covered = (covered == da);
    rep.quasicompact.push_back(sc);
  }
  // generic points: all closed sets are unions of point closures
  std::vector<std::vector<int>> closures(fam.size());
  for (int p = 0; p < fam.size(); ++p)
    for (int q = 0; q < fam.size(); ++q)
      if (fam.primes[q].contains(fam.primes[p])) closures[p].push_back(q);
  std::set<std::vector<int>> closed;
  closed.insert(std::vector<int>{});
  for (int p = 0; p < fam.size(); ++p) {
    std::set<std::vector<int>> next = closed;
    for (const auto& c : closed) next.insert(set_union(c, closures[p]));
    closed = next;
  }
  for (const auto& c : closed) {
    if (c.empty()) continue;
    bool splits = false;
    for (const auto& c1 : closed) {
      if (c1.empty() || c1 == c || set_intersect(c1, c).size() != c1.size()) continue;
      for (const auto& c2 : closed) {
        if (c2.empty() || c2 == c || set_intersect(c2, c).size() != c2.size()) continue;
        if (set_union(c1, c2) == c) {
          splits = true;
          break;
        }
      }
      if (splits) break;
    }
    SpectralReport::GenericPoint gp;
    gp.closed_set = idx_str(c);
    gp.irreducible = !splits;
    if (!splits) {
      for (int p : c)
        if (closures[p] == c) gp.generic = p;
      if (gp.generic < 0) rep.all_irreducible_have_generic = false;
    }
    rep.closed_sets.push_back(gp);
  }
  return rep;
}

bool radical_matches_intersection(const SigmaIdeal& i, const PrimeFamily& fam) {
  SigmaIdeal rad = radical_up_to(i);
  auto vs = v_set(i, fam);
  if (vs.empty()) return false;
  const auto& e = fam.algebra;
  for (int t = 0; t <= e->cutoff(); ++t) {
    // intersect the level subspaces of the primes in V(I)
    SpanBuilder all(e->field(), e->dim(t));
    all.add_cols(Matrix::identity(e->field(), e->dim(t)));
    Matrix inter = Matrix::identity(e->field(), e->dim(t));
    bool first = true;
    for (int p : vs) {
      if (first) {
        inter = fam.primes[p].levels[t];
        first = false;
        continue;
      }
      // intersection via kernel of [A | -B]
      const Matrix& a = inter;
      const Matrix& b = fam.primes[p].levels[t];
      Matrix stacked = a.hcat(b.scaled(Rat(-1)));
      Matrix k = kernel_basis(stacked);
      SpanBuilder sb(e->field(), e->dim(t));
      for (int c = 0; c < k.cols(); ++c) {
        std::vector<Rat> v(e->dim(t), Rat(0));
        for (int r = 0; r < a.cols(); ++r) {
          const Rat& coeff = k.at(r, c);
          if (coeff == 0) continue;
          for (int row = 0; row < e->dim(t); ++row)
            v[row] = e->field().add(v[row], e->field().mul(coeff, a.at(row, r)));
        }
        sb.add(std::move(v));
      }
      inter = sb.basis();
    }
    SpanBuilder radspan(e->field(), e->dim(t));
    radspan.add_cols(rad.levels[t]);
    SpanBuilder interspan(e->field(), e->dim(t));
    interspan.add_cols(inter);
    if (radspan.dim() != interspan.dim() || !radspan.contains_cols(inter)) return false;
  }
  return true;
}

static std::vector<int> reduce_fraction(std::vector<int> num, int& power,
                                        const std::vector<int>& f) {
  bool divides = true;
  while (power > 0 && divides) {
    for (std::size_t i = 0; i < num.size(); ++i)
      if (num[i] < f[i]) divides = false;
    if (divides) {
      for (std::size_t i = 0; i < num.size(); ++i) num[i] -= f[i];
      --power;
    }
  }
  return num;
}

static bool in_relation_ideal(const std::vector<int>& mono, const MonomialPresentation& ring) {
  for (const auto& r : ring.relations) {
    bool div = true;
    for (std::size_t i = 0; i < mono.size(); ++i)
      if (mono[i] < r[i]) {
        div = false;
        break;
      }
    if (div) return true;
  }
  return false;
}

std::optional<ChartElement> chart_mul(const ChartElement& x, const ChartElement& y,
                                      const std::vector<int>& f,
                                      const MonomialPresentation& ring) {
  ChartElement z;
  z.numerator.resize(x.numerator.size());
  for (std::size_t i = 0; i < z.numerator.size(); ++i)
    z.numerator[i] = x.numerator[i] + y.numerator[i];
  z.power = x.power + y.power;
  if (in_relation_ideal(z.numerator, ring)) return std::nullopt;
  z.numerator = reduce_fraction(z.numerator, z.power, f);
  return z;
}

ChartElement restrict_chart(const ChartElement& x, const std::vector<int>& f,
                            const std::vector<int>& g, const MonomialPresentation& ring) {
  (void)ring;
  ChartElement z;
  z.numerator.resize(x.numerator.size());
  for (std::size_t i = 0; i < z.numerator.size(); ++i)
    z.numerator[i] = x.numerator[i] + x.power * g[i];
  z.power = x.power;
  std::vector<int> fg(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) fg[i] = f[i] + g[i];
  z.numerator = reduce_fraction(z.numerator, z.power, fg);
  return z;
}

ChartPresentation sections_commutative(const MonomialPresentation& ring,
                                       const std::vector<int>& f, int bound) {
  ring.validate();
  int fdeg = 0;
  for (std::size_t i = 0; i < f.size(); ++i) fdeg += f[i] * ring.degrees[i];
  if (fdeg == 0) throw ArgError("sections: f must have positive degree");
  if (in_relation_ideal(f, ring)) throw ArgError("sections: f lies in the relation ideal");
  ChartPresentation out;
  out.ring = ring;
  out.f = f;
  out.bound = bound;
  std::set<ChartElement> seen;
  for (int t = 0; t <= bound; ++t)
    for (const auto& mono : monomial_basis(ring, t * fdeg)) {
      ChartElement x;
      x.numerator = mono;
      x.power = t;
      x.numerator = reduce_fraction(x.numerator, x.power, f);
      if (seen.insert(x).second) out.basis.push_back(x);
    }
  std::sort(out.basis.begin(), out.basis.end());
  // multiplicative generators: non-units not expressible as smaller products
  std::vector<ChartElement> nonunits;
  for (const auto& x : out.basis)
    if (x.power > 0) nonunits.push_back(x);
  for (const auto& z : nonunits) {
    bool decomposable = false;
    for (const auto& u : nonunits) {
      if (decomposable) break;
      for (const auto& v : nonunits) {
        auto uv = chart_mul(u, v, f, ring);
        if (uv && *uv == z) {
          decomposable = true;
          break;
        }
      }
    }
    if (!decomposable) out.generators.push_back(z);
  }
  // relations among generator monomials up to the bound: distinct exponent
  // words with equal values, or words that vanish
  std::map<ChartElement, std::vector<int>> values;
  std::vector<int> expo(out.generators.size(), 0);
  std::function<void(std::size_t, int, std::optional<ChartElement>)> walk =
      [&](std::size_t g, int power_used, std::optional<ChartElement> acc) {
        if (g == out.generators.size()) {
          bool trivial = std::all_of(expo.begin(), expo.end(), [](int k) { return k == 0; });
          if (trivial) return;
          if (!acc) {
            out.relations.push_back("generator word " + idx_str(expo) + " vanishes");
            return;
          }
          auto it = values.find(*acc);
          if (it != values.end() && it->second != expo)
            out.relations.push_back("monomial collision: " + idx_str(expo) + " = " +
                                    idx_str(it->second));
          else
            values[*acc] = expo;
          return;
        }
        for (int k = 0;; ++k) {
          int pw = power_used + k * out.generators[g].power;
          if (pw > bound) break;
          expo[g] = k;
          std::optional<ChartElement> cur = acc;
          for (int rep = 0; rep < k && cur; ++rep)
            cur = chart_mul(*cur, out.generators[g], f, ring);
          walk(g + 1, pw, cur);
        }
        expo[g] = 0;
      };
  ChartElement unit;
  unit.numerator.assign(ring.vars.size(), 0);
  unit.power = 0;
  walk(0, 0, unit);
  std::sort(out.relations.begin(), out.relations.end());
  out.relations.erase(std::unique(out.relations.begin(), out.relations.end()),
                      out.relations.end());
  return out;
}

EmbeddingReport projective_space_embedding_check(int d, int cutoff) {
  EmbeddingReport rep;
  rep.d = d;
  rep.cutoff = cutoff;
  Field q = Field::rationals();
  auto e = std::make_shared<SymAlgebra>(tensor_algebra(q, d, cutoff));
  std::vector<HomElem> comms;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      HomElem h;
      h.degree = 2;
      h.coords.assign(e->dim(2), Rat(0));
      h.coords[i * d + j] = 1;
      h.coords[j * d + i] = -1;
      comms.push_back(std::move(h));
    }
  SigmaIdeal icomm = sigma_closure(e, comms);
  for (int n = 0; n <= cutoff; ++n) {
    rep.quotient_dims.push_back(e->dim(n) - icomm.level_dim(n));
    rep.symmetric_dims.push_back(static_cast<int>(binomial(d + n - 1, n)));
    if (rep.quotient_dims.back() != rep.symmetric_dims.back()) rep.dims_match = false;
  }
  // pulled-back coordinate primes: closures of {x_k} ∪ commutators contain I
  for (int k = 0; k < d && rep.pullbacks_contain_commutators; ++k) {
    std::vector<HomElem> gens = comms;
    HomElem xk;
    xk.degree = 1;
    xk.coords.assign(d, Rat(0));
    xk.coords[k] = 1;
    gens.push_back(std::move(xk));
    SigmaIdeal pk = sigma_closure(e, gens);
    if (!pk.contains(icomm)) rep.pullbacks_contain_commutators = false;
  }
  return rep;
}

FamilyBuildReport monomial_prime_family(std::shared_ptr<const SymAlgebra> e,
                                        const MonomialPresentation& pres) {
  int nvars = static_cast<int>(pres.vars.size());
  std::vector<std::pair<std::string, SigmaIdeal>> cands;
  for (int mask = 0; mask < (1 << nvars) - 1; ++mask) {
    std::vector<HomElem> gens;
    std::string name = "(";
    for (int v = 0; v < nvars; ++v) {
      if (!(mask & (1 << v))) continue;
      std::vector<int> mono(nvars, 0);
      mono[v] = 1;
      auto basis = monomial_basis(pres, pres.degrees[v]);
      HomElem h;
      h.degree = pres.degrees[v];
      h.coords.assign(e->dim(h.degree), Rat(0));
      for (std::size_t i = 0; i < basis.size(); ++i)
        if (basis[i] == mono) h.coords[i] = 1;
      gens.push_back(std::move(h));
      if (name.size() > 1) name += ",";
      name += pres.vars[v];
    }
    name += ")";
    if (mask == 0) name = "(0)";
    cands.push_back({name, sigma_closure(e, std::move(gens))});
  }
  return make_prime_family(e, std::move(cands));
}

}  // namespace symqcs
