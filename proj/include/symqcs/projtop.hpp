#pragma once

#include "symqcs/ideal.hpp"

namespace symqcs {

/// Finite family of candidate points of Proj^Σ E: prime Σ-ideals not
/// containing E_{≥1}. All topology verdicts are relative to the family.
struct PrimeFamily {
  std::shared_ptr<const SymAlgebra> algebra;
  std::vector<SigmaIdeal> primes;
  std::vector<std::string> names;

  int size() const { return static_cast<int>(primes.size()); }
};

struct FamilyBuildReport {
  PrimeFamily family;
  std::vector<std::string> rejected_not_prime;
  std::vector<std::string> rejected_contains_positive;
  std::vector<std::string> deduplicated;
};

/// Validates candidates: primality recheck, E_{≥1} exclusion, dedup.
FamilyBuildReport make_prime_family(std::shared_ptr<const SymAlgebra> e,
                                    std::vector<std::pair<std::string, SigmaIdeal>> candidates);

/// Member indices of V(I) = {P in the family : P ⊇ I}.
std::vector<int> v_set(const SigmaIdeal& i, const PrimeFamily& fam);

/// Member indices of the standard open D(f) = {P : f ∉ P}.
std::vector<int> d_set(const HomElem& f, const PrimeFamily& fam);

struct LawCheck {
  std::string law;
  std::string instance;
  bool verified = false;
};
struct TopologyReport {
  std::vector<LawCheck> checks;
  bool all_verified = true;
};

/// V(IJ)=V(I)∪V(J), V(ΣI)=∩V(I), D(f)∩D(g)=D(fg) over the family.
TopologyReport check_topology_laws(const PrimeFamily& fam, const std::vector<SigmaIdeal>& ideals,
                                   const std::vector<HomElem>& elements);

struct SpectralReport {
  bool t0 = true;
  std::vector<std::pair<int, int>> indistinguishable_pairs;
  struct Subcover {
    std::string open;      // D(a) being covered
    int cover_size = 0;    // basis opens available
    int subcover_size = 0; // greedy subcover found
    bool covered = true;
  };
  std::vector<Subcover> quasicompact;
  struct GenericPoint {
    std::string closed_set;  // member indices
    bool irreducible = false;
    int generic = -1;  // index, or -1 when missing
  };
  std::vector<GenericPoint> closed_sets;
  bool all_irreducible_have_generic = true;
};

/// T₀, basis-subcover extraction and generic points on the finite subspace.
SpectralReport check_spectral_properties(const PrimeFamily& fam,
                                         const std::vector<HomElem>& elements);

/// radical_up_to(I) levels equal ∩_{P ∈ V(I)} P levels over the family.
bool radical_matches_intersection(const SigmaIdeal& i, const PrimeFamily& fam);

/// Degree-zero chart element a/f^t in reduced form (no further f divides a).
struct ChartElement {
  std::vector<int> numerator;  // exponent vector
  int power = 0;

  bool operator==(const ChartElement& o) const {
    return numerator == o.numerator && power == o.power;
  }
  bool operator<(const ChartElement& o) const {
    return std::tie(power, numerator) < std::tie(o.power, o.numerator);
  }
};

/// Presentation of (R_f)_0 up to a power bound: basis, multiplicative
/// generators, and the relations found among generator monomials.
struct ChartPresentation {
  MonomialPresentation ring;
  std::vector<int> f;
  int bound = 0;
  std::vector<ChartElement> basis;
  std::vector<ChartElement> generators;
  // pairs of distinct generator-exponent words with equal value (or zero)
  std::vector<std::string> relations;
};

ChartPresentation sections_commutative(const MonomialPresentation& ring,
                                       const std::vector<int>& f, int bound);

/// The restriction (R_f)_0 → (R_fg)_0 for D(fg) ⊆ D(f): a/f^t ↦ a·g^t/(fg)^t.
ChartElement restrict_chart(const ChartElement& x, const std::vector<int>& f,
                            const std::vector<int>& g, const MonomialPresentation& ring);

/// Multiply chart elements over f (monomial arithmetic, relation-aware).
/// Returns nullopt when the product lies in the relation ideal.
std::optional<ChartElement> chart_mul(const ChartElement& x, const ChartElement& y,
                                      const std::vector<int>& f,
                                      const MonomialPresentation& ring);

struct EmbeddingReport {
  int d = 0, cutoff = 0;
  std::vector<int> quotient_dims;     // dim T(V)_n / I_n
  std::vector<int> symmetric_dims;    // C(d+n−1, n)
  bool dims_match = true;
  bool pullbacks_contain_commutators = true;
};

/// Projective-space embedding: commutator Σ-ideal I of T(V), quotient dims against
/// Sym(V), and Σ-closures of pulled-back monomial primes containing I.
EmbeddingReport projective_space_embedding_check(int d, int cutoff);

/// Built-in family generator for trivial-action monomial rings: the closures
/// of every proper subset of the variables (including the zero ideal), with
/// the usual validation applied.
FamilyBuildReport monomial_prime_family(std::shared_ptr<const SymAlgebra> e,
                                        const MonomialPresentation& pres);

}  // namespace symqcs
