#pragma once

#include <map>
#include <string>

#include "symqcs/symseq.hpp"

namespace symqcs {

/// Symmetric graded k-algebra: a SymSeq E with equivariant multiplications
/// μ_{n,m}: E_n⊗E_m → E_{n+m} for n+m ≤ cutoff and E_0 = k.
struct SymAlgebra {
  SymSeq seq;
  std::map<std::pair<int, int>, Matrix> mults;  // (n,m) with n+m ≤ cutoff
  Matrix unit;                                  // dim E_0 × 1, always [[1]] here

  const Field& field() const { return seq.field; }
  int cutoff() const { return seq.cutoff; }
  int dim(int n) const { return seq.dim(n); }
  const Matrix& mult(int n, int m) const;

  /// μ applied to homogeneous coordinate vectors.
  std::vector<Rat> multiply(int deg_a, const std::vector<Rat>& a, int deg_b,
                            const std::vector<Rat>& b) const;

  bool operator==(const SymAlgebra& o) const;
};

struct AxiomViolation {
  std::string kind;  // "equivariance" | "associativity" | "unit" | "shape"
  int n = -1, m = -1, p = -1;
};

struct AxiomReport {
  std::vector<AxiomViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Equivariance, associativity and unit laws for all cells within the cutoff.
AxiomReport check_axioms(const SymAlgebra& e);

/// Commutativity square μ_{m,n}∘twist = χ_{n,m}∘μ_{n,m}; naive mode drops χ.
/// Violations are (n,m) cells (p unused).
AxiomReport check_commutative(const SymAlgebra& e, bool naive = false);

/// f_{n+m}∘μ = μ∘(f_n⊗f_m), unit compatibility, and levelwise equivariance.
bool is_algebra_morphism(const SymAlgebra& src, const SymAlgebra& tgt,
                         const std::vector<Matrix>& comps);

/// T(V): level n = V^{⊗n} with place permutation, μ = concatenation.
SymAlgebra tensor_algebra(Field f, int d, int cutoff);

/// Λ(V) computed as the quotient of V^{⊗n} by the repeated-letter subspace,
/// expressed in the strictly-increasing-word basis. Also returns the quotient
/// maps T(V) → Λ(V) when requested via exterior_quotient_map.
SymAlgebra exterior_algebra(Field f, int d, int cutoff);
std::vector<Matrix> exterior_quotient_map(Field f, int d, int cutoff);

/// kΣ_*: level n = kΣ_n with the conjugation action, μ the block product
/// (σ,τ) ↦ σ×τ. See the project notes on the choice of action.
SymAlgebra sym_group_algebra(Field f, int cutoff);

/// Commutative monomial presentation: generators with degrees, monomial relations.
struct MonomialPresentation {
  std::vector<std::string> vars;
  std::vector<int> degrees;
  std::vector<std::vector<int>> relations;  // exponent vectors

  void validate() const;
  /// "Q[x,y]" or "Q[x,y]/(x^3,y^2)"; degrees default to 1.
  static MonomialPresentation parse(const std::string& text);
};

/// Trivial-action symmetric algebra of a commutative monomial ring.
SymAlgebra trivial_action(Field f, const MonomialPresentation& pres, int cutoff);

/// "x^2*y" → exponent vector over vars; used by the presentation parser and CLI.
std::vector<int> parse_monomial_exponents(const std::vector<std::string>& vars,
                                          const std::string& mono);

/// Degree-n monomial basis (exponent vectors, deterministic order) of the ring.
std::vector<std::vector<int>> monomial_basis(const MonomialPresentation& pres, int n);

/// Collapse of the Day square: components (E∧E)_t → E_t of the total
/// multiplication, sending (s,(p,q),x⊗y) to ρ(s)·μ_{p,q}(x⊗y).
std::vector<Matrix> total_mult_components(const SymAlgebra& e);

}  // namespace symqcs
