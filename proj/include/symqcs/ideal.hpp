#pragma once

#include "symqcs/emod.hpp"

namespace symqcs {

/// Homogeneous element: degree plus coordinates in the algebra level basis.
struct HomElem {
  int degree = 0;
  std::vector<Rat> coords;
};

/// Σ-stable, right-E-stable levelwise subspace family of E with generator
/// provenance. Levels are canonical SpanBuilder bases per degree ≤ cutoff.
struct SigmaIdeal {
  std::shared_ptr<const SymAlgebra> algebra;
  std::vector<HomElem> generators;
  std::vector<Matrix> levels;  // basis columns per degree

  int cutoff() const { return algebra->cutoff(); }
  int level_dim(int t) const { return levels[t].cols(); }
  bool contains(int degree, const std::vector<Rat>& v) const;
  bool contains(const SigmaIdeal& other) const;  // levelwise
  bool equal_levels(const SigmaIdeal& other) const;
  bool is_zero() const;
  /// Contains the whole tail E_{≥1} within the window.
  bool contains_positive_part() const;
};

/// Smallest levelwise family containing the generators, closed under the
/// group actions and right multiplication; saturation to a fixpoint.
SigmaIdeal sigma_closure(std::shared_ptr<const SymAlgebra> e, std::vector<HomElem> gens);

SigmaIdeal zero_ideal(std::shared_ptr<const SymAlgebra> e);
/// The tail ideal E_{≥1}.
SigmaIdeal positive_part(std::shared_ptr<const SymAlgebra> e);

/// Levelwise sum (join) of two ideals of one algebra.
SigmaIdeal ideal_sum(const SigmaIdeal& a, const SigmaIdeal& b);

/// Σ-closure of the naive levelwise product.
SigmaIdeal ideal_product(const SigmaIdeal& a, const SigmaIdeal& b);

struct TwoSidedReport {
  bool two_sided = true;
  struct Witness {
    int left_degree, right_degree;
    int left_basis, ideal_basis;
  };
  std::vector<Witness> failures;
};

/// Left absorption y·x ∈ I for all basis y of E and basis x of I. Genuine
/// Σ-ideals always pass (y·x is a shuffled x·y); failures indicate corruption.
TwoSidedReport is_two_sided(const SigmaIdeal& i);

struct PrimeCellReport {
  int a, b;
  bool zero_divisor_found = false;
  bool exact = true;  // kernel-free or witness found; false = randomized search only
  std::vector<Rat> witness_left, witness_right;  // quotient coordinates when found
};
struct PrimeReport {
  bool prime_up_to_cutoff = true;
  bool complete = true;  // all cells decided exactly
  std::vector<PrimeCellReport> cells;
};

/// Necessary primality condition on homogeneous elements: no pair of elements
/// outside P multiplies into P, checked degree-pair by degree-pair on the
/// quotient multiplication map. Exact when the kernel is zero or a rank-one
/// kernel element exists among basis tensors / small pencils; otherwise a
/// seeded randomized search with declared incompleteness.
PrimeReport is_prime_up_to(const SigmaIdeal& p, std::uint64_t seed = 17);

/// Σ-closure of all homogeneous b from the spanning family with b^t ∈ I for
/// some t ≥ 1, t·deg(b) ≤ cutoff. Exact for monomial-type ideals.
SigmaIdeal radical_up_to(const SigmaIdeal& i, std::uint64_t seed = 17);

struct FinGenReport {
  bool finitely_sigma_generated = true;
  std::vector<int> failing_degrees;  // closure misses E_t there
};

/// Does sigma_closure(gens) contain E_{≥1} levelwise up to the cutoff?
FinGenReport is_finitely_sigma_generated(std::shared_ptr<const SymAlgebra> e,
                                         const std::vector<HomElem>& gens);

}  // namespace symqcs
