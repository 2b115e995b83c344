#pragma once

#include <string>
#include <vector>

#include "symqcs/matrix.hpp"
#include "symqcs/perm.hpp"
#include "symqcs/rng.hpp"

namespace symqcs {

struct InvariantViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Finite-dimensional Σ_n-representation given by the actions of the adjacent
/// transpositions s_1,…,s_{n−1}. Arbitrary permutations act through their
/// adjacent-transposition word.
struct SnModule {
  int n = 0;
  int dim = 0;
  std::vector<Matrix> gen_actions;  // empty when n <= 1
  Field field = Field::rationals();

  static SnModule trivial(Field f, int n, int dim = 1);
  static SnModule zero(Field f, int n) { return trivial(f, n, 0); }
  /// kΣ_n with basis Σ_n in lex order, g·x = gx.
  static SnModule regular(Field f, int n);
  /// kΣ_n with basis Σ_n in lex order, g·x = gxg⁻¹.
  static SnModule conjugation(Field f, int n);
  /// Sign representation.
  static SnModule sign_rep(Field f, int n);

  /// s_i², braid, far commutation, invertibility; throws InvariantViolation.
  void validate() const;
  bool operator==(const SnModule& o) const;
};

Matrix action_of(const SnModule& m, const Permutation& s);

/// Direct sum, block matrices in order.
SnModule direct_sum(const SnModule& a, const SnModule& b);

/// A Σ_p×Σ_q-representation on one space: the two generator families must commute.
struct ProductRep {
  int p = 0, q = 0;
  int dim = 0;
  std::vector<Matrix> p_gen_actions;  // p-1 matrices
  std::vector<Matrix> q_gen_actions;  // q-1 matrices
  Field field = Field::rationals();

  static ProductRep tensor(const SnModule& mp, const SnModule& nq);
  void validate() const;  // throws when the actions fail to commute
  Matrix action(const Permutation& sigma, const Permutation& tau) const;
};

/// Induction from the Young subgroup Σ_p×Σ_q to Σ_{p+q}. Basis: (shuffle coset
/// rep, source basis vector), shuffle-major, reps in lex order.
SnModule induce(const ProductRep& w);

/// Induction from the tail copy of Σ_q in Σ_l (the embedding free modules use).
/// Basis: (coset rep, source basis vector), rep-major, reps in lex order.
SnModule induce_tail(int l, const SnModule& w);

/// Restriction along Σ_{n-k} ↪ Σ_n, τ ↦ id_k ⊕ τ (drop the first k generators).
SnModule restrict_tail(const SnModule& m, int k);

struct Coinvariants {
  SnModule space;     // trivial-group quotient data (actions become identities)
  Matrix projection;  // dim(space) x dim(m), surjective
};

/// M_n/⟨v − s_i(v)⟩ with the canonical projection.
Coinvariants coinvariants(const SnModule& m);

/// (1/n!)·Σ_σ action(σ); requires char(k) ∤ n!.
Matrix maschke_average(const SnModule& m);

/// A seeded change of basis applied to a permutation-flavored module; always a
/// valid SnModule with non-monomial matrices.
SnModule random_snmodule(Field f, int n, int dim_hint, Rng& rng);

}  // namespace symqcs
