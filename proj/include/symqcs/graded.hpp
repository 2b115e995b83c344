#pragma once

#include <map>
#include <optional>
#include <string>

#include "symqcs/algebra.hpp"

namespace symqcs {

/// The underlying non-symmetric graded ring of a symmetric algebra.
struct GradedRing {
  Field field = Field::rationals();
  int cutoff = 0;
  std::vector<int> dims;
  std::map<std::pair<int, int>, Matrix> mult;

  static GradedRing from_algebra(const SymAlgebra& e);
  int dim(int n) const { return dims[n]; }
  const Matrix& mu(int n, int m) const { return mult.at({n, m}); }
};

/// Degrees at which the positive part needs new algebra generators, within the
/// window. max_degree bounds the tails E_{≥Nn} the torsion tests step through.
struct RingGenerators {
  std::vector<int> degrees_with_generators;
  int max_degree = 0;
  bool finitely_generated_in_window = false;
};
RingGenerators ring_generators(const GradedRing& r);

/// ℕ-graded right module over a graded ring, truncated at the ring's cutoff.
struct GradedModule {
  Field field = Field::rationals();
  int cutoff = 0;
  std::vector<int> dims;
  std::map<std::pair<int, int>, Matrix> act;  // M_n ⊗ A_m → M_{n+m}

  int dim(int n) const { return dims[n]; }
  const Matrix& action(int n, int m) const { return act.at({n, m}); }
  void validate(const GradedRing& r) const;  // associativity + unit within window
  bool operator==(const GradedModule& o) const;

  static GradedModule ring_as_module(const GradedRing& r);
  /// ⊕_i A(−d_i); levels stacked in generator order.
  static GradedModule free(const GradedRing& r, const std::vector<int>& gen_degrees);
};

/// Tail M_{≥n} together with its inclusion; levels below n are zero.
GradedModule tail(const GradedModule& m, int n);

/// Quotient M / M_{≥n}: bounded module, nonzero only below n.
GradedModule tail_quotient(const GradedModule& m, int n);

/// Shift M[k]_n = M_{k+n}.
GradedModule graded_shift(const GradedModule& m, int k);

struct TorsionPieceVerdict {
  int degree;
  std::optional<int> annihilation_degree;  // least Nn with piece·A_{≥Nn} = 0 in window
};
struct TorsionReport {
  bool ring_supported = false;
  int ring_generator_bound = 0;  // N
  std::vector<TorsionPieceVerdict> pieces;
  bool torsion_within_window = false;
  std::string note;
};

/// Tail-annihilation test: every graded piece annihilated by some tail
/// A_{≥Nn} inside the window. Window-relative by construction.
TorsionReport is_torsion(const GradedModule& m, const GradedRing& r);

/// Basis of the space of degree-d module maps A_{≥n} → M, and the restriction
/// from Hom(A, M)_d = M_d. Components are stacked level-by-level.
struct TailHom {
  int total_unknowns = 0;
  Matrix basis;        // unknown-space vectors spanning the solution space
  Matrix restriction;  // M_d → solution coordinates of the restricted map
  bool restriction_wellformed = false;
};
TailHom hom_from_tail(const GradedRing& r, const GradedModule& m, int n, int d);

struct TorsClosedCell {
  int n, d;
  bool bijective;
  bool window_determined;  // window reaches past the generator level of A_{≥n}
};
struct TorsClosedReport {
  std::vector<TorsClosedCell> cells;
  bool closed = true;  // over window-determined cells only
  int n_max, cutoff;
  std::string note;
};

/// Tors-closedness: Hom(A,M)_d → Hom(A_{≥n},M)_d bijective for n ≤ n_max. Cells
/// whose window contains no multiplicative constraint on the lowest component
/// are reported but excluded from the verdict (truncation-indeterminate).
TorsClosedReport is_tors_closed(const GradedModule& m, const GradedRing& r, int n_max);

/// Finite graded presentation: ⊕_j A(−m_j) → ⊕_i A(−n_i) → M → 0.
struct GradedPresentation {
  std::vector<int> gen_degrees;
  std::vector<int> rel_degrees;
  // rel_entry[j][i]: coordinates of the (i,j) entry in A_{m_j − n_i}; empty when m_j < n_i.
  std::vector<std::vector<std::vector<Rat>>> rel_entries;
  // lifts of the generators in the presented module (empty for abstract presentations)
  std::vector<std::vector<Rat>> gen_lifts;
};

/// Degreewise-minimal generators and relation generators, all within the window.
GradedPresentation presentation_of(const GradedModule& m, const GradedRing& r);

/// The free cover map ⊕A(−n_i) → M of a presentation with gen_lifts.
std::vector<Matrix> presentation_cover(const GradedPresentation& p, const GradedModule& m,
                                       const GradedRing& r);

/// Levels of the presented module: coker of the relation map, degreewise.
GradedModule presented_module(const GradedPresentation& p, const GradedRing& r);

/// L_n = (M_0,…,M_n, M_nA_1, M_nA_2, …) as a submodule; returns levelwise bases.
std::vector<Matrix> filtration_piece(const GradedModule& m, const GradedRing& r, int n);
/// L_{≥n} = (0,…,0, M_n, M_nA_1, …).
std::vector<Matrix> filtration_tail_piece(const GradedModule& m, const GradedRing& r, int n);

/// Σ^∞ of the degree-n slice: the graded module (M_n, M_nA_1, M_nA_2, …),
/// regraded to start at level 0 (the shift of L_{≥n} by n).
GradedModule suspension_slice(const GradedModule& m, const GradedRing& r, int n);

/// Seeded finitely generated module: quotient of a small free module by a
/// seeded submodule, with deterministic bases.
GradedModule random_fg_module(const GradedRing& r, Rng& rng, int max_gens = 3,
                              int max_gen_degree = 2, int max_rels = 3);

}  // namespace symqcs
