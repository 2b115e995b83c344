#pragma once

#include <memory>

#include "symqcs/graded.hpp"

namespace symqcs {

/// Right E-module in symmetric sequences: a SymSeq with equivariant action
/// maps α_{n,m}: M_n⊗E_m → M_{n+m}, associative and unital.
struct EModule {
  std::shared_ptr<const SymAlgebra> algebra;
  SymSeq seq;
  std::map<std::pair<int, int>, Matrix> actions;

  const Field& field() const { return seq.field; }
  int cutoff() const { return seq.cutoff; }
  int dim(int n) const { return seq.dim(n); }
  const Matrix& action(int n, int m) const;

  std::vector<Rat> act(int deg_m, const std::vector<Rat>& m, int deg_e,
                       const std::vector<Rat>& e) const;
};

/// Module axiom report: equivariance/associativity/unit cells, like the algebra's.
AxiomReport check_module_axioms(const EModule& m);

struct EModuleMap {
  EModule source;  // held by value; desk-scale objects
  EModule target;
  std::vector<Matrix> components;

  bool is_valid() const;  // equivariant and action-compatible
  bool is_mono() const;
  bool is_iso() const;
};

EModuleMap compose(const EModuleMap& g, const EModuleMap& f);

/// E as a module over itself (= F_0E).
EModule algebra_as_module(std::shared_ptr<const SymAlgebra> e);

/// The free module F_mE: level n induced from E_{n-m} along the tail embedding.
EModule free_module(std::shared_ptr<const SymAlgebra> e, int m);

/// Direct sum, blockwise in order.
EModule direct_sum(const EModule& a, const EModule& b);

/// M[k]: levels M_{k+n}, actions restricted along id_k ⊕ τ.
EModule shift(const EModule& m, int k);

/// Module map out of F_mE determined by the generator image (an element of
/// target level m); the free extension φ(r⊗b) = r·(x₀·b).
EModuleMap free_map(std::shared_ptr<const SymAlgebra> e, int m, const EModule& target,
                    const std::vector<Rat>& gen_image);

/// The Day product M∧N as an E-module (E acting on the right factor).
EModule day_module(const EModule& m, const EModule& n);

/// Total right-action collapse (M∧E)_t → M_t.
std::vector<Matrix> total_action_components(const EModule& m);

/// Left action through the twist: (E∧N)_t → N_t.
std::vector<Matrix> total_left_action_components(const EModule& n);

struct Smash {
  EModule mod;
  std::vector<Matrix> project;  // (M∧N)_t → smash level t
  std::vector<Matrix> lift;     // standard section
};

/// M∧_E N as the levelwise cokernel of the two action routes M∧E∧N ⇉ M∧N.
Smash smash_over_e(const EModule& m, const EModule& n);

/// Functoriality in the right slot: smash(M, f): M∧_E N → M∧_E N'.
EModuleMap smash_map_right(const EModule& m, const EModuleMap& f, const Smash& sm,
                           const Smash& sn);

/// Canonical map F_{m+n}E → F_mE ∧_E F_nE (generator to generator-pair class).
EModuleMap free_smash_iso(std::shared_ptr<const SymAlgebra> e, int m, int n, const Smash& s);

/// Canonical unit collapse E∧_E M → M (and M∧_E E → M).
EModuleMap smash_unit_left(const EModule& m, const Smash& s);
EModuleMap smash_unit_right(const EModule& m, const Smash& s);

/// Internal hom level: the space of window-computable module maps M → N[k].
struct HomLevel {
  int k = 0;
  int valid_up_to = 0;   // components exist for source levels ≤ cutoff − k
  SnModule rep;          // Σ_k-module structure on the solution space
  Matrix solution_basis; // stacked map coordinates, one column per basis map
  std::vector<int> level_offsets;  // offset of each φ_t block in the stack
  std::vector<std::pair<int, int>> level_shapes;  // (rows, cols) of φ_t
};
HomLevel internal_hom_level(const EModule& m, const EModule& n, int k);

/// Extract the level-t component of the j-th basis map of a HomLevel.
Matrix hom_component(const HomLevel& h, const EModule& m, const EModule& n, int j, int t);

/// Evaluation [F_mE, N]_k → N_{k+m}, φ ↦ φ_m(generator); with the χ_{k,m}
/// relabeling this is the canonical comparison with N[m]_k.
Matrix hom_evaluation_at_generator(const HomLevel& h, const EModule& src_free, int m,
                                   const EModule& n);

/// Structure multiplication [M,N]_k ⊗ E_l → [M,N]_{k+l} in solution
/// coordinates: φ⊗y ↦ χ-corrected composite of φ with right multiplication.
Matrix hom_structure_map(const HomLevel& hk, const HomLevel& hkl, const EModule& m,
                         const EModule& n, int l);

/// φ^k: E_k ⊗ M → M[k], the twist-multiply-shuffle composite. Component at
/// source level t is a map E_k⊗M_t → M_{k+t}.
std::vector<Matrix> phi_map(const EModule& m, int k, bool with_shuffles = true);

/// The forgetful functor U.
GradedModule u_functor(const EModule& m);
GradedRing u_ring(const SymAlgebra& e);

/// V on a presentation: ⊕_j F_{m_j}E → ⊕_i F_{n_i}E, cokernel with actions.
struct VResult {
  EModule mod;
  std::vector<Matrix> project;  // from ⊕_i F_{n_i}E levels
  std::vector<Matrix> lift;
  std::vector<Matrix> relation_images;  // image columns of the relation map
  std::vector<int> gen_degrees;
};
VResult v_functor(std::shared_ptr<const SymAlgebra> e, const GradedPresentation& pres);

/// Counit-style map: presentation generators sent to their lifts in the
/// target module, descended through the V quotient.
EModuleMap counit_map(std::shared_ptr<const SymAlgebra> e, const VResult& v,
                      const GradedPresentation& pres, const EModule& target);

/// Suspension builders (see project notes): trivial-action base of any
/// dimension, or the tail module E_{≥n} for a general algebra.
EModule suspension_trivial(std::shared_ptr<const SymAlgebra> e, int degree, int base_dim);
EModule suspension_tail(std::shared_ptr<const SymAlgebra> e, int degree);

/// a_n: for n = 0 the unit isomorphism; for n ≥ 1 the counit-style map
/// VU(E_{≥n}) → E for trivial-action commutative algebras, whose image is
/// E_{≥n}. Returns the map together with its V-side domain data.
struct AMap {
  VResult domain;
  EModuleMap map;  // domain.mod → E
};
AMap a_map(std::shared_ptr<const SymAlgebra> e, int n);

/// Submodule generated by homogeneous elements: saturation under the group
/// actions and the right E-action; returns the inclusion map.
EModuleMap submodule_generated(const EModule& ambient,
                               const std::vector<std::pair<int, std::vector<Rat>>>& gens);

/// Trivial-action symmetric module from graded data over a trivial-action algebra.
EModule trivial_symmetric_module(std::shared_ptr<const SymAlgebra> e, const GradedModule& m);

}  // namespace symqcs
