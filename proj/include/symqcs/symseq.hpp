#pragma once

#include <functional>
#include <vector>

#include "symqcs/rep.hpp"

namespace symqcs {

int max_level_dim();  // SYMQCS_MAX_DIM guard, default 5000

/// Truncated symmetric sequence: one Σ_n-representation per degree n ≤ cutoff.
struct SymSeq {
  Field field = Field::rationals();
  int cutoff = 0;
  std::vector<SnModule> levels;  // levels[n].n == n, size cutoff+1

  static SymSeq zero(Field f, int cutoff);
  /// The monoidal unit (k,0,0,…).
  static SymSeq unit(Field f, int cutoff);
  /// The representable F_mk: level m = kΣ_m regular, all other levels zero.
  static SymSeq representable(Field f, int m, int cutoff);

  int dim(int n) const { return levels[n].dim; }
  void validate() const;
};

/// Levelwise Σ-equivariant map between sequences of equal cutoff.
struct SymSeqMap {
  const SymSeq* source = nullptr;
  const SymSeq* target = nullptr;
  std::vector<Matrix> components;  // one per level 0..cutoff

  void validate() const;  // shapes + equivariance
  bool is_equivariant() const;
  bool is_zero() const;
  bool is_iso() const;
};

SymSeqMap compose(const SymSeqMap& g, const SymSeqMap& f);  // g ∘ f
SymSeqMap identity_map(const SymSeq& m);

/// Layout of one level of a Day product: the (p,q)-summands in p-ascending
/// order, each of size |Sh(p,q)|·dim M_p·dim N_q with shuffle-major basis.
struct DayBlock {
  int p = 0, q = 0;
  int offset = 0;
  int num_shuffles = 0;
  int dim_m = 0, dim_n = 0;
  int size() const { return num_shuffles * dim_m * dim_n; }
  int index(int shuffle, int i, int j) const {
    return offset + (shuffle * dim_m + i) * dim_n + j;
  }
};
std::vector<DayBlock> day_layout(const SymSeq& m, const SymSeq& n, int level);

/// Day convolution (M∧N)_t = ⊕_{p+q=t} Ind_{Σ_p×Σ_q}(M_p ⊗ N_q).
SymSeq day_tensor(const SymSeq& m, const SymSeq& n);

/// f∧g on Day products (blockwise f_p ⊗ g_q, shuffles untouched).
std::vector<Matrix> day_tensor_of_maps(const SymSeq& m, const SymSeq& n, const SymSeq& m2,
                                       const SymSeq& n2, const std::vector<Matrix>& f,
                                       const std::vector<Matrix>& g);

/// The symmetry isomorphism M∧N → N∧M: α⊗x⊗y ↦ αχ_{q,p}⊗y⊗x.
/// Components are returned by value; source/target products are recomputed
/// deterministically by the caller when a full SymSeqMap is wanted.
std::vector<Matrix> twist_components(const SymSeq& m, const SymSeq& n);

/// The same relabeling without the shuffle correction; not equivariant in general.
std::vector<Matrix> naive_twist_components(const SymSeq& m, const SymSeq& n);

/// Canonical reassociation (A∧B)∧C → A∧(B∧C).
std::vector<Matrix> associator_components(const SymSeq& a, const SymSeq& b, const SymSeq& c);

struct SeqWithMap {
  SymSeq seq;
  std::vector<Matrix> map;  // inclusion (kernel) or projection (cokernel)
};

/// Levelwise kernel with restricted action and inclusion into the source.
SeqWithMap kernel_seq(const SymSeq& src, const SymSeq& tgt, const std::vector<Matrix>& comps);

/// Levelwise cokernel with induced action and projection from the target.
SeqWithMap cokernel_seq(const SymSeq& src, const SymSeq& tgt, const std::vector<Matrix>& comps);

/// Check a levelwise family for equivariance against given source/target sequences.
bool components_equivariant(const SymSeq& src, const SymSeq& tgt,
                            const std::vector<Matrix>& comps);

/// Canonical iso F_mk ∧ F_nk → F_{m+n}k: (s, σ⊗τ) ↦ s·(σ×τ).
std::vector<Matrix> representable_product_iso(Field f, int m, int n, int cutoff);

}  // namespace symqcs
