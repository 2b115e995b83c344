#pragma once

#include <vector>

#include "symqcs/scalar.hpp"

namespace symqcs {

/// Element of Σ_n in one-line notation, 1-based: images[i-1] = σ(i).
/// Composition is functional, (σ∘τ)(i) = σ(τ(i)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i - 1]; }  // 1-based
  const std::vector<int>& images() const { return images_; }

  Permutation compose(const Permutation& other) const;  // this ∘ other
  Permutation inverse() const;
  bool is_identity() const;
  bool operator==(const Permutation& o) const { return images_ == o.images_; }
  bool operator<(const Permutation& o) const { return images_ < o.images_; }

  /// Word in adjacent transpositions s_{i} (1-based indices), such that
  /// σ = s_{w[0]} ∘ s_{w[1]} ∘ ... ∘ s_{w.back()}.
  std::vector<int> adjacent_word() const;

  int sign() const;
  std::string str() const;

 private:
  std::vector<int> images_;
};

/// Adjacent transposition s_i = (i, i+1) in Σ_n.
Permutation adjacent_transposition(int n, int i);

/// Block sum: acts as s on {1..p} and as t shifted by p on {p+1..p+q}.
Permutation block_sum(const Permutation& s, const Permutation& t);

/// The (q,p)-shuffle χ_{q,p} ∈ Σ_{p+q}: i ↦ i+p for i ≤ q, i ↦ i−q otherwise.
Permutation chi(int q, int p);

/// All of Σ_n in lexicographic one-line order.
std::vector<Permutation> all_permutations(int n);

long long factorial(int n);
long long binomial(int n, int k);

/// p-subsets of {1..p+q} in lexicographic order; each sorted ascending.
std::vector<std::vector<int>> subsets_lex(int n, int p);

/// Left-coset representatives of the Young subgroup Σ_p×Σ_q in Σ_{p+q}:
/// the (p,q)-shuffles, monotone on each block, in lexicographic order.
std::vector<Permutation> shuffle_reps(int p, int q);

/// Factor w ∈ Σ_{p+q} as rep ∘ (σ×τ) with rep a (p,q)-shuffle.
struct ShuffleFactor {
  int rep_index;  // into shuffle_reps(p,q)
  Permutation sigma;  // Σ_p
  Permutation tau;    // Σ_q
};
ShuffleFactor factor_shuffle(const Permutation& w, int p, int q);

/// Left-coset representatives of the tail copy of Σ_q (acting on the last q
/// letters) in Σ_l, sorted lexicographically; there are l!/q! of them.
std::vector<Permutation> coset_reps(int l, int q);

/// Factor w ∈ Σ_l as rep ∘ (id_{l-q} × h) with rep a tail-coset representative.
struct TailFactor {
  int rep_index;  // into coset_reps(l,q)
  Permutation h;  // Σ_q
};
TailFactor factor_tail(const Permutation& w, int l, int q);

}  // namespace symqcs
