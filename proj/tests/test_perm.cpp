#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "symqcs/perm.hpp"
#include "symqcs/rng.hpp"

using namespace symqcs;

TEST_CASE("one-line basics") {
  Permutation s({2, 3, 1});
  CHECK(s(1) == 2);
  CHECK(s.compose(s.inverse()).is_identity());
  CHECK_THROWS_AS(Permutation({1, 1, 2}), ArgError);
  CHECK(Permutation::identity(0).degree() == 0);
}

TEST_CASE("chi formula") {
  CHECK(chi(0, 3) == Permutation::identity(3));
  CHECK(chi(1, 1) == Permutation({2, 1}));
  CHECK(chi(2, 1) == Permutation({2, 3, 1}));
  // chi(q,p) inverse is chi(p,q) for all q+p <= 8
  for (int q = 0; q <= 8; ++q)
    for (int p = 0; p + q <= 8; ++p) CHECK(chi(q, p).compose(chi(p, q)).is_identity());
}

TEST_CASE("block sum") {
  CHECK(block_sum(Permutation::identity(2), Permutation::identity(3)) ==
        Permutation::identity(5));
  CHECK(block_sum(Permutation({2, 1}), Permutation::identity(1)) == Permutation({2, 1, 3}));
  // chi(q,p) ∘ (s×t) ∘ chi(p,q) = t×s for all degrees ≤ 3
  for (int p = 0; p <= 3; ++p)
    for (int q = 0; q <= 3; ++q)
      for (const auto& s : all_permutations(p))
        for (const auto& t : all_permutations(q))
          CHECK(chi(p, q).compose(block_sum(s, t)).compose(chi(q, p)) == block_sum(t, s));
}

TEST_CASE("adjacent word reproduces the permutation") {
  Rng rng(5);
  for (int n = 0; n <= 6; ++n) {
    for (const auto& s : all_permutations(std::min(n, 4))) {
      Permutation acc = Permutation::identity(s.degree());
      for (int i : s.adjacent_word())
        acc = acc.compose(adjacent_transposition(s.degree(), i));
      CHECK(acc == s);
    }
  }
}

TEST_CASE("shuffle reps and factorization") {
  for (int p = 0; p <= 4; ++p)
    for (int q = 0; q + p <= 6; ++q) {
      auto reps = shuffle_reps(p, q);
      CHECK(static_cast<int>(reps.size()) == binomial(p + q, p));
      // lex sorted
      for (std::size_t i = 1; i < reps.size(); ++i) CHECK(reps[i - 1] < reps[i]);
      // every w factors uniquely as rep ∘ (σ×τ)
      if (p + q <= 4) {
        for (const auto& w : all_permutations(p + q)) {
          auto f = factor_shuffle(w, p, q);
          CHECK(reps[f.rep_index].compose(block_sum(f.sigma, f.tau)) == w);
        }
      }
    }
}

TEST_CASE("tail coset reps: count, lex order, disjoint cover") {
  CHECK(coset_reps(2, 2).size() == 1);
  CHECK(coset_reps(2, 2)[0].is_identity());
  CHECK(coset_reps(2, 1).size() == 2);
  CHECK(coset_reps(4, 2).size() == 12);

  for (int l = 0; l <= 6; ++l)
    for (int q = 0; q <= l; ++q) {
      auto reps = coset_reps(l, q);
      CHECK(static_cast<long long>(reps.size()) == factorial(l) / factorial(q));
      for (std::size_t i = 1; i < reps.size(); ++i) CHECK(reps[i - 1] < reps[i]);
      if (l <= 5) {
        // union of rep·(tail Σ_q) is all of Σ_l without overlap
        std::set<std::vector<int>> seen;
        for (const auto& r : reps)
          for (const auto& h : all_permutations(q)) {
            auto w = r.compose(block_sum(Permutation::identity(l - q), h));
            CHECK(seen.insert(w.images()).second);
          }
        CHECK(seen.size() == static_cast<std::size_t>(factorial(l)));
      }
    }
  CHECK_THROWS_AS(coset_reps(2, 3), ArgError);
}

TEST_CASE("tail factorization round-trips") {
  for (int l = 1; l <= 5; ++l)
    for (int q = 0; q <= l; ++q) {
      auto reps = coset_reps(l, q);
      for (const auto& w : all_permutations(l)) {
        auto f = factor_tail(w, l, q);
        CHECK(reps[f.rep_index].compose(block_sum(Permutation::identity(l - q), f.h)) == w);
      }
    }
}
