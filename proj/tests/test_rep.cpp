#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "symqcs/rep.hpp"

using namespace symqcs;

static const Field Q = Field::rationals();

TEST_CASE("builders validate") {
  for (int n = 0; n <= 4; ++n) {
    SnModule::trivial(Q, n).validate();
    SnModule::regular(Q, n).validate();
    SnModule::conjugation(Q, n).validate();
    SnModule::sign_rep(Q, n).validate();
  }
  CHECK(SnModule::regular(Q, 4).dim == 24);
}

TEST_CASE("action_of is multiplicative and unital") {
  SnModule m = SnModule::regular(Q, 3);
  CHECK(action_of(m, Permutation::identity(3)).is_identity());
  for (const auto& s : all_permutations(3))
    for (const auto& t : all_permutations(3))
      CHECK(action_of(m, s.compose(t)) == action_of(m, s) * action_of(m, t));
  CHECK_THROWS_AS(action_of(m, Permutation::identity(2)), ArgError);
}

TEST_CASE("regular QSigma2 swap acts by the permutation matrix") {
  SnModule m = SnModule::regular(Q, 2);
  Matrix a = action_of(m, Permutation({2, 1}));
  CHECK(a.at(0, 1) == Rat(1));
  CHECK(a.at(1, 0) == Rat(1));
  CHECK(a.at(0, 0) == Rat(0));
}

TEST_CASE("induce from Sigma_1 x Sigma_1 gives the regular representation") {
  auto w = ProductRep::tensor(SnModule::trivial(Q, 1), SnModule::trivial(Q, 1));
  SnModule ind = induce(w);
  ind.validate();
  CHECK(ind.n == 2);
  CHECK(ind.dim == 2);
  CHECK(ind == SnModule::regular(Q, 2));
}

TEST_CASE("induce from Sigma_0 x Sigma_n returns the module itself") {
  SnModule m = SnModule::regular(Q, 3);
  auto w = ProductRep::tensor(SnModule::trivial(Q, 0), m);
  SnModule ind = induce(w);
  CHECK(ind.dim == m.dim);
  CHECK(ind == m);
}

TEST_CASE("induced dimension is dim * binomial(p+q,p)") {
  SnModule a = SnModule::regular(Q, 2);              // dim 2
  SnModule b = SnModule::trivial(Q, 1);              // dim 1... use a dim 3 via direct sums
  SnModule three = direct_sum(b, direct_sum(b, b));  // dim 3 at degree 1
  auto w = ProductRep::tensor(a, three);             // Σ_2 x Σ_1, dim 6
  (void)w;
  auto w2 = ProductRep::tensor(SnModule::trivial(Q, 2, 3), SnModule::trivial(Q, 1));
  SnModule ind = induce(w2);
  CHECK(ind.dim == 3 * binomial(3, 2));  // 9
  ind.validate();
}

TEST_CASE("non-commuting pair rejected") {
  // Fake a Σ_2 x Σ_2 action on k^2 with non-commuting generators.
  ProductRep w;
  w.p = w.q = 2;
  w.dim = 2;
  w.field = Q;
  Matrix a(Q, 2, 2), b(Q, 2, 2);
  a.set(0, 1, Rat(1));
  a.set(1, 0, Rat(1));  // swap
  b.set(0, 0, Rat(1));
  b.set(1, 1, Rat(-1));  // diag(1,-1)
  w.p_gen_actions = {a};
  w.q_gen_actions = {a * b * a.transpose() + b};  // some non-commuting junk
  w.q_gen_actions = {b * a};                      // (ba) does not commute with a
  CHECK_THROWS_AS(induce(w), InvariantViolation);
}

TEST_CASE("coinvariants") {
  CHECK(coinvariants(SnModule::trivial(Q, 3, 2)).space.dim == 2);
  CHECK(coinvariants(SnModule::regular(Q, 2)).space.dim == 1);
  CHECK(coinvariants(SnModule::sign_rep(Q, 2)).space.dim == 0);
  // projection is surjective with the right kernel dimension
  auto c = coinvariants(SnModule::regular(Q, 3));
  CHECK(c.space.dim == 1);
  CHECK(rank(c.projection) == 1);
}

TEST_CASE("maschke average") {
  CHECK(maschke_average(SnModule::trivial(Q, 2)).is_identity());
  Matrix p = maschke_average(SnModule::regular(Q, 2));
  CHECK(rank(p) == 1);
  CHECK(p * p == p);
  CHECK(maschke_average(SnModule::sign_rep(Q, 2)).is_zero());
  // idempotent and commutes with every generator
  SnModule m = SnModule::regular(Q, 3);
  Matrix avg = maschke_average(m);
  CHECK(avg * avg == avg);
  for (const auto& g : m.gen_actions) CHECK(g * avg == avg * g);
  // characteristic obstruction
  CHECK_THROWS_AS(maschke_average(SnModule::trivial(Field::prime(2), 2)), ConfigError);
  maschke_average(SnModule::trivial(Field::prime(5), 2));  // fine, 5 does not divide 2!
}

TEST_CASE("restriction preserves braid relations") {
  SnModule m = SnModule::regular(Q, 4);
  SnModule r = restrict_tail(m, 1);
  r.validate();
  CHECK(r.n == 3);
  CHECK(r.dim == 24);
}

TEST_CASE("coinvariants of induced vs subgroup coinvariants (dimension check)") {
  // dim (Ind_{Σ_p×Σ_q} W)_{Σ_{p+q}} == dim W_{Σ_p×Σ_q}
  for (int p = 1; p <= 2; ++p)
    for (int q = 1; q <= 2; ++q) {
      SnModule a = SnModule::regular(Q, p);
      SnModule b = SnModule::regular(Q, q);
      auto w = ProductRep::tensor(a, b);
      SnModule ind = induce(w);
      int lhs = coinvariants(ind).space.dim;
      // subgroup coinvariants: quotient by v - g v for all product generators
      SpanBuilder rel(Q, w.dim);
      for (const auto& g : w.p_gen_actions) rel.add_cols(g - Matrix::identity(Q, w.dim));
      for (const auto& g : w.q_gen_actions) rel.add_cols(g - Matrix::identity(Q, w.dim));
      int rhs = w.dim - rel.dim();
      CHECK(lhs == rhs);
    }
}

TEST_CASE("random snmodules are valid") {
  Rng rng(17);
  for (int n = 1; n <= 4; ++n) {
    SnModule m = random_snmodule(Q, n, 3, rng);
    m.validate();
    CHECK(m.n == n);
  }
}
