#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "symqcs/graded.hpp"

using namespace symqcs;

static const Field Q = Field::rationals();

static GradedRing qx(int cutoff) {
  return GradedRing::from_algebra(trivial_action(Q, MonomialPresentation::parse("Q[x]"), cutoff));
}
static GradedRing qxy(int cutoff) {
  return GradedRing::from_algebra(
      trivial_action(Q, MonomialPresentation::parse("Q[x,y]"), cutoff));
}

TEST_CASE("ring generators") {
  auto g = ring_generators(qxy(6));
  CHECK(g.degrees_with_generators == std::vector<int>{1});
  CHECK(g.max_degree == 1);
  CHECK(g.finitely_generated_in_window);

  // kΣ_* needs new generators in every degree: not finitely generated
  auto ks = GradedRing::from_algebra(sym_group_algebra(Q, 4));
  auto g2 = ring_generators(ks);
  CHECK_FALSE(g2.finitely_generated_in_window);
}

TEST_CASE("free modules validate and have the right dims") {
  GradedRing r = qxy(5);
  GradedModule f = GradedModule::free(r, {0, 2});
  f.validate(r);
  for (int t = 0; t <= 5; ++t) {
    int expect = (t + 1) + (t >= 2 ? t - 1 : 0);
    CHECK(f.dim(t) == expect);
  }
}

TEST_CASE("A/A_{>=n} is torsion with annihilation degree <= n") {
  GradedRing r = qxy(8);
  GradedModule a = GradedModule::ring_as_module(r);
  for (int n = 1; n <= 4; ++n) {
    GradedModule q = tail_quotient(a, n);
    q.validate(r);
    auto rep = is_torsion(q, r);
    CHECK(rep.ring_supported);
    CHECK(rep.torsion_within_window);
    for (const auto& piece : rep.pieces) {
      REQUIRE(piece.annihilation_degree.has_value());
      CHECK(*piece.annihilation_degree <= n);
    }
  }
}

TEST_CASE("bounded modules are torsion; A itself is not") {
  GradedRing r = qx(8);
  GradedModule a = GradedModule::ring_as_module(r);
  auto bounded = tail_quotient(a, 3);
  CHECK(is_torsion(bounded, r).torsion_within_window);
  auto rep = is_torsion(a, r);
  CHECK_FALSE(rep.torsion_within_window);
  CHECK_FALSE(rep.pieces[0].annihilation_degree.has_value());  // degree-0 element 1
}

TEST_CASE("Q[x] is tors-closed, Q[x]/(x) is not") {
  GradedRing r = qx(8);
  GradedModule a = GradedModule::ring_as_module(r);
  auto rep = is_tors_closed(a, r, 4);
  CHECK(rep.closed);
  GradedModule k = tail_quotient(a, 1);
  auto rep2 = is_tors_closed(k, r, 4);
  CHECK_FALSE(rep2.closed);
  // zero module is closed
  GradedModule z = tail_quotient(a, 0);
  CHECK(is_tors_closed(z, r, 4).closed);
}

TEST_CASE("tors-closedness is stable under shifts") {
  GradedRing r5 = qxy(5);
  GradedModule a = GradedModule::ring_as_module(r5);
  REQUIRE(is_tors_closed(a, r5, 2).closed);
  for (int m = 1; m <= 2; ++m) {
    GradedModule s = graded_shift(a, m);
    GradedRing rs = qxy(5 - m);
    CHECK(is_tors_closed(s, rs, 2).closed);
  }
}

TEST_CASE("presentation round-trip") {
  GradedRing r = qxy(5);
  Rng rng(31);
  for (int it = 0; it < 8; ++it) {
    GradedModule m = random_fg_module(r, rng);
    m.validate(r);
    auto p = presentation_of(m, r);
    GradedModule m2 = presented_module(p, r);
    for (int t = 0; t <= 5; ++t) CHECK(m.dim(t) == m2.dim(t));
  }
}

TEST_CASE("filtration pieces are chains with bounded quotients") {
  GradedRing r = qxy(5);
  Rng rng(37);
  GradedModule m = random_fg_module(r, rng);
  for (int n = 0; n + 1 <= 3; ++n) {
    auto ln = filtration_piece(m, r, n);
    auto ln1 = filtration_piece(m, r, n + 1);
    for (int t = 0; t <= 5; ++t) {
      SpanBuilder big(Q, m.dim(t));
      big.add_cols(ln1[t]);
      CHECK(big.contains_cols(ln[t]));
    }
    auto lgeq = filtration_tail_piece(m, r, n);
    for (int t = 0; t <= 5; ++t) {
      if (t < n) CHECK(lgeq[t].cols() == 0);
      if (t >= n) CHECK(lgeq[t].cols() == ln[t].cols());
    }
  }
  auto top = filtration_piece(m, r, 5);
  for (int t = 0; t <= 5; ++t) CHECK(top[t].cols() == m.dim(t));
}

TEST_CASE("suspension slice is generated in degree zero") {
  GradedRing r = qxy(6);
  Rng rng(41);
  GradedModule m = random_fg_module(r, rng);
  GradedModule s = suspension_slice(m, r, 2);
  s.validate(qxy(4));
  for (int t = 1; t <= s.cutoff; ++t) {
    SpanBuilder sb(Q, s.dim(t));
    if (s.dim(0) > 0 && r.dim(t) > 0) sb.add_cols(s.act.at({0, t}));
    CHECK(sb.dim() == s.dim(t));
  }
}

TEST_CASE("hom_from_tail computes the classical example") {
  // Hom(x^n Q[x], Q[x])_d is one-dimensional
  GradedRing r = qx(8);
  GradedModule a = GradedModule::ring_as_module(r);
  for (int n = 1; n <= 3; ++n)
    for (int d = 0; d <= 2; ++d) {
      auto h = hom_from_tail(r, a, n, d);
      CHECK(h.basis.cols() == 1);
    }
}
