#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "symqcs/algebra.hpp"

using namespace symqcs;

static const Field Q = Field::rationals();

TEST_CASE("tensor algebra dims and axioms") {
  SymAlgebra e0 = tensor_algebra(Q, 0, 3);
  for (int n = 1; n <= 3; ++n) CHECK(e0.dim(n) == 0);
  CHECK(check_axioms(e0).ok());

  SymAlgebra e = tensor_algebra(Q, 2, 4);
  e.seq.validate();
  CHECK(e.dim(0) == 1);
  CHECK(e.dim(1) == 2);
  CHECK(e.dim(2) == 4);
  CHECK(e.dim(3) == 8);
  CHECK(check_axioms(e).ok());
  CHECK(check_commutative(e, false).ok());
}

TEST_CASE("tensor algebra naive commutativity fails first at (1,1)") {
  SymAlgebra e = tensor_algebra(Q, 2, 4);
  auto rep = check_commutative(e, true);
  CHECK_FALSE(rep.ok());
  // minimal violated cell in (n+m, n, m) order
  auto min_cell = rep.violations.front();
  for (const auto& v : rep.violations) {
    auto key = std::make_tuple(v.n + v.m, v.n, v.m);
    auto cur = std::make_tuple(min_cell.n + min_cell.m, min_cell.n, min_cell.m);
    if (key < cur) min_cell = v;
  }
  CHECK(min_cell.n == 1);
  CHECK(min_cell.m == 1);
}

TEST_CASE("cutoff 0 algebra passes vacuously") {
  SymAlgebra e = tensor_algebra(Q, 2, 0);
  CHECK(check_axioms(e).ok());
  CHECK(check_commutative(e, false).ok());
}

TEST_CASE("corrupted multiplication cell is reported") {
  SymAlgebra e = tensor_algebra(Q, 2, 3);
  e.mults[{1, 1}].at(0, 0) = Rat(5);  // poison one entry of μ_{1,1}
  auto rep = check_axioms(e);
  CHECK_FALSE(rep.ok());
  for (const auto& v : rep.violations) {
    // every reported cell involves the corrupted (1,1) block
    bool touches = (v.n == 1 && v.m == 1) || (v.kind == "associativity" && v.n == 1 && v.m == 1) ||
                   (v.kind == "associativity" && v.m == 1 && v.p == 1);
    CHECK(touches);
  }
}

TEST_CASE("exterior algebra") {
  SymAlgebra e1 = exterior_algebra(Q, 1, 3);
  CHECK(e1.dim(0) == 1);
  CHECK(e1.dim(1) == 1);
  CHECK(e1.dim(2) == 0);
  CHECK(e1.dim(3) == 0);

  SymAlgebra e3 = exterior_algebra(Q, 3, 4);
  CHECK(e3.dim(2) == 3);  // C(3,2)
  CHECK(e3.dim(3) == 1);
  CHECK(e3.dim(4) == 0);
  e3.seq.validate();
  CHECK(check_axioms(e3).ok());
  CHECK(check_commutative(e3, false).ok());
}

TEST_CASE("quotient map T(V) -> Lambda(V) is an algebra morphism") {
  SymAlgebra t = tensor_algebra(Q, 2, 4);
  SymAlgebra l = exterior_algebra(Q, 2, 4);
  auto psi = exterior_quotient_map(Q, 2, 4);
  CHECK(is_algebra_morphism(t, l, psi));
  // and a poisoned version is rejected
  auto bad = psi;
  bad[2].at(0, 0) = Rat(7);
  CHECK_FALSE(is_algebra_morphism(t, l, bad));
}

TEST_CASE("symmetric group algebra") {
  SymAlgebra e = sym_group_algebra(Q, 4);
  e.seq.validate();
  CHECK(e.dim(0) == 1);
  CHECK(e.dim(1) == 1);
  CHECK(e.dim(2) == 2);
  CHECK(e.dim(3) == 6);
  CHECK(e.dim(4) == 24);
  CHECK(check_axioms(e).ok());
  CHECK(check_commutative(e, false).ok());
  // Naive commutativity fails; the first failing cell is (1,2) — at (1,1) the
  // two sides agree because E_1 is one-dimensional (see project notes).
  auto rep = check_commutative(e, true);
  REQUIRE_FALSE(rep.ok());
  auto min_cell = rep.violations.front();
  for (const auto& v : rep.violations) {
    auto key = std::make_tuple(v.n + v.m, v.n, v.m);
    auto cur = std::make_tuple(min_cell.n + min_cell.m, min_cell.n, min_cell.m);
    if (key < cur) min_cell = v;
  }
  CHECK(min_cell.n == 1);
  CHECK(min_cell.m == 2);
}

TEST_CASE("trivial action builders") {
  auto qxy = MonomialPresentation::parse("Q[x,y]");
  SymAlgebra e = trivial_action(Q, qxy, 4);
  for (int n = 0; n <= 4; ++n) CHECK(e.dim(n) == n + 1);
  CHECK(check_axioms(e).ok());
  CHECK(check_commutative(e, false).ok());
  CHECK(check_commutative(e, true).ok());

  auto qx3 = MonomialPresentation::parse("Q[x]/(x^3)");
  SymAlgebra e2 = trivial_action(Q, qx3, 4);
  CHECK(e2.dim(0) == 1);
  CHECK(e2.dim(1) == 1);
  CHECK(e2.dim(2) == 1);
  CHECK(e2.dim(3) == 0);
  CHECK(e2.dim(4) == 0);
  CHECK(check_axioms(e2).ok());
}

TEST_CASE("presentation validation") {
  MonomialPresentation p;
  p.vars = {"x"};
  p.degrees = {0};
  CHECK_THROWS_AS(p.validate(), ArgError);
  CHECK_THROWS_AS(MonomialPresentation::parse("Q[x]/(z^2)"), ArgError);
}

TEST_CASE("total multiplication collapse is equivariant") {
  for (auto builder : {0, 1, 2}) {
    SymAlgebra e = builder == 0   ? tensor_algebra(Q, 2, 3)
                   : builder == 1 ? sym_group_algebra(Q, 3)
                                  : trivial_action(Q, MonomialPresentation::parse("Q[x,y]"), 3);
    SymSeq sq = day_tensor(e.seq, e.seq);
    auto comps = total_mult_components(e);
    CHECK(components_equivariant(sq, e.seq, comps));
  }
}

TEST_CASE("multiply helper agrees with mult matrices") {
  SymAlgebra e = tensor_algebra(Q, 2, 3);
  std::vector<Rat> x{Rat(1), Rat(0)}, y{Rat(0), Rat(1)};
  auto xy = e.multiply(1, x, 1, y);
  CHECK(xy[1] == Rat(1));  // word xy has index 0*2+1
  auto yx = e.multiply(1, y, 1, x);
  CHECK(yx[2] == Rat(1));  // word yx has index 1*2+0
}
