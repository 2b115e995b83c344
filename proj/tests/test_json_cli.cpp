#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "symqcs/json_io.hpp"

using namespace symqcs;

static const Field Q = Field::rationals();

TEST_CASE("matrix and permutation JSON") {
  Matrix m(Q, 2, 2);
  m.set(0, 1, Rat(1, 2));
  m.set(1, 0, Rat(-3));
  Json j = matrix_to_json(m);
  CHECK(j[0][1] == "1/2");
  Matrix back = matrix_from_json(j, Q);
  CHECK(back == m);

  Permutation p({2, 3, 1});
  CHECK(perm_from_json(perm_to_json(p)) == p);
  CHECK_THROWS_AS(perm_from_json(Json{{"n", 2}, {"images", {1, 1}}}), ArgError);
}

TEST_CASE("algebra JSON round trip is exact and deterministic") {
  for (auto e : {tensor_algebra(Q, 2, 3), sym_group_algebra(Q, 3),
                 trivial_action(Q, MonomialPresentation::parse("Q[x]/(x^3)"), 4)}) {
    Json j = algebra_to_json(e);
    SymAlgebra back = algebra_from_json(j);
    CHECK(back == e);
    CHECK(algebra_to_json(back).dump() == j.dump());  // byte-identical re-serialization
  }
}

TEST_CASE("module JSON round trip") {
  auto e = std::make_shared<SymAlgebra>(tensor_algebra(Q, 2, 3));
  EModule f1 = free_module(e, 1);
  Json j = emodule_to_json(f1);
  EModule back = emodule_from_json(j);
  CHECK(check_module_axioms(back).ok());
  for (int n = 0; n <= 3; ++n) {
    CHECK(back.dim(n) == f1.dim(n));
    for (int k = 0; n + k <= 3; ++k) CHECK(back.action(n, k) == f1.action(n, k));
  }
}

TEST_CASE("graded module JSON round trip") {
  GradedRing r = GradedRing::from_algebra(
      trivial_action(Q, MonomialPresentation::parse("Q[x,y]"), 4));
  GradedModule m = tail_quotient(GradedModule::ring_as_module(r), 2);
  GradedModule back = graded_from_json(graded_to_json(m), r);
  CHECK(back == m);
}

TEST_CASE("ideal JSON: provenance is verified on load") {
  auto e = std::make_shared<SymAlgebra>(tensor_algebra(Q, 2, 3));
  HomElem g;
  g.degree = 2;
  g.coords = {Rat(0), Rat(1), Rat(0), Rat(0)};  // x⊗y
  SigmaIdeal i = sigma_closure(e, {g});
  Json j = ideal_to_json(i);
  SigmaIdeal back = ideal_from_json(j, e);
  CHECK(back.equal_levels(i));
  // tampered levels are rejected
  Json bad = j;
  bad["levels"][2] = matrix_to_json(Matrix::identity(Q, 4));
  CHECK_THROWS_AS(ideal_from_json(bad, e), InvariantViolation);
}

TEST_CASE("prime field round trip and detection") {
  Field f5 = Field::prime(5);
  SymAlgebra e = tensor_algebra(f5, 2, 3);
  CHECK(check_axioms(e).ok());
  CHECK(check_commutative(e, false).ok());
  Json j = algebra_to_json(e);
  CHECK(detect_field(j) == f5);
  SymAlgebra back = algebra_from_json(j);
  CHECK(back == e);
}

TEST_CASE("maschke averaging respects the characteristic guard over F_p") {
  Field f5 = Field::prime(5);
  // 5 divides 5!, so Sigma_5 averaging must refuse; Sigma_3 is fine
  CHECK_THROWS_AS(maschke_average(SnModule::trivial(f5, 5, 1)), ConfigError);
  Matrix p = maschke_average(SnModule::regular(f5, 3));
  CHECK(p * p == p);
}

TEST_CASE("scalar parse failures") {
  CHECK_THROWS_AS(Scalar::parse("1/0"), ArgError);
  CHECK_THROWS_AS(matrix_from_json(Json::parse("[[\"1/1\"],[\"1/1\",\"2/1\"]]"), Q), ArgError);
}
