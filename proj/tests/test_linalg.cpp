#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "symqcs/matrix.hpp"
#include "symqcs/rng.hpp"

using namespace symqcs;

static Matrix mat(Field f, int rows, int cols, std::vector<long long> vals) {
  Matrix m(f, rows, cols);
  int k = 0;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.set(r, c, Rat(vals[k++]));
  return m;
}

TEST_CASE("scalar arithmetic and parsing") {
  Field q = Field::rationals();
  Scalar a(q, Rat(1, 3)), b(q, Rat(1, 6));
  CHECK((a + b).str() == "1/2");
  CHECK((a * b).str() == "1/18");
  CHECK(Scalar::parse("-4/6").str() == "-2/3");
  CHECK(Scalar::parse("7").str() == "7/1");

  Field f5 = Field::prime(5);
  Scalar x(f5, Rat(7));  // 2 mod 5
  CHECK(x.str() == "2 mod 5");
  CHECK((x.inverse() * x).str() == "1 mod 5");
  CHECK(Scalar::parse("3 mod 5").field().characteristic() == 5);
  CHECK_THROWS_AS(Scalar(q, Rat(1)) + x, ConfigError);
  CHECK_THROWS_AS(Field::prime(6), ConfigError);
}

TEST_CASE("rref rank and kernel on the spec cases") {
  Field q = Field::rationals();
  SUBCASE("identity") {
    auto rr = rref(Matrix::identity(q, 2));
    CHECK(rr.rank == 2);
    CHECK(kernel_basis(Matrix::identity(q, 2)).cols() == 0);
  }
  SUBCASE("zero 3x4") {
    Matrix z(q, 3, 4);
    CHECK(rank(z) == 0);
    CHECK(kernel_basis(z).cols() == 4);
  }
  SUBCASE("[[1,2],[2,4]] has rank 1, kernel (-2,1)") {
    Matrix m = mat(q, 2, 2, {1, 2, 2, 4});
    CHECK(rank(m) == 1);
    Matrix k = kernel_basis(m);
    REQUIRE(k.cols() == 1);
    CHECK(k.at(0, 0) == Rat(-2));
    CHECK(k.at(1, 0) == Rat(1));
    CHECK((m * k).is_zero());
    CHECK(image_basis(m).cols() == 1);
  }
}

TEST_CASE("rank + kernel dimension = cols, seeded") {
  Field q = Field::rationals();
  Rng rng(7);
  for (int it = 0; it < 20; ++it) {
    int rows = static_cast<int>(rng.uniform(1, 5)), cols = static_cast<int>(rng.uniform(1, 5));
    Matrix m(q, rows, cols);
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) m.set(r, c, rng.small_int());
    CHECK(rank(m) + kernel_basis(m).cols() == cols);
    CHECK((m * kernel_basis(m)).is_zero());
  }
}

TEST_CASE("solve round-trips on consistent systems") {
  Field q = Field::rationals();
  Rng rng(11);
  for (int it = 0; it < 20; ++it) {
    int n = static_cast<int>(rng.uniform(1, 4)), m = static_cast<int>(rng.uniform(1, 4));
    Matrix a(q, n, m), x0(q, m, 1);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < m; ++c) a.set(r, c, rng.small_int());
    for (int c = 0; c < m; ++c) x0.set(c, 0, rng.small_int());
    Matrix b = a * x0;
    auto x = solve(a, b);
    REQUIRE(x.has_value());
    CHECK(a * *x == b);
  }
  // inconsistent system
  Matrix a = mat(q, 2, 1, {1, 1});
  Matrix b = mat(q, 2, 1, {1, 2});
  CHECK_FALSE(solve(a, b).has_value());
}

TEST_CASE("kron") {
  Field q = Field::rationals();
  CHECK(Matrix::identity(q, 2).kron(Matrix::identity(q, 3)) == Matrix::identity(q, 6));
  CHECK(mat(q, 1, 1, {2}).kron(mat(q, 1, 1, {3})) == mat(q, 1, 1, {6}));
  Rng rng(3);
  for (int it = 0; it < 10; ++it) {
    Matrix a(q, 2, 2), b(q, 2, 2);
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) {
        a.set(r, c, rng.small_int());
        b.set(r, c, rng.small_int());
      }
    CHECK(rank(a.kron(b)) == rank(a) * rank(b));
  }
}

TEST_CASE("field mismatch is a configuration error") {
  Matrix a(Field::rationals(), 1, 1), b(Field::prime(3), 1, 1);
  CHECK_THROWS_AS(a * b, ConfigError);
}

TEST_CASE("prime field elimination") {
  Field f3 = Field::prime(3);
  Matrix m = mat(f3, 2, 2, {1, 2, 2, 4});  // second row = 2x first mod 3
  CHECK(rank(m) == 1);
  Matrix k = kernel_basis(m);
  CHECK((m * k).is_zero());
}

TEST_CASE("SpanBuilder and QuotientSpace") {
  Field q = Field::rationals();
  SpanBuilder sb(q, 3);
  CHECK(sb.add({Rat(1), Rat(0), Rat(1)}));
  CHECK(sb.add({Rat(0), Rat(1), Rat(1)}));
  CHECK_FALSE(sb.add({Rat(1), Rat(1), Rat(2)}));
  CHECK(sb.dim() == 2);
  CHECK(sb.contains({Rat(2), Rat(-1), Rat(1)}));
  CHECK_FALSE(sb.contains({Rat(0), Rat(0), Rat(1)}));

  QuotientSpace qs(q, 3, sb.basis());
  CHECK(qs.dim() == 1);
  auto v = qs.project({Rat(1), Rat(0), Rat(1)});
  CHECK(v[0] == 0);
  // projection ∘ lift = identity on the quotient
  CHECK((qs.projection() * qs.lift()).is_identity());
}

TEST_CASE("swap matrix swaps tensor factors") {
  Field q = Field::rationals();
  Matrix s = swap_matrix(q, 2, 3);
  // e_1 ⊗ f_2 (index 0*3+1=1) -> f_2 ⊗ e_1 (index 1*2+0=2)
  CHECK(s.at(2, 1) == Rat(1));
  CHECK((s.transpose() * s).is_identity());
}
