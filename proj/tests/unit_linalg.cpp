#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dvb/linalg.hpp"
#include "dvb/rng.hpp"

using namespace dvb;

TEST_CASE("rational literals parse and print") {
  CHECK(rat_to_string(Rat(7, 2)) == "7/2");
  CHECK(rat_to_string(Rat(-6, 4)) == "-3/2");
  CHECK(rat_to_string(Rat(5)) == "5");
  CHECK(rat_from_string("7/2") == Rat(7, 2));
  CHECK(rat_from_string("-3") == Rat(-3));
  CHECK(rat_from_string("4/-6") == Rat(-2, 3));
  CHECK_THROWS_AS(rat_from_string("1/0"), Error);
  CHECK_THROWS_AS(rat_from_string("x"), Error);
}

TEST_CASE("matrix inverse round trips exactly over rationals") {
  Rng rng(7);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 1 + t % 4;
    Matrix<Rat> m = random_invertible<Rat>(rng, n);
    Matrix<Rat> mi = inverse(m);
    CHECK(m * mi == Matrix<Rat>::identity(n));
    CHECK(mi * m == Matrix<Rat>::identity(n));
  }
}

TEST_CASE("singular matrices are rejected") {
  Matrix<Rat> m{{Rat(1), Rat(2)}, {Rat(2), Rat(4)}};
  CHECK_THROWS_AS(inverse(m), Error);
  CHECK(det(m) == Rat(0));
}

TEST_CASE("solve agrees with inverse application") {
  Rng rng(11);
  for (int t = 0; t < 30; ++t) {
    Matrix<Rat> m = random_invertible<Rat>(rng, 3);
    Vector<Rat> b = random_vector<Rat>(rng, 3);
    Vector<Rat> x = solve(m, b);
    CHECK(m * x == b);
    CHECK(inverse(m) * b == x);
  }
}

TEST_CASE("rank counts pivots exactly") {
  Matrix<Rat> m{{Rat(1), Rat(2), Rat(3)}, {Rat(2), Rat(4), Rat(6)}, {Rat(0), Rat(1), Rat(1)}};
  CHECK(rank(m) == 2);
  CHECK(rank(Matrix<Rat>::identity(4)) == 4);
  CHECK(rank(Matrix<Rat>::zero(3, 5)) == 0);
  Rng rng(3);
  for (int t = 0; t < 20; ++t) CHECK(rank(random_invertible<Rat>(rng, 3)) == 3);
}

TEST_CASE("determinant is multiplicative") {
  Rng rng(5);
  for (int t = 0; t < 30; ++t) {
    Matrix<Rat> a = random_matrix<Rat>(rng, 3, 3);
    Matrix<Rat> b = random_matrix<Rat>(rng, 3, 3);
    CHECK(det(a * b) == det(a) * det(b));
  }
}

TEST_CASE("float kind gets tolerance-based comparisons") {
  Matrix<double> a{{1.0, 0.0}, {0.0, 1.0}};
  Matrix<double> b{{1.0 + 1e-12, 0.0}, {0.0, 1.0}};
  CHECK(approx_eq(a, b, 1e-10));
  CHECK_FALSE(approx_eq(a, b, 1e-14));
  Rng rng(13);
  Matrix<double> m = random_invertible<double>(rng, 3);
  CHECK(approx_eq(m * inverse(m), Matrix<double>::identity(3), 1e-12));
}

TEST_CASE("shape mismatches raise DimMismatch") {
  Matrix<Rat> a(2, 3), b(2, 2);
  CHECK_THROWS_AS(a + b, Error);
  CHECK_THROWS_AS(b * a * a, Error);
  CHECK_THROWS_AS(dot(Vector<Rat>(2), Vector<Rat>(3)), Error);
}
