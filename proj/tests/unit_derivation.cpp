#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dvb/derivation.hpp"
#include "test_support.hpp"

using namespace dvb;
using namespace dvbtest;

namespace {

const Dims D111{1, 1, 1};
const Dims D222{2, 2, 2};

template <typename S>
DvsDer<S> random_der(Rng& rng, const Dims& d) {
  DvsDer<S> x{random_matrix<S>(rng, d.n1, d.n1), random_matrix<S>(rng, d.n2, d.n2),
              random_matrix<S>(rng, d.n0, d.n0), random_bilinear<S>(rng, d)};
  return x;
}

DvsDer<Rat> der1(const Rat& a1, const Rat& a2, const Rat& a0, const Rat& al) {
  return {rmat1(a1), rmat1(a2), rmat1(a0), rmu1(al)};
}

} // namespace

TEST_CASE("worked bracket and triangle instances at dims (1,1,1)") {
  CHECK(der_bracket(der1(1, 2, 3, 4), der1(5, 6, 7, 8)) == der1(0, 0, 0, 16));
  CHECK(triangle_action(rmat1(1), rmat1(2), rmat1(3), rmu1(4)) == rmu1(0));
  CHECK(triangle_action(rmat1(1), rmat1(0), rmat1(0), rmu1(1)) == rmu1(-1));
}

TEST_CASE("bracket is bilinear and antisymmetric") {
  Rng rng(211);
  for (int t = 0; t < 60; ++t) {
    DvsDer<Rat> x = random_der<Rat>(rng, D222), y = random_der<Rat>(rng, D222);
    DvsDer<Rat> z = random_der<Rat>(rng, D222);
    Rat r = random_rat(rng);
    CHECK(der_bracket(x, y) == -der_bracket(y, x));
    CHECK(der_bracket(x + z, y) == der_bracket(x, y) + der_bracket(z, y));
    CHECK(der_bracket(r * x, y) == r * der_bracket(x, y));
    CHECK(der_bracket(x, x) == der_zero<Rat>(D222));
  }
}

TEST_CASE("Jacobi identity holds exactly") {
  Rng rng(223);
  for (const Dims& d : {D111, D222, Dims{1, 2, 1}, Dims{3, 2, 1}}) {
    for (int t = 0; t < 40; ++t) {
      DvsDer<Rat> x = random_der<Rat>(rng, d);
      DvsDer<Rat> y = random_der<Rat>(rng, d);
      DvsDer<Rat> z = random_der<Rat>(rng, d);
      DvsDer<Rat> cyc = der_bracket(der_bracket(x, y), z) + der_bracket(der_bracket(y, z), x) +
                        der_bracket(der_bracket(z, x), y);
      CHECK(cyc == der_zero<Rat>(d));
    }
  }
}

TEST_CASE("core derivations form an ideal; the bracket projects blockwise") {
  Rng rng(227);
  for (int t = 0; t < 40; ++t) {
    DvsDer<Rat> x = random_der<Rat>(rng, D222);
    DvsDer<Rat> y = random_der<Rat>(rng, D222);
    DvsDer<Rat> b = der_bracket(x, y);
    CHECK(b.A1 == x.A1 * y.A1 - y.A1 * x.A1);
    CHECK(b.A2 == x.A2 * y.A2 - y.A2 * x.A2);
    DvsDer<Rat> core = x;
    core.A1 = Matrix<Rat>::zero(2, 2);
    core.A2 = Matrix<Rat>::zero(2, 2);
    DvsDer<Rat> cb = der_bracket(core, y);
    CHECK(cb.A1.is_zero());
    CHECK(cb.A2.is_zero());
  }
}

TEST_CASE("triangle action differentiates conjugation on twists") {
  // The bracket of a block triple against a pure twist is the triangle action.
  Rng rng(229);
  for (int t = 0; t < 30; ++t) {
    DvsDer<Rat> blocks = random_der<Rat>(rng, D222);
    blocks.alpha = BilinearMap<Rat>::zero(D222);
    DvsDer<Rat> twist = der_zero<Rat>(D222);
    twist.alpha = random_bilinear<Rat>(rng, D222);
    DvsDer<Rat> br = der_bracket(blocks, twist);
    CHECK(br.A1.is_zero());
    CHECK(br.A2.is_zero());
    CHECK(br.A0.is_zero());
    CHECK(br.alpha == triangle_action(blocks.A1, blocks.A2, blocks.A0, twist.alpha));
  }
}

TEST_CASE("matrix exponential basics") {
  Matrix<double> z = Matrix<double>::zero(3, 3);
  CHECK(approx_eq(matrix_exp(z), Matrix<double>::identity(3), 1e-15));
  Matrix<double> diag{{1.0, 0.0}, {0.0, -2.0}};
  Matrix<double> e = matrix_exp(diag);
  CHECK(std::abs(e(0, 0) - std::exp(1.0)) < 1e-14);
  CHECK(std::abs(e(1, 1) - std::exp(-2.0)) < 1e-14);
  CHECK(std::abs(e(0, 1)) < 1e-15);
  // exp(A) exp(-A) = I.
  Rng rng(233);
  for (int t = 0; t < 20; ++t) {
    Matrix<double> a = random_matrix<double>(rng, 3, 3);
    CHECK(approx_eq(matrix_exp(a) * matrix_exp(-a), Matrix<double>::identity(3), 1e-13));
  }
}

TEST_CASE("group exponential matches the closed forms") {
  Rng rng(239);
  for (int t = 0; t < 25; ++t) {
    // Block-only generator: exponential is the blockwise matrix exponential.
    DvsDer<double> x = random_der<double>(rng, D222);
    x.alpha = BilinearMap<double>::zero(D222);
    DvsAut<double> g = der_exp(x, 1e-13);
    CHECK(approx_eq(g.a1, matrix_exp(x.A1), 1e-12));
    CHECK(approx_eq(g.a2, matrix_exp(x.A2), 1e-12));
    CHECK(approx_eq(g.a0, matrix_exp(x.A0), 1e-12));
    CHECK(g.mu.max_abs() <= 1e-12);

    // Twist-only generator: exponential is the unipotent (I, I, I, alpha).
    DvsDer<double> w = der_zero<double>(D222);
    w.alpha = random_bilinear<double>(rng, D222);
    DvsAut<double> u = der_exp(w, 1e-13);
    CHECK(approx_eq(u.a1, Matrix<double>::identity(2), 1e-13));
    CHECK(approx_eq(u.a2, Matrix<double>::identity(2), 1e-13));
    CHECK(approx_eq(u.a0, Matrix<double>::identity(2), 1e-13));
    CHECK(max_abs_diff(u.mu, w.alpha) <= 1e-13);
  }
}

TEST_CASE("group exponential is a local one-parameter homomorphism") {
  Rng rng(241);
  for (int t = 0; t < 15; ++t) {
    DvsDer<double> x = random_der<double>(rng, D222);
    const double s = 2.0 * rng.next_unit() - 1.0;
    const double u = 2.0 * rng.next_unit() - 1.0;
    DvsAut<double> lhs = der_exp((s + u) * x, 1e-10);
    DvsAut<double> rhs = aut_compose(der_exp(s * x, 1e-10), der_exp(u * x, 1e-10));
    CHECK(max_abs_diff(lhs, rhs) <= 1e-9);
    // exp(X) exp(-X) = e.
    DvsAut<double> round = aut_compose(der_exp(x, 1e-10), der_exp(-1.0 * x, 1e-10));
    CHECK(max_abs_diff(round, aut_identity<double>(D222)) <= 1e-9);
  }
}

TEST_CASE("group exponential has the right derivative at zero") {
  Rng rng(251);
  for (int t = 0; t < 10; ++t) {
    DvsDer<double> x = random_der<double>(rng, D222);
    auto defect = [&](double h) {
      DvsAut<double> g = der_exp(h * x, 1e-12);
      const DvsAut<double> e = aut_identity<double>(D222);
      DvsDer<double> diff{(1.0 / h) * (g.a1 - e.a1), (1.0 / h) * (g.a2 - e.a2),
                          (1.0 / h) * (g.a0 - e.a0), (1.0 / h) * g.mu};
      return max_abs_diff(diff, x);
    };
    const double d3 = defect(1e-3), d4 = defect(1e-4);
    CHECK(d3 <= 1e-2);
    CHECK(d4 <= 1e-3);
    // First order: shrinking h by 10 shrinks the defect by roughly 10.
    CHECK(d4 <= 0.3 * d3);
  }
}

TEST_CASE("unreachable tolerance is reported honestly") {
  Rng rng(257);
  DvsDer<double> x = random_der<double>(rng, D222);
  CHECK_THROWS_AS(der_exp(x, 1e-18), Error);
  CHECK_THROWS_AS(der_exp(x, 0.0), Error);
}

TEST_CASE("finite-difference estimate converges to der_bracket at first order") {
  Rng rng(263);
  int checked = 0;
  for (int t = 0; t < 12; ++t) {
    DvsDer<double> x = random_der<double>(rng, D222);
    DvsDer<double> y = random_der<double>(rng, D222);
    DvsDer<double> truth = der_bracket(x, y);
    const double scale = std::max(1.0, der_norm(truth));
    auto err = [&](double h) {
      return max_abs_diff(group_commutator_estimate(x, y, h), truth) / scale;
    };
    const double e2 = err(1e-2), e3 = err(1e-3), e4 = err(1e-4);
    CHECK(e4 <= 1e-3);
    CHECK(e3 <= 0.3 * e2);
    CHECK(e4 <= 0.3 * e3);
    ++checked;
  }
  CHECK(checked == 12);
}
