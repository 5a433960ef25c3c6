#ifndef DVB_DERIVATION_HPP
#define DVB_DERIVATION_HPP

#include <cmath>
#include <limits>
#include <string>

#include "dvb/aut.hpp"

namespace dvb {

/// Infinitesimal automorphism of R^[n]: the quadruple (A1, A2, A0, alpha) of
/// block derivatives at the identity. These form the Lie algebra of the
/// automorphism group under der_bracket.
template <typename S>
struct DvsDer {
  Matrix<S> A1, A2, A0;
  BilinearMap<S> alpha;

  Dims dims() const { return alpha.dims(); }

  friend bool operator==(const DvsDer&, const DvsDer&) = default;

  DvsDer& operator+=(const DvsDer& o) {
    A1 += o.A1; A2 += o.A2; A0 += o.A0; alpha += o.alpha;
    return *this;
  }
  DvsDer& operator-=(const DvsDer& o) {
    A1 -= o.A1; A2 -= o.A2; A0 -= o.A0; alpha -= o.alpha;
    return *this;
  }
  friend DvsDer operator+(DvsDer a, const DvsDer& b) { return a += b; }
  friend DvsDer operator-(DvsDer a, const DvsDer& b) { return a -= b; }
  friend DvsDer operator*(const S& c, const DvsDer& x) {
    return {c * x.A1, c * x.A2, c * x.A0, c * x.alpha};
  }
  friend DvsDer operator-(const DvsDer& x) { return {-x.A1, -x.A2, -x.A0, -x.alpha}; }

  std::string to_string() const {
    return "{A1=" + A1.to_string() + ", A2=" + A2.to_string() + ", A0=" + A0.to_string() +
           ", alpha=" + alpha.to_string() + "}";
  }
};

template <typename S>
DvsDer<S> der_zero(const Dims& d) {
  return {Matrix<S>::zero(d.n1, d.n1), Matrix<S>::zero(d.n2, d.n2), Matrix<S>::zero(d.n0, d.n0),
          BilinearMap<S>::zero(d)};
}

template <typename S>
double der_norm(const DvsDer<S>& x) {
  return std::max(std::max(x.A1.max_abs(), x.A2.max_abs()),
                  std::max(x.A0.max_abs(), x.alpha.max_abs()));
}

template <typename S>
double max_abs_diff(const DvsDer<S>& a, const DvsDer<S>& b) {
  double m = max_abs_diff(a.A1, b.A1);
  m = std::max(m, max_abs_diff(a.A2, b.A2));
  m = std::max(m, max_abs_diff(a.A0, b.A0));
  m = std::max(m, max_abs_diff(a.alpha, b.alpha));
  return m;
}

template <typename S>
bool approx_eq(const DvsDer<S>& a, const DvsDer<S>& b, double tol) {
  return a.dims() == b.dims() && max_abs_diff(a, b) <= tol;
}

/// Action of a block triple on bilinear maps:
/// (A1, A2, A0) |> nu = A0 o nu - nu o (A1 x I) - nu o (I x A2).
/// This is the derivative of the conjugation action on twists.
template <typename S>
BilinearMap<S> triangle_action(const Matrix<S>& a1, const Matrix<S>& a2, const Matrix<S>& a0,
                               const BilinearMap<S>& nu) {
  const Dims d = nu.dims();
  const Matrix<S> i1 = Matrix<S>::identity(d.n1);
  const Matrix<S> i2 = Matrix<S>::identity(d.n2);
  return nu.compose_out(a0) - nu.compose_sides(a1, i2) - nu.compose_sides(i1, a2);
}

/// Lie bracket of infinitesimal automorphisms: matrix commutators blockwise,
/// and each triple acting on the other's bilinear part:
/// [X, Y].alpha = X |> Y.alpha - Y |> X.alpha.
template <typename S>
DvsDer<S> der_bracket(const DvsDer<S>& x, const DvsDer<S>& y) {
  if (!(x.dims() == y.dims()))
    throw Error(ErrorKind::DimMismatch,
                "der_bracket " + x.dims().to_string() + " with " + y.dims().to_string());
  return {x.A1 * y.A1 - y.A1 * x.A1, x.A2 * y.A2 - y.A2 * x.A2, x.A0 * y.A0 - y.A0 * x.A0,
          triangle_action(x.A1, x.A2, x.A0, y.alpha) - triangle_action(y.A1, y.A2, y.A0, x.alpha)};
}

/// Matrix exponential by scaling-and-squaring with a truncated series;
/// accurate to ~1e-15 relative for the small blocks used here.
inline Matrix<double> matrix_exp(const Matrix<double>& a) {
  if (a.rows() != a.cols()) throw Error(ErrorKind::DimMismatch, "matrix_exp of " + a.shape_string());
  const std::size_t n = a.rows();
  double norm1 = 0;
  for (std::size_t j = 0; j < n; ++j) {
    double col = 0;
    for (std::size_t i = 0; i < n; ++i) col += std::fabs(a(i, j));
    norm1 = std::max(norm1, col);
  }
  int s = 0;
  while (std::ldexp(norm1, -s) > 0.5) ++s;
  const double h = std::ldexp(1.0, -s);
  Matrix<double> b = h * a;
  Matrix<double> term = Matrix<double>::identity(n);
  Matrix<double> sum = term;
  for (int k = 1; k <= 24; ++k) {
    term = (1.0 / k) * (term * b);
    sum += term;
    if (term.max_abs() < 1e-20 * std::max(1.0, sum.max_abs())) break;
  }
  for (int i = 0; i < s; ++i) sum = sum * sum;
  return sum;
}

/// Group exponential. One scaled base step
///   (e^{h A1}, e^{h A2}, e^{h A0}, h alpha),  h = 2^-k,
/// squared k times through the group law. In exact arithmetic the block parts
/// of every intermediate square are matrix exponentials at the doubled time,
/// so they are refreshed from matrix_exp at each step; only the twist part
/// carries the recursion. k is refined until two successive refinements agree
/// within tol/2, which certifies the returned value to tol.
inline DvsAut<double> der_exp(const DvsDer<double>& x, double tol) {
  if (!(tol > 0)) throw Error(ErrorKind::InputError, "der_exp tolerance must be positive");
  const double nrm = der_norm(x);
  // Successive refinements bound the truncation error, not rounding; refuse
  // tolerances the arithmetic cannot certify.
  const double floor_tol = 64 * std::numeric_limits<double>::epsilon() * std::max(1.0, nrm);
  if (tol < floor_tol)
    throw Error(ErrorKind::ToleranceNotMet,
                "der_exp tolerance " + std::to_string(tol) + " is below attainable precision");
  int k0 = 0;
  while (std::ldexp(nrm, -k0) > 1e-6) ++k0;

  auto eval = [&x](int k) {
    double t = std::ldexp(1.0, -k);
    BilinearMap<double> m = t * x.alpha;
    for (int i = 0; i < k; ++i, t *= 2) {
      DvsAut<double> step{matrix_exp(t * x.A1), matrix_exp(t * x.A2), matrix_exp(t * x.A0), m};
      m = aut_compose(step, step).mu;
    }
    return DvsAut<double>{matrix_exp(x.A1), matrix_exp(x.A2), matrix_exp(x.A0), m};
  };

  DvsAut<double> prev = eval(k0);
  for (int k = k0 + 1; k <= k0 + 48; ++k) {
    DvsAut<double> cur = eval(k);
    if (max_abs_diff(cur, prev) <= tol / 2) return cur;
    prev = cur;
  }
  throw Error(ErrorKind::ToleranceNotMet,
              "der_exp could not certify tolerance " + std::to_string(tol));
}

/// Finite-difference bracket estimator: with C(t,s) = exp(tX) exp(sY) exp(-tX)
/// exp(-sY), returns (C(h,h) - e) / h^2 assembled blockwise. First-order
/// accurate: the error against der_bracket decays linearly in h.
inline DvsDer<double> group_commutator_estimate(const DvsDer<double>& x, const DvsDer<double>& y,
                                                double h) {
  if (!(h > 0)) throw Error(ErrorKind::InputError, "step must be positive");
  if (!(x.dims() == y.dims())) throw Error(ErrorKind::DimMismatch, "group_commutator_estimate");
  const Dims d = x.dims();
  const double tol = 1e-13 * std::max(1.0, der_norm(x) + der_norm(y));
  DvsAut<double> c = aut_compose(
      aut_compose(der_exp(h * x, tol), der_exp(h * y, tol)),
      aut_compose(der_exp(-h * x, tol), der_exp(-h * y, tol)));
  const double inv_h2 = 1.0 / (h * h);
  return {inv_h2 * (c.a1 - Matrix<double>::identity(d.n1)),
          inv_h2 * (c.a2 - Matrix<double>::identity(d.n2)),
          inv_h2 * (c.a0 - Matrix<double>::identity(d.n0)), inv_h2 * c.mu};
}

} // namespace dvb

#endif
