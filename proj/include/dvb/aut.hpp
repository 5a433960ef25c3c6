#ifndef DVB_AUT_HPP
#define DVB_AUT_HPP

#include <string>
#include <utility>

#include "dvb/dvs.hpp"

namespace dvb {

/// Automorphism of the double vector space R^[n], stored as the quadruple
/// (a1, a2, a0, mu): invertible blocks on V1, V2, V0 plus a bilinear twist.
/// It acts by (x, y, z) -> (a1 x, a2 y, a0 z + mu(x, y)).
template <typename S>
struct DvsAut {
  Matrix<S> a1, a2, a0;
  BilinearMap<S> mu;

  Dims dims() const { return mu.dims(); }

  friend bool operator==(const DvsAut&, const DvsAut&) = default;

  std::string to_string() const {
    return "{a1=" + a1.to_string() + ", a2=" + a2.to_string() + ", a0=" + a0.to_string() +
           ", mu=" + mu.to_string() + "}";
  }
};

template <typename S>
void require_quadruple_shape(const DvsAut<S>& a) {
  const Dims d = a.dims();
  if (a.a1.rows() != d.n1 || a.a1.cols() != d.n1 || a.a2.rows() != d.n2 || a.a2.cols() != d.n2 ||
      a.a0.rows() != d.n0 || a.a0.cols() != d.n0)
    throw Error(ErrorKind::DimMismatch, "quadruple blocks inconsistent with " + d.to_string());
}

template <typename S>
DvsAut<S> aut_identity(const Dims& d) {
  return {Matrix<S>::identity(d.n1), Matrix<S>::identity(d.n2), Matrix<S>::identity(d.n0),
          BilinearMap<S>::zero(d)};
}

template <typename S>
DvsElement<S> aut_apply(const DvsAut<S>& a, const DvsElement<S>& v) {
  if (!(a.dims() == v.dims()))
    throw Error(ErrorKind::DimMismatch,
                "aut_apply " + a.dims().to_string() + " on " + v.dims().to_string());
  return {a.a1 * v.x, a.a2 * v.y, a.a0 * v.z + a.mu.eval(v.x, v.y)};
}

/// Group law; (a * b) acts as "apply b, then a".
template <typename S>
DvsAut<S> aut_compose(const DvsAut<S>& a, const DvsAut<S>& b) {
  if (!(a.dims() == b.dims()))
    throw Error(ErrorKind::DimMismatch,
                "aut_compose " + a.dims().to_string() + " with " + b.dims().to_string());
  return {a.a1 * b.a1, a.a2 * b.a2, a.a0 * b.a0,
          a.mu.compose_sides(b.a1, b.a2) + b.mu.compose_out(a.a0)};
}

template <typename S>
DvsAut<S> aut_inverse(const DvsAut<S>& a) {
  Matrix<S> a1i = inverse(a.a1);
  Matrix<S> a2i = inverse(a.a2);
  Matrix<S> a0i = inverse(a.a0);
  BilinearMap<S> nu = -(a.mu.compose_sides(a1i, a2i).compose_out(a0i));
  return {std::move(a1i), std::move(a2i), std::move(a0i), std::move(nu)};
}

/// Projection onto the pair of side blocks; a group homomorphism onto
/// GL(V1) x GL(V2).
template <typename S>
std::pair<Matrix<S>, Matrix<S>> aut_project(const DvsAut<S>& a) {
  return {a.a1, a.a2};
}

template <typename S>
bool aut_in_k1(const DvsAut<S>& a) { return a.a1.is_identity(); }

template <typename S>
bool aut_in_k2(const DvsAut<S>& a) { return a.a2.is_identity(); }

/// Membership layers of the projection kernel filtration.
enum class AutClass { General, InK1, InK2, InG0 };

inline const char* aut_class_name(AutClass c) {
  switch (c) {
    case AutClass::General: return "general";
    case AutClass::InK1: return "in_K1";
    case AutClass::InK2: return "in_K2";
    case AutClass::InG0: return "in_G0";
  }
  return "?";
}

template <typename S>
AutClass aut_classify(const DvsAut<S>& a) {
  const bool k1 = aut_in_k1(a), k2 = aut_in_k2(a);
  if (k1 && k2) return AutClass::InG0;
  if (k1) return AutClass::InK1;
  if (k2) return AutClass::InK2;
  return AutClass::General;
}

template <typename S>
double max_abs_diff(const DvsAut<S>& a, const DvsAut<S>& b) {
  double m = max_abs_diff(a.a1, b.a1);
  m = std::max(m, max_abs_diff(a.a2, b.a2));
  m = std::max(m, max_abs_diff(a.a0, b.a0));
  m = std::max(m, max_abs_diff(a.mu, b.mu));
  return m;
}

template <typename S>
bool approx_eq(const DvsAut<S>& a, const DvsAut<S>& b, double tol) {
  return a.dims() == b.dims() && max_abs_diff(a, b) <= tol;
}

} // namespace dvb

#endif
