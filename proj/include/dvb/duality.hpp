#ifndef DVB_DUALITY_HPP
#define DVB_DUALITY_HPP

#include "dvb/aut.hpp"

namespace dvb {

/// I-dual of a twist tensor. The output slot trades places with the second
/// input slot: (mu*)[j][i][k] = mu[k][i][j], a tensor on dual_dims.
template <typename S>
BilinearMap<S> mu_dual(const BilinearMap<S>& mu) {
  const Dims d = mu.dims();
  BilinearMap<S> out(dual_dims(d));
  for (std::size_t j = 0; j < d.n2; ++j)
    for (std::size_t i = 0; i < d.n1; ++i)
      for (std::size_t k = 0; k < d.n0; ++k) out.coeff(j, i, k) = mu.coeff(k, i, j);
  return out;
}

/// I-duality on automorphisms: f(a) = (a1^-1, a0^T, a2^T, mu*(a) o (a1^-1 x id)).
/// Anti-multiplicative, involutive, and adjoint to the action under the
/// fiberwise pairing: pairing(a.v, w) = pairing(v, f_dual(a).w).
template <typename S>
DvsAut<S> f_dual(const DvsAut<S>& a) {
  require_quadruple_shape(a);
  const Dims d = a.dims();
  Matrix<S> a1i = inverse(a.a1);
  BilinearMap<S> nu = mu_dual(a.mu).compose_sides(a1i, Matrix<S>::identity(d.n0));
  return {std::move(a1i), a.a0.transpose(), a.a2.transpose(), std::move(nu)};
}

/// Contragredient representation g -> f_dual(g^-1) on the I-dual space.
/// Multiplicative, and leaves the fiberwise pairing invariant.
template <typename S>
DvsAut<S> dual_rep(const DvsAut<S>& g) {
  return f_dual(aut_inverse(g));
}

/// Fiberwise pairing of v in R^[n] with w in the I-dual over a shared base
/// point: <w.y, v.z> + <w.z, v.y>. The base components must agree (within
/// base_tol, which stays at zero for exact scalars).
template <typename S>
S pairing(const DvsElement<S>& v, const DvsElement<S>& w, double base_tol = 0.0) {
  if (!(w.dims() == dual_dims(v.dims())))
    throw Error(ErrorKind::DimMismatch,
                "pairing " + v.dims().to_string() + " with " + w.dims().to_string());
  if (max_abs_diff(v.x, w.x) > base_tol)
    throw Error(ErrorKind::BaseMismatch, "pairing over distinct base points " + v.x.to_string() +
                                             " vs " + w.x.to_string());
  return dot(w.y, v.z) + dot(w.z, v.y);
}

} // namespace dvb

#endif
