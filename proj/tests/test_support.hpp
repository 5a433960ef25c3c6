#ifndef DVB_TEST_SUPPORT_HPP
#define DVB_TEST_SUPPORT_HPP

// Shared helpers for the unit and acceptance tests. The reconstruction and
// solve routines here deliberately avoid the library's closed-form group
// formulas so they can serve as independent cross-checks.

#include "dvb/aut.hpp"
#include "dvb/dvs.hpp"
#include "dvb/rng.hpp"

namespace dvbtest {

using namespace dvb;

template <typename S>
DvsElement<S> random_element(Rng& rng, const Dims& d) {
  return {random_vector<S>(rng, d.n1), random_vector<S>(rng, d.n2), random_vector<S>(rng, d.n0)};
}

template <typename S>
BilinearMap<S> random_bilinear(Rng& rng, const Dims& d) {
  BilinearMap<S> m(d);
  for (std::size_t k = 0; k < d.n0; ++k)
    for (std::size_t i = 0; i < d.n1; ++i)
      for (std::size_t j = 0; j < d.n2; ++j) m.coeff(k, i, j) = random_scalar<S>(rng);
  return m;
}

template <typename S>
DvsAut<S> random_aut(Rng& rng, const Dims& d) {
  return {random_invertible<S>(rng, d.n1), random_invertible<S>(rng, d.n2),
          random_invertible<S>(rng, d.n0), random_bilinear<S>(rng, d)};
}

// Recovers the quadruple of an arbitrary map F that is assumed to have the
// automorphism shape, by probing it on the spanning set
// {(e_i,0,0), (0,f_j,0), (0,0,g_k), (e_i,f_j,0)}.
template <typename S, typename F>
DvsAut<S> fit_quadruple_from_action(const Dims& d, F&& action) {
  Matrix<S> a1(d.n1, d.n1), a2(d.n2, d.n2), a0(d.n0, d.n0);
  BilinearMap<S> mu(d);
  for (std::size_t i = 0; i < d.n1; ++i) {
    DvsElement<S> img = action(DvsElement<S>{Vector<S>::unit(d.n1, i), Vector<S>(d.n2), Vector<S>(d.n0)});
    for (std::size_t r = 0; r < d.n1; ++r) a1(r, i) = img.x[r];
  }
  for (std::size_t j = 0; j < d.n2; ++j) {
    DvsElement<S> img = action(DvsElement<S>{Vector<S>(d.n1), Vector<S>::unit(d.n2, j), Vector<S>(d.n0)});
    for (std::size_t r = 0; r < d.n2; ++r) a2(r, j) = img.y[r];
  }
  for (std::size_t k = 0; k < d.n0; ++k) {
    DvsElement<S> img = action(DvsElement<S>{Vector<S>(d.n1), Vector<S>(d.n2), Vector<S>::unit(d.n0, k)});
    for (std::size_t r = 0; r < d.n0; ++r) a0(r, k) = img.z[r];
  }
  // mu(e_i, f_j) is the core part of the image of (e_i, f_j, 0).
  for (std::size_t i = 0; i < d.n1; ++i)
    for (std::size_t j = 0; j < d.n2; ++j) {
      DvsElement<S> img = action(
          DvsElement<S>{Vector<S>::unit(d.n1, i), Vector<S>::unit(d.n2, j), Vector<S>(d.n0)});
      for (std::size_t k = 0; k < d.n0; ++k) mu.coeff(k, i, j) = img.z[k];
    }
  return {a1, a2, a0, mu};
}

// Solves a * x = identity block by block as plain linear systems, without the
// group inverse formula.
template <typename S>
DvsAut<S> solve_inverse_blockwise(const DvsAut<S>& a) {
  const Dims d = a.dims();
  Matrix<S> x1(d.n1, d.n1), x2(d.n2, d.n2), x0(d.n0, d.n0);
  for (std::size_t j = 0; j < d.n1; ++j) {
    Vector<S> c = solve(a.a1, Vector<S>::unit(d.n1, j));
    for (std::size_t i = 0; i < d.n1; ++i) x1(i, j) = c[i];
  }
  for (std::size_t j = 0; j < d.n2; ++j) {
    Vector<S> c = solve(a.a2, Vector<S>::unit(d.n2, j));
    for (std::size_t i = 0; i < d.n2; ++i) x2(i, j) = c[i];
  }
  for (std::size_t j = 0; j < d.n0; ++j) {
    Vector<S> c = solve(a.a0, Vector<S>::unit(d.n0, j));
    for (std::size_t i = 0; i < d.n0; ++i) x0(i, j) = c[i];
  }
  // The twist equation of a * x = e reads mu o (x1 x x2) + a0 o nu = 0; each
  // coefficient of nu is solved from one linear system a0 * nu(:,i,j) = rhs.
  BilinearMap<S> rhs = a.mu.compose_sides(x1, x2);
  BilinearMap<S> nu(d);
  for (std::size_t i = 0; i < d.n1; ++i)
    for (std::size_t j = 0; j < d.n2; ++j) {
      Vector<S> col(d.n0);
      for (std::size_t k = 0; k < d.n0; ++k) col[k] = -rhs.coeff(k, i, j);
      Vector<S> sol = solve(a.a0, col);
      for (std::size_t k = 0; k < d.n0; ++k) nu.coeff(k, i, j) = sol[k];
    }
  return {x1, x2, x0, nu};
}

inline Matrix<Rat> rmat1(const Rat& v) { return Matrix<Rat>{{v}}; }

inline BilinearMap<Rat> rmu1(const Rat& v) {
  BilinearMap<Rat> m(Dims{1, 1, 1});
  m.coeff(0, 0, 0) = v;
  return m;
}

// Convenience quadruple builder for the (1,1,1) worked instances.
inline DvsAut<Rat> quad1(const Rat& a1, const Rat& a2, const Rat& a0, const Rat& mu) {
  return {rmat1(a1), rmat1(a2), rmat1(a0), rmu1(mu)};
}

inline DvsElement<Rat> elem1(const Rat& x, const Rat& y, const Rat& z) {
  return {Vector<Rat>{x}, Vector<Rat>{y}, Vector<Rat>{z}};
}

} // namespace dvbtest

#endif
