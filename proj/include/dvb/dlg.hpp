#ifndef DVB_DLG_HPP
#define DVB_DLG_HPP

#include <string>
#include <utility>

#include "dvb/aut.hpp"
#include "dvb/report.hpp"
#include "dvb/rng.hpp"

namespace dvb {

/// Named double Lie group instances. All of them are realized on the quadruple
/// element type as subgroups of the full automorphism group:
///   TrivialProduct  G1 x G2 x G0          = { mu = 0 }
///   Semidirect      (G1 x G2) |x T        = { a0 = I }, phi-action nu -> nu o (g1^-1 x g2^-1)
///   Aut             Aut(R^[n])            = all quadruples
///   BrokenPhi       negative control: Aut's elements with a deliberately
///                   mis-wired projection (phi2 = 2*a2), so the homomorphism
///                   checks must fail.
enum class DlgKind { TrivialProduct, Semidirect, Aut, BrokenPhi };

inline const char* dlg_kind_name(DlgKind k) {
  switch (k) {
    case DlgKind::TrivialProduct: return "trivial_product";
    case DlgKind::Semidirect: return "semidirect";
    case DlgKind::Aut: return "aut";
    case DlgKind::BrokenPhi: return "broken_phi";
  }
  return "?";
}

template <typename S>
struct DlgSpec {
  DlgKind kind = DlgKind::Aut;
  Dims dims;

  static DlgSpec trivial_product(const Dims& d) { return {DlgKind::TrivialProduct, d}; }
  static DlgSpec semidirect(const Dims& d) { return {DlgKind::Semidirect, d}; }
  static DlgSpec aut(const Dims& d) { return {DlgKind::Aut, d}; }
  static DlgSpec broken_phi(const Dims& d) { return {DlgKind::BrokenPhi, d}; }

  std::string name() const { return std::string(dlg_kind_name(kind)) + dims.to_string(); }

  bool contains(const DvsAut<S>& a) const {
    if (!(a.dims() == dims)) return false;
    switch (kind) {
      case DlgKind::TrivialProduct: return a.mu.is_zero();
      case DlgKind::Semidirect: return a.a0.is_identity();
      default: return true;
    }
  }

  DvsAut<S> identity() const { return aut_identity<S>(dims); }

  DvsAut<S> multiply(const DvsAut<S>& a, const DvsAut<S>& b) const {
    require_member(a, "multiply lhs");
    require_member(b, "multiply rhs");
    return aut_compose(a, b);
  }

  DvsAut<S> invert(const DvsAut<S>& a) const {
    require_member(a, "invert");
    return aut_inverse(a);
  }

  /// Projection onto the side factor G1 x G2.
  std::pair<Matrix<S>, Matrix<S>> phi(const DvsAut<S>& a) const {
    if (kind == DlgKind::BrokenPhi) return {a.a1, S(2) * a.a2};
    return {a.a1, a.a2};
  }

  bool in_k1(const DvsAut<S>& a) const { return contains(a) && aut_in_k1(a); }
  bool in_k2(const DvsAut<S>& a) const { return contains(a) && aut_in_k2(a); }
  bool in_core(const DvsAut<S>& a) const { return contains(a) && aut_in_k1(a) && aut_in_k2(a); }

  /// Embeds core data (a0, mu) as a group element. Components the instance's
  /// core does not carry must be trivial.
  DvsAut<S> core_include(const Matrix<S>& a0, const BilinearMap<S>& mu) const {
    if (kind == DlgKind::TrivialProduct && !mu.is_zero())
      throw Error(ErrorKind::InputError, "trivial-product core carries no bilinear part");
    if (kind == DlgKind::Semidirect && !a0.is_identity())
      throw Error(ErrorKind::InputError, "semidirect core carries no V0 block");
    DvsAut<S> g{Matrix<S>::identity(dims.n1), Matrix<S>::identity(dims.n2), a0, mu};
    require_quadruple_shape(g);
    return g;
  }

  /// Splits a projection-kernel element back into core data.
  std::pair<Matrix<S>, BilinearMap<S>> core_extract(const DvsAut<S>& a) const {
    if (!in_core(a)) throw Error(ErrorKind::InputError, "not a projection-kernel element");
    return {a.a0, a.mu};
  }

  /// The K1 K2 factorization g = k1 * k2 with k1 = (I, a2, a0, mu o (a1^-1 x I))
  /// and k2 = (a1, I, I, 0); both factors stay inside the instance.
  std::pair<DvsAut<S>, DvsAut<S>> factor_k1_k2(const DvsAut<S>& g) const {
    require_member(g, "factor_k1_k2");
    DvsAut<S> k1{Matrix<S>::identity(dims.n1), g.a2, g.a0,
                 g.mu.compose_sides(inverse(g.a1), Matrix<S>::identity(dims.n2))};
    DvsAut<S> k2{g.a1, Matrix<S>::identity(dims.n2), Matrix<S>::identity(dims.n0),
                 BilinearMap<S>::zero(dims)};
    return {k1, k2};
  }

  DvsAut<S> random_element(Rng& rng) const {
    DvsAut<S> g{random_invertible<S>(rng, dims.n1), random_invertible<S>(rng, dims.n2),
                random_invertible<S>(rng, dims.n0), random_bilinear_map(rng)};
    if (kind == DlgKind::TrivialProduct) g.mu = BilinearMap<S>::zero(dims);
    if (kind == DlgKind::Semidirect) g.a0 = Matrix<S>::identity(dims.n0);
    return g;
  }

  DvsAut<S> random_core(Rng& rng) const {
    switch (kind) {
      case DlgKind::TrivialProduct:
        return core_include(random_invertible<S>(rng, dims.n0), BilinearMap<S>::zero(dims));
      case DlgKind::Semidirect:
        return core_include(Matrix<S>::identity(dims.n0), random_bilinear_map(rng));
      default:
        return core_include(random_invertible<S>(rng, dims.n0), random_bilinear_map(rng));
    }
  }

  DvsAut<S> random_k1(Rng& rng) const {
    DvsAut<S> g = random_element(rng);
    g.a1 = Matrix<S>::identity(dims.n1);
    return g;
  }

  DvsAut<S> random_k2(Rng& rng) const {
    DvsAut<S> g = random_element(rng);
    g.a2 = Matrix<S>::identity(dims.n2);
    return g;
  }

 private:
  BilinearMap<S> random_bilinear_map(Rng& rng) const {
    BilinearMap<S> m(dims);
    for (std::size_t k = 0; k < dims.n0; ++k)
      for (std::size_t i = 0; i < dims.n1; ++i)
        for (std::size_t j = 0; j < dims.n2; ++j) m.coeff(k, i, j) = random_scalar<S>(rng);
    return m;
  }

  void require_member(const DvsAut<S>& a, const char* who) const {
    if (!contains(a))
      throw Error(ErrorKind::InputError, std::string(who) + " not in " + name());
  }
};

/// Structural verification of a double Lie group instance: projection
/// homomorphism, kernel = core, normal kernels of the two side projections,
/// K1 K2 factorization, and surjectivity of the projection.
template <typename S>
CheckReport dlg_verify(const DlgSpec<S>& spec, int trials, std::uint64_t seed) {
  CheckReport report;
  const DvsAut<S> e = spec.identity();

  bool closure = true, assoc = true, phi_id = true, phi_hom = true, phi_surj = true;
  bool kernel_core = true, k1_norm = true, k2_norm = true, factor = true, proj_diag = true;
  std::string detail_closure, detail_assoc, detail_phi_hom, detail_kernel, detail_k1, detail_k2,
      detail_factor, detail_proj, detail_surj;

  auto record = [](bool& flag, std::string& detail, int trial, const std::string& text) {
    if (flag) detail = "trial " + std::to_string(trial) + ": " + text;
    flag = false;
  };

  for (int t = 0; t < trials; ++t) {
    Rng rng = Rng::for_trial(seed, static_cast<std::uint64_t>(t));
    DvsAut<S> a = spec.random_element(rng);
    DvsAut<S> b = spec.random_element(rng);
    DvsAut<S> c = spec.random_element(rng);

    DvsAut<S> ab = spec.multiply(a, b);
    if (!(spec.contains(ab) && spec.contains(spec.invert(a))))
      record(closure, detail_closure, t, "product or inverse left the instance");
    if (!(spec.multiply(ab, c) == spec.multiply(a, spec.multiply(b, c))))
      record(assoc, detail_assoc, t, "associativity failed");

    auto [p1, p2] = spec.phi(spec.multiply(a, b));
    auto [a1, a2] = spec.phi(a);
    auto [b1, b2] = spec.phi(b);
    if (!(p1 == a1 * b1 && p2 == a2 * b2))
      record(phi_hom, detail_phi_hom, t, "phi(ab) != phi(a)phi(b) for a=" + a.to_string());

    // Surjectivity: a preimage of the side pair of a random element.
    DvsAut<S> lift{a.a1, b.a2, Matrix<S>::identity(spec.dims.n0), BilinearMap<S>::zero(spec.dims)};
    auto [l1, l2] = spec.phi(lift);
    if (!(spec.contains(lift) && l1 == a.a1 && l2 == b.a2))
      record(phi_surj, detail_surj, t, "no preimage for a random side pair");

    // Kernel = core, both inclusions.
    DvsAut<S> core = spec.random_core(rng);
    auto [c1, c2] = spec.phi(core);
    bool core_in_kernel = c1.is_identity() && c2.is_identity() && spec.in_core(core);
    auto [d0, dmu] = spec.core_extract(core);
    bool kernel_in_core = spec.core_include(d0, dmu) == core;
    if (!(core_in_kernel && kernel_in_core))
      record(kernel_core, detail_kernel, t, "kernel/core mismatch at " + core.to_string());

    DvsAut<S> k1 = spec.random_k1(rng);
    if (!spec.in_k1(spec.multiply(spec.multiply(a, k1), spec.invert(a))))
      record(k1_norm, detail_k1, t, "conjugate of K1 element left K1");
    DvsAut<S> k2 = spec.random_k2(rng);
    if (!spec.in_k2(spec.multiply(spec.multiply(a, k2), spec.invert(a))))
      record(k2_norm, detail_k2, t, "conjugate of K2 element left K2");

    auto [f1, f2] = spec.factor_k1_k2(a);
    if (!(spec.in_k1(f1) && spec.in_k2(f2) && spec.multiply(f1, f2) == a))
      record(factor, detail_factor, t, "K1 K2 factorization failed for " + a.to_string());

    // Restricted projections: K1 maps into {I} x G2, K2 into G1 x {I}.
    auto [k1p1, k1p2] = spec.phi(k1);
    auto [k2p1, k2p2] = spec.phi(k2);
    (void)k1p2;
    (void)k2p1;
    if (!(k1p1.is_identity() && k2p2.is_identity()))
      record(proj_diag, detail_proj, t, "restricted projection not trivial on kernel side");
  }

  auto [e1, e2] = spec.phi(e);
  phi_id = e1.is_identity() && e2.is_identity();

  report.add("closure", closure, detail_closure);
  report.add("associativity", assoc, detail_assoc);
  report.add("phi_identity", phi_id, phi_id ? "" : "phi(e) != (I, I)");
  report.add("phi_homomorphism", phi_hom, detail_phi_hom);
  report.add("phi_surjective", phi_surj, detail_surj);
  report.add("kernel_equals_core", kernel_core, detail_kernel);
  report.add("k1_normal", k1_norm, detail_k1);
  report.add("k2_normal", k2_norm, detail_k2);
  report.add("k1_k2_factorization", factor, detail_factor);
  report.add("restricted_projections", proj_diag, detail_proj);
  return report;
}

} // namespace dvb

#endif
