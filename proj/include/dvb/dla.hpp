#ifndef DVB_DLA_HPP
#define DVB_DLA_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "dvb/linalg.hpp"
#include "dvb/report.hpp"
#include "dvb/scalar.hpp"
#include "dvb/dims.hpp"

namespace dvb {

/// Finite-dimensional Lie algebra over exact rationals, given by structure
/// constants: bracket_basis(i, j) = [e_i, e_j] in coordinates. Antisymmetry
/// and Jacobi are verified by jacobi_check, not enforced on construction.
struct LieAlgebra {
  std::size_t dim = 0;
  std::vector<Vector<Rat>> c; // dim*dim entries, row-major over (i, j)

  static LieAlgebra abelian(std::size_t n) {
    return {n, std::vector<Vector<Rat>>(n * n, Vector<Rat>(n))};
  }

  const Vector<Rat>& bracket_basis(std::size_t i, std::size_t j) const { return c[i * dim + j]; }
  Vector<Rat>& bracket_basis(std::size_t i, std::size_t j) { return c[i * dim + j]; }

  Vector<Rat> bracket(const Vector<Rat>& x, const Vector<Rat>& y) const {
    if (x.size() != dim || y.size() != dim)
      throw Error(ErrorKind::DimMismatch, "bracket arguments vs algebra dim");
    Vector<Rat> out(dim);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j)
        if (!(x[i] == Rat(0)) && !(y[j] == Rat(0))) out = out + (x[i] * y[j]) * bracket_basis(i, j);
    return out;
  }

  friend bool operator==(const LieAlgebra&, const LieAlgebra&) = default;
};

/// Antisymmetry and the Jacobi identity over all basis pairs/triples, exact.
inline CheckReport jacobi_check(const LieAlgebra& g) {
  CheckReport report;
  bool anti = true;
  std::string anti_detail;
  for (std::size_t i = 0; i < g.dim && anti; ++i)
    for (std::size_t j = 0; j <= i && anti; ++j)
      if (!(g.bracket_basis(i, j) + g.bracket_basis(j, i)).is_zero()) {
        anti = false;
        anti_detail = "[e" + std::to_string(i) + ",e" + std::to_string(j) + "] not antisymmetric";
      }
  report.add("antisymmetry", anti, anti_detail);

  bool jac = true;
  std::string jac_detail;
  for (std::size_t i = 0; i < g.dim && jac; ++i)
    for (std::size_t j = 0; j < g.dim && jac; ++j)
      for (std::size_t k = 0; k < g.dim && jac; ++k) {
        Vector<Rat> s = g.bracket(g.bracket_basis(i, j), Vector<Rat>::unit(g.dim, k)) +
                        g.bracket(g.bracket_basis(j, k), Vector<Rat>::unit(g.dim, i)) +
                        g.bracket(g.bracket_basis(k, i), Vector<Rat>::unit(g.dim, j));
        if (!s.is_zero()) {
          jac = false;
          jac_detail = "Jacobi fails on (e" + std::to_string(i) + ",e" + std::to_string(j) +
                       ",e" + std::to_string(k) + ")";
        }
      }
  report.add("jacobi", jac, jac_detail);
  return report;
}

/// Direct sum with block structure constants; cross brackets vanish.
inline LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  LieAlgebra out = LieAlgebra::abelian(a.dim + b.dim);
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j)
      for (std::size_t k = 0; k < a.dim; ++k)
        out.bracket_basis(i, j)[k] = a.bracket_basis(i, j)[k];
  for (std::size_t i = 0; i < b.dim; ++i)
    for (std::size_t j = 0; j < b.dim; ++j)
      for (std::size_t k = 0; k < b.dim; ++k)
        out.bracket_basis(a.dim + i, a.dim + j)[a.dim + k] = b.bracket_basis(i, j)[k];
  return out;
}

/// Module over a Lie algebra: one action matrix per algebra generator on a
/// fixed carrier. The homomorphism law is verified by module_check.
struct LieModule {
  std::size_t carrier = 0;
  std::vector<Matrix<Rat>> rho; // one per generator

  static LieModule trivial(std::size_t gens, std::size_t carrier) {
    return {carrier, std::vector<Matrix<Rat>>(gens, Matrix<Rat>(carrier, carrier))};
  }

  std::size_t gens() const { return rho.size(); }

  Matrix<Rat> action(const Vector<Rat>& x) const {
    if (x.size() != gens()) throw Error(ErrorKind::DimMismatch, "module action argument");
    Matrix<Rat> out(carrier, carrier);
    for (std::size_t i = 0; i < gens(); ++i) out = out + x[i] * rho[i];
    return out;
  }

  friend bool operator==(const LieModule&, const LieModule&) = default;
};

/// The adjoint module of g: rho(e_i) = [e_i, -].
inline LieModule adjoint_module(const LieAlgebra& g) {
  LieModule m{g.dim, {}};
  for (std::size_t i = 0; i < g.dim; ++i) {
    Matrix<Rat> a(g.dim, g.dim);
    for (std::size_t j = 0; j < g.dim; ++j)
      for (std::size_t k = 0; k < g.dim; ++k) a(k, j) = g.bracket_basis(i, j)[k];
    m.rho.push_back(a);
  }
  return m;
}

/// rho([e_i, e_j]) = rho(e_i) rho(e_j) - rho(e_j) rho(e_i), exact.
inline CheckReport module_check(const LieAlgebra& g, const LieModule& m) {
  CheckReport report;
  if (m.gens() != g.dim) throw Error(ErrorKind::DimMismatch, "module generators vs algebra dim");
  bool ok = true;
  std::string detail;
  for (std::size_t i = 0; i < g.dim && ok; ++i)
    for (std::size_t j = 0; j < g.dim && ok; ++j)
      if (!(m.action(g.bracket_basis(i, j)) == m.rho[i] * m.rho[j] - m.rho[j] * m.rho[i])) {
        ok = false;
        detail = "rho([e" + std::to_string(i) + ",e" + std::to_string(j) + "]) differs";
      }
  report.add("module_homomorphism", ok, detail);
  return report;
}

/// Module-valued alternating cochain of degree 1, 2 or 3 on a Lie algebra,
/// stored densely on all index tuples. Degree-2/3 data is expected
/// antisymmetric; is_antisymmetric verifies.
struct Cochain {
  int degree = 1;
  std::size_t alg_dim = 0;
  std::size_t mod_dim = 0;
  std::vector<Vector<Rat>> vals;

  static Cochain zero(int degree, std::size_t alg_dim, std::size_t mod_dim) {
    std::size_t count = 1;
    for (int r = 0; r < degree; ++r) count *= alg_dim;
    return {degree, alg_dim, mod_dim, std::vector<Vector<Rat>>(count, Vector<Rat>(mod_dim))};
  }

  const Vector<Rat>& at(std::size_t i) const { return vals[i]; }
  Vector<Rat>& at(std::size_t i) { return vals[i]; }
  const Vector<Rat>& at(std::size_t i, std::size_t j) const { return vals[i * alg_dim + j]; }
  Vector<Rat>& at(std::size_t i, std::size_t j) { return vals[i * alg_dim + j]; }
  const Vector<Rat>& at(std::size_t i, std::size_t j, std::size_t k) const {
    return vals[(i * alg_dim + j) * alg_dim + k];
  }
  Vector<Rat>& at(std::size_t i, std::size_t j, std::size_t k) {
    return vals[(i * alg_dim + j) * alg_dim + k];
  }

  /// Antisymmetric pair assignment for degree 2.
  void set_pair(std::size_t i, std::size_t j, const Vector<Rat>& v) {
    at(i, j) = v;
    at(j, i) = -v;
  }

  bool is_zero() const {
    for (const auto& v : vals)
      if (!v.is_zero()) return false;
    return true;
  }

  bool is_antisymmetric() const {
    if (degree == 1) return true;
    if (degree == 2) {
      for (std::size_t i = 0; i < alg_dim; ++i)
        for (std::size_t j = 0; j <= i; ++j)
          if (!(at(i, j) + at(j, i)).is_zero()) return false;
      return true;
    }
    for (std::size_t i = 0; i < alg_dim; ++i)
      for (std::size_t j = 0; j < alg_dim; ++j)
        for (std::size_t k = 0; k < alg_dim; ++k)
          if (!(at(i, j, k) + at(j, i, k)).is_zero() || !(at(i, j, k) + at(i, k, j)).is_zero())
            return false;
    return true;
  }

  Vector<Rat> eval(const Vector<Rat>& x) const {
    if (degree != 1 || x.size() != alg_dim) throw Error(ErrorKind::DimMismatch, "cochain eval/1");
    Vector<Rat> out(mod_dim);
    for (std::size_t i = 0; i < alg_dim; ++i) out = out + x[i] * at(i);
    return out;
  }

  Vector<Rat> eval(const Vector<Rat>& x, const Vector<Rat>& y) const {
    if (degree != 2 || x.size() != alg_dim || y.size() != alg_dim)
      throw Error(ErrorKind::DimMismatch, "cochain eval/2");
    Vector<Rat> out(mod_dim);
    for (std::size_t i = 0; i < alg_dim; ++i)
      for (std::size_t j = 0; j < alg_dim; ++j) out = out + (x[i] * y[j]) * at(i, j);
    return out;
  }

  friend bool operator==(const Cochain&, const Cochain&) = default;

  friend Cochain operator+(const Cochain& a, const Cochain& b) {
    if (!(a.degree == b.degree && a.alg_dim == b.alg_dim && a.mod_dim == b.mod_dim))
      throw Error(ErrorKind::DimMismatch, "cochain sum");
    Cochain out = a;
    for (std::size_t t = 0; t < out.vals.size(); ++t) out.vals[t] = out.vals[t] + b.vals[t];
    return out;
  }

  friend Cochain operator-(const Cochain& a, const Cochain& b) {
    if (!(a.degree == b.degree && a.alg_dim == b.alg_dim && a.mod_dim == b.mod_dim))
      throw Error(ErrorKind::DimMismatch, "cochain difference");
    Cochain out = a;
    for (std::size_t t = 0; t < out.vals.size(); ++t) out.vals[t] = out.vals[t] - b.vals[t];
    return out;
  }
};

/// First-slot insertion: (insert_first(w, a))(x) = w(a, x).
inline Cochain insert_first(const Cochain& w, const Vector<Rat>& a) {
  if (w.degree != 2 || a.size() != w.alg_dim)
    throw Error(ErrorKind::DimMismatch, "insert_first wants a degree-2 cochain");
  Cochain out = Cochain::zero(1, w.alg_dim, w.mod_dim);
  for (std::size_t i = 0; i < w.alg_dim; ++i)
    for (std::size_t s = 0; s < w.alg_dim; ++s) out.at(i) = out.at(i) + a[s] * w.at(s, i);
  return out;
}

/// Chevalley-Eilenberg differential for degrees 1 -> 2 and 2 -> 3:
///   d theta(x,y)   = rho(x) theta(y) - rho(y) theta(x) - theta([x,y])
///   d w(x,y,z)     = rho(x) w(y,z) - rho(y) w(x,z) + rho(z) w(x,y)
///                    - w([x,y],z) + w([x,z],y) - w([y,z],x)
inline Cochain ce_differential(const LieAlgebra& g, const LieModule& m, const Cochain& c) {
  if (m.gens() != g.dim || c.alg_dim != g.dim || c.mod_dim != m.carrier)
    throw Error(ErrorKind::DimMismatch, "ce_differential inputs disagree");
  const std::size_t n = g.dim;
  if (c.degree == 1) {
    Cochain out = Cochain::zero(2, n, m.carrier);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        out.at(i, j) = m.rho[i] * c.at(j) - m.rho[j] * c.at(i) - c.eval(g.bracket_basis(i, j));
    return out;
  }
  if (c.degree == 2) {
    auto w_vb = [&](const Vector<Rat>& v, std::size_t b) {
      Vector<Rat> out(c.mod_dim);
      for (std::size_t s = 0; s < n; ++s) out = out + v[s] * c.at(s, b);
      return out;
    };
    Cochain out = Cochain::zero(3, n, m.carrier);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          out.at(i, j, k) = m.rho[i] * c.at(j, k) - m.rho[j] * c.at(i, k) +
                            m.rho[k] * c.at(i, j) - w_vb(g.bracket_basis(i, j), k) +
                            w_vb(g.bracket_basis(i, k), j) - w_vb(g.bracket_basis(j, k), i);
    return out;
  }
  throw Error(ErrorKind::InputError, "ce_differential defined for degrees 1 and 2");
}

/// Multidegree components of a 2-cochain on a direct sum g1 (+) g2, each kept
/// on the full sum for easy reassembly: w = w20 + w11 + w02.
struct SplitCochain {
  Cochain w20;
  Cochain w11;
  Cochain w02;
};

inline SplitCochain split_cochain(const Cochain& w, std::size_t n1) {
  if (w.degree != 2) throw Error(ErrorKind::InputError, "split_cochain wants degree 2");
  if (n1 > w.alg_dim) throw Error(ErrorKind::InputError, "side dimension exceeds total");
  SplitCochain out{Cochain::zero(2, w.alg_dim, w.mod_dim), Cochain::zero(2, w.alg_dim, w.mod_dim),
                   Cochain::zero(2, w.alg_dim, w.mod_dim)};
  for (std::size_t i = 0; i < w.alg_dim; ++i)
    for (std::size_t j = 0; j < w.alg_dim; ++j) {
      int firsts = (i < n1 ? 1 : 0) + (j < n1 ? 1 : 0);
      (firsts == 2 ? out.w20 : firsts == 1 ? out.w11 : out.w02).at(i, j) = w.at(i, j);
    }
  return out;
}

namespace detail {

/// Restriction of a sum-indexed degree-2 cochain to one side block.
inline Cochain restrict_block(const Cochain& w, std::size_t offset, std::size_t n) {
  Cochain out = Cochain::zero(2, n, w.mod_dim);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.at(i, j) = w.at(offset + i, offset + j);
  return out;
}

} // namespace detail

/// The split criterion for a 2-cochain on g1 (+) g2 with commuting side
/// actions: the pure components are side cocycles and the mixed component
/// satisfies the two insertion relations. The final check replays the
/// conjunction against the full differential being zero.
inline CheckReport split_cocycle_check(const LieAlgebra& g1, const LieAlgebra& g2,
                                       const LieModule& r1, const LieModule& r2,
                                       const Cochain& w) {
  if (r1.carrier != r2.carrier) throw Error(ErrorKind::DimMismatch, "side modules carrier");
  if (r1.gens() != g1.dim || r2.gens() != g2.dim)
    throw Error(ErrorKind::DimMismatch, "side module generators");
  if (w.degree != 2 || w.alg_dim != g1.dim + g2.dim || w.mod_dim != r1.carrier)
    throw Error(ErrorKind::DimMismatch, "cochain shape");
  const std::size_t n1 = g1.dim, n2 = g2.dim;

  CheckReport report;
  bool rep_ok = module_check(g1, r1).all_pass() && module_check(g2, r2).all_pass();
  report.add("side_actions_are_representations", rep_ok,
             rep_ok ? "" : "a side action violates the homomorphism law");

  bool comm = true;
  std::string comm_detail;
  for (std::size_t i = 0; i < n1 && comm; ++i)
    for (std::size_t j = 0; j < n2 && comm; ++j)
      if (!(r1.rho[i] * r2.rho[j] == r2.rho[j] * r1.rho[i])) {
        comm = false;
        comm_detail = "[rho1(e" + std::to_string(i) + "), rho2(f" + std::to_string(j) + ")] != 0";
      }
  report.add("actions_commute", comm, comm_detail);

  SplitCochain parts = split_cochain(w, n1);
  Cochain w20 = detail::restrict_block(parts.w20, 0, n1);
  Cochain w02 = detail::restrict_block(parts.w02, n1, n2);

  bool c20 = ce_differential(g1, r1, w20).is_zero();
  report.add("side1_component_cocycle", c20, c20 ? "" : "d_g1 of the (2,0) part is nonzero");
  bool c02 = ce_differential(g2, r2, w02).is_zero();
  report.add("side2_component_cocycle", c02, c02 ? "" : "d_g2 of the (0,2) part is nonzero");

  // d_g1(insert_first(w11, a)) = rho2(a) o w20 for every basis a of g2.
  bool mixed1 = true;
  std::string mixed1_detail;
  for (std::size_t b = 0; b < n2 && mixed1; ++b) {
    Cochain theta = Cochain::zero(1, n1, w.mod_dim);
    for (std::size_t i = 0; i < n1; ++i) theta.at(i) = parts.w11.at(n1 + b, i);
    Cochain lhs = ce_differential(g1, r1, theta);
    Cochain rhs = Cochain::zero(2, n1, w.mod_dim);
    for (std::size_t i = 0; i < n1; ++i)
      for (std::size_t j = 0; j < n1; ++j) rhs.at(i, j) = r2.rho[b] * w20.at(i, j);
    if (!(lhs == rhs)) {
      mixed1 = false;
      mixed1_detail = "insertion of f" + std::to_string(b) + " breaks the side-1 relation";
    }
  }
  report.add("mixed_side1_relation", mixed1, mixed1_detail);

  // d_g2(insert_first(w11, x)) = rho1(x) o w02 for every basis x of g1.
  bool mixed2 = true;
  std::string mixed2_detail;
  for (std::size_t a = 0; a < n1 && mixed2; ++a) {
    Cochain theta = Cochain::zero(1, n2, w.mod_dim);
    for (std::size_t j = 0; j < n2; ++j) theta.at(j) = parts.w11.at(a, n1 + j);
    Cochain lhs = ce_differential(g2, r2, theta);
    Cochain rhs = Cochain::zero(2, n2, w.mod_dim);
    for (std::size_t i = 0; i < n2; ++i)
      for (std::size_t j = 0; j < n2; ++j) rhs.at(i, j) = r1.rho[a] * w02.at(i, j);
    if (!(lhs == rhs)) {
      mixed2 = false;
      mixed2_detail = "insertion of e" + std::to_string(a) + " breaks the side-2 relation";
    }
  }
  report.add("mixed_side2_relation", mixed2, mixed2_detail);

  // Independent route: the conjunction must agree with d w = 0 on the sum.
  LieAlgebra sum = direct_sum(g1, g2);
  LieModule sum_mod{r1.carrier, {}};
  sum_mod.rho = r1.rho;
  sum_mod.rho.insert(sum_mod.rho.end(), r2.rho.begin(), r2.rho.end());
  bool total = ce_differential(sum, sum_mod, w).is_zero();
  bool split_all = c20 && c02 && mixed1 && mixed2;
  report.add("matches_total_cocycle_test", split_all == total,
             split_all == total ? "" : "split criterion disagrees with the full differential");
  return report;
}

/// Componentwise (Hadamard) wedge on a shared carrier:
///   (t1 ^ t2)(x + a, y + b) = t1(x) .* t2(b) - t1(y) .* t2(a).
/// The inputs are 1-cochains of g1 resp. g2 with the same carrier.
inline Cochain wedge_cochain(const LieAlgebra& g1, const LieAlgebra& g2, const Cochain& t1,
                             const Cochain& t2) {
  if (t1.degree != 1 || t2.degree != 1 || t1.alg_dim != g1.dim || t2.alg_dim != g2.dim ||
      t1.mod_dim != t2.mod_dim)
    throw Error(ErrorKind::DimMismatch, "wedge inputs");
  const std::size_t n1 = g1.dim;
  Cochain out = Cochain::zero(2, g1.dim + g2.dim, t1.mod_dim);
  for (std::size_t i = 0; i < g1.dim; ++i)
    for (std::size_t j = 0; j < g2.dim; ++j) {
      Vector<Rat> v(t1.mod_dim);
      for (std::size_t s = 0; s < t1.mod_dim; ++s) v[s] = t1.at(i)[s] * t2.at(j)[s];
      out.set_pair(i, n1 + j, v);
    }
  return out;
}

/// Embeds a side degree-2 cochain into the sum indices.
inline Cochain embed_block(const Cochain& w, std::size_t offset, std::size_t total_dim) {
  if (w.degree != 2) throw Error(ErrorKind::InputError, "embed_block wants degree 2");
  Cochain out = Cochain::zero(2, total_dim, w.mod_dim);
  for (std::size_t i = 0; i < w.alg_dim; ++i)
    for (std::size_t j = 0; j < w.alg_dim; ++j) out.at(offset + i, offset + j) = w.at(i, j);
  return out;
}

/// w = w20 + t1 ^ t2 + w02 from side 1-cocycles and side 2-cocycles; each
/// cocycle precondition is verified and failure is an input error.
inline Cochain wedge_construct(const LieAlgebra& g1, const LieAlgebra& g2, const LieModule& r1,
                               const LieModule& r2, const Cochain& t1, const Cochain& t2,
                               const Cochain& w20, const Cochain& w02) {
  if (!ce_differential(g1, r1, t1).is_zero())
    throw Error(ErrorKind::InputError, "first wedge factor is not a 1-cocycle");
  if (!ce_differential(g2, r2, t2).is_zero())
    throw Error(ErrorKind::InputError, "second wedge factor is not a 1-cocycle");
  if (!ce_differential(g1, r1, w20).is_zero())
    throw Error(ErrorKind::InputError, "(2,0) part is not a 2-cocycle");
  if (!ce_differential(g2, r2, w02).is_zero())
    throw Error(ErrorKind::InputError, "(0,2) part is not a 2-cocycle");
  const std::size_t total = g1.dim + g2.dim;
  return embed_block(w20, 0, total) + wedge_cochain(g1, g2, t1, t2) +
         embed_block(w02, g1.dim, total);
}

/// Double Lie algebra with abelian core: total bracket on g1 (+) g2 (+) m
/// with the block sizes marked.
struct DoubleLieAlgebra {
  LieAlgebra total;
  std::size_t n1 = 0;
  std::size_t n2 = 0;
  std::size_t core = 0;
};

/// Extension bracket from a split 2-cocycle:
///   [x+a+u, y+b+v] = [x,y] + [a,b] + rho(x+a) v - rho(y+b) u + w(x+a, y+b).
inline DoubleLieAlgebra build_double_algebra(const LieAlgebra& g1, const LieAlgebra& g2,
                                             const LieModule& r1, const LieModule& r2,
                                             const Cochain& w) {
  CheckReport pre = split_cocycle_check(g1, g2, r1, r2, w);
  for (const auto& c : pre.checks)
    if (!c.pass)
      throw Error(ErrorKind::NotACocycle, "build_double_algebra: " + c.name +
                                              (c.detail.empty() ? "" : " (" + c.detail + ")"));
  const std::size_t n1 = g1.dim, n2 = g2.dim, m = r1.carrier;
  const std::size_t n = n1 + n2 + m;
  DoubleLieAlgebra out{LieAlgebra::abelian(n), n1, n2, m};

  auto side_index = [&](std::size_t s) { return s; };               // 0 .. n1+n2
  auto core_index = [&](std::size_t k) { return n1 + n2 + k; };

  // side x side: direct-sum bracket plus the cocycle value in the core.
  LieAlgebra sum = direct_sum(g1, g2);
  for (std::size_t i = 0; i < n1 + n2; ++i)
    for (std::size_t j = 0; j < n1 + n2; ++j) {
      Vector<Rat>& target = out.total.bracket_basis(side_index(i), side_index(j));
      const Vector<Rat>& side = sum.bracket_basis(i, j);
      for (std::size_t k = 0; k < n1 + n2; ++k) target[side_index(k)] = side[k];
      const Vector<Rat>& cocycle = w.at(i, j);
      for (std::size_t k = 0; k < m; ++k) target[core_index(k)] = cocycle[k];
    }
  // side x core: the module action, extended by zero across the other side.
  for (std::size_t i = 0; i < n1 + n2; ++i) {
    const Matrix<Rat>& act = i < n1 ? r1.rho[i] : r2.rho[i - n1];
    for (std::size_t k = 0; k < m; ++k)
      for (std::size_t l = 0; l < m; ++l) {
        out.total.bracket_basis(side_index(i), core_index(k))[core_index(l)] = act(l, k);
        out.total.bracket_basis(core_index(k), side_index(i))[core_index(l)] = -act(l, k);
      }
  }
  // core x core stays zero: the core is abelian.
  return out;
}

/// Structural invariants of a built double Lie algebra: total Jacobi, the
/// core an abelian ideal, and the projection onto g1 (+) g2 a homomorphism.
inline CheckReport dla_verify(const DoubleLieAlgebra& d, const LieAlgebra& g1,
                              const LieAlgebra& g2) {
  CheckReport report = jacobi_check(d.total);
  const std::size_t side = d.n1 + d.n2, n = d.total.dim;

  bool abelian = true;
  for (std::size_t i = side; i < n && abelian; ++i)
    for (std::size_t j = side; j < n && abelian; ++j)
      abelian = d.total.bracket_basis(i, j).is_zero();
  report.add("core_abelian", abelian, "");

  bool ideal = true;
  std::string ideal_detail;
  for (std::size_t i = 0; i < n && ideal; ++i)
    for (std::size_t j = side; j < n && ideal; ++j) {
      const Vector<Rat>& br = d.total.bracket_basis(i, j);
      for (std::size_t k = 0; k < side; ++k)
        if (!(br[k] == Rat(0))) {
          ideal = false;
          ideal_detail = "[e" + std::to_string(i) + ", core] leaves the core";
          break;
        }
    }
  report.add("core_ideal", ideal, ideal_detail);

  LieAlgebra sum = direct_sum(g1, g2);
  bool quo = sum.dim == side;
  std::string quo_detail = quo ? "" : "side dimensions disagree";
  for (std::size_t i = 0; i < side && quo; ++i)
    for (std::size_t j = 0; j < side && quo; ++j) {
      const Vector<Rat>& br = d.total.bracket_basis(i, j);
      for (std::size_t k = 0; k < side; ++k)
        if (!(br[k] == sum.bracket_basis(i, j)[k])) {
          quo = false;
          quo_detail = "projection of [e" + std::to_string(i) + ",e" + std::to_string(j) +
                       "] differs from the quotient bracket";
          break;
        }
    }
  report.add("quotient_homomorphism", quo, quo_detail);
  return report;
}

} // namespace dvb

#endif
