#ifndef DVB_CONNECTIONS_HPP
#define DVB_CONNECTIONS_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "dvb/derivation.hpp"
#include "dvb/dla.hpp"

namespace dvb {

/// Exact row reduction; returns an echelon basis with zero rows dropped.
inline std::vector<Vector<Rat>> row_reduce(std::vector<Vector<Rat>> rows) {
  if (rows.empty()) return rows;
  const std::size_t cols = rows[0].size();
  std::size_t lead = 0;
  for (std::size_t col = 0; col < cols && lead < rows.size(); ++col) {
    std::size_t pivot = lead;
    while (pivot < rows.size() && rows[pivot][col] == Rat(0)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[lead], rows[pivot]);
    Rat inv = Rat(1) / rows[lead][col];
    rows[lead] = inv * rows[lead];
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != lead && !(rows[r][col] == Rat(0))) rows[r] = rows[r] - rows[r][col] * rows[lead];
    ++lead;
  }
  rows.resize(lead);
  return rows;
}

inline std::size_t rank_of(const std::vector<Vector<Rat>>& rows) {
  return row_reduce(rows).size();
}

/// Subspace of a fixed ambient coordinate space, stored as a reduced basis.
struct SubspaceSpec {
  std::size_t ambient = 0;
  std::vector<Vector<Rat>> basis;

  std::size_t dim() const { return basis.size(); }
};

inline SubspaceSpec make_subspace(std::size_t ambient, std::vector<Vector<Rat>> span) {
  for (const auto& v : span)
    if (v.size() != ambient)
      throw Error(ErrorKind::DimMismatch, "spanning vector length vs ambient dimension");
  return {ambient, row_reduce(std::move(span))};
}

/// H and K are complements in the ambient space: trivial intersection and
/// spanning sum, both decided by exact rank arithmetic.
inline CheckReport complement_check(const SubspaceSpec& h, const SubspaceSpec& k) {
  if (h.ambient != k.ambient)
    throw Error(ErrorKind::DimMismatch, "complement_check subspaces of different ambients");
  std::vector<Vector<Rat>> joint = h.basis;
  joint.insert(joint.end(), k.basis.begin(), k.basis.end());
  const std::size_t joint_rank = rank_of(joint);

  CheckReport report;
  const std::size_t meet = h.dim() + k.dim() - joint_rank;
  report.add("trivial_intersection", meet == 0,
             meet == 0 ? "" : "intersection has dimension " + std::to_string(meet));
  report.add("spanning_sum", joint_rank == h.ambient,
             joint_rank == h.ambient
                 ? ""
                 : "sum spans " + std::to_string(joint_rank) + " of " +
                       std::to_string(h.ambient) + " dimensions");
  return report;
}

/// Marked subspaces of a double Lie algebra in its [side1 | side2 | core]
/// coordinates: k1 kills the side-1 block, k2 the side-2 block.
inline SubspaceSpec dla_subspace_k1(const DoubleLieAlgebra& d) {
  SubspaceSpec s{d.total.dim, {}};
  for (std::size_t i = d.n1; i < d.total.dim; ++i)
    s.basis.push_back(Vector<Rat>::unit(d.total.dim, i));
  return s;
}

inline SubspaceSpec dla_subspace_k2(const DoubleLieAlgebra& d) {
  SubspaceSpec s{d.total.dim, {}};
  for (std::size_t i = 0; i < d.n1; ++i) s.basis.push_back(Vector<Rat>::unit(d.total.dim, i));
  for (std::size_t i = d.n1 + d.n2; i < d.total.dim; ++i)
    s.basis.push_back(Vector<Rat>::unit(d.total.dim, i));
  return s;
}

inline SubspaceSpec dla_subspace_core(const DoubleLieAlgebra& d) {
  SubspaceSpec s{d.total.dim, {}};
  for (std::size_t i = d.n1 + d.n2; i < d.total.dim; ++i)
    s.basis.push_back(Vector<Rat>::unit(d.total.dim, i));
  return s;
}

/// Connection test for a pair of horizontal subspaces: each must complement
/// its side kernel (precondition), and then the pair qualifies exactly when
/// H1 and H2 meet trivially.
inline CheckReport dlg_connection_check(const DoubleLieAlgebra& d, const SubspaceSpec& h1,
                                        const SubspaceSpec& h2) {
  if (h1.ambient != d.total.dim || h2.ambient != d.total.dim)
    throw Error(ErrorKind::DimMismatch, "horizontal subspaces vs algebra dimension");
  CheckReport c1 = complement_check(h1, dla_subspace_k1(d));
  if (!c1.all_pass())
    throw Error(ErrorKind::PreconditionFailed, "H1 is not a complement of k1");
  CheckReport c2 = complement_check(h2, dla_subspace_k2(d));
  if (!c2.all_pass())
    throw Error(ErrorKind::PreconditionFailed, "H2 is not a complement of k2");

  CheckReport report;
  report.add("side1_complement", true);
  report.add("side2_complement", true);
  std::vector<Vector<Rat>> joint = h1.basis;
  joint.insert(joint.end(), h2.basis.begin(), h2.basis.end());
  const std::size_t meet = h1.dim() + h2.dim() - rank_of(joint);
  report.add("trivial_pair_intersection", meet == 0,
             meet == 0 ? "" : "H1 and H2 share a subspace of dimension " + std::to_string(meet));
  return report;
}

/// Linear section of the quotient onto the side sum, as a matrix from side
/// coordinates into total coordinates. The quotient composed with the map
/// must restrict to an invertible map of each side factor separately; a
/// factor-mixing or degenerate top block is not a section of the double
/// quotient in any side-preserving basis.
struct SplittingMap {
  Matrix<Rat> map; // total rows, n1 + n2 columns
};

inline SplittingMap canonical_splitting(const DoubleLieAlgebra& d) {
  Matrix<Rat> m(d.total.dim, d.n1 + d.n2);
  for (std::size_t i = 0; i < d.n1 + d.n2; ++i) m(i, i) = Rat(1);
  return {m};
}

inline void require_section(const DoubleLieAlgebra& d, const SplittingMap& s) {
  const std::size_t side = d.n1 + d.n2;
  if (s.map.rows() != d.total.dim || s.map.cols() != side)
    throw Error(ErrorKind::NotASection, "splitting matrix shape vs algebra layout");
  for (std::size_t i = 0; i < d.n1; ++i)
    for (std::size_t j = d.n1; j < side; ++j)
      if (!(s.map(i, j) == Rat(0)) || !(s.map(j, i) == Rat(0)))
        throw Error(ErrorKind::NotASection, "section mixes the side factors");
  std::vector<Vector<Rat>> block1, block2;
  for (std::size_t i = 0; i < d.n1; ++i) {
    Vector<Rat> row(d.n1);
    for (std::size_t j = 0; j < d.n1; ++j) row[j] = s.map(i, j);
    block1.push_back(row);
  }
  for (std::size_t i = d.n1; i < side; ++i) {
    Vector<Rat> row(d.n2);
    for (std::size_t j = d.n1; j < side; ++j) row[j - d.n1] = s.map(i, j);
    block2.push_back(row);
  }
  if (rank_of(block1) != d.n1 || rank_of(block2) != d.n2)
    throw Error(ErrorKind::NotASection, "quotient of the section is singular on a side factor");
}

/// Bracket conditions for a splitting to define a connection: the core must
/// commute with the whole image of s, and the two side images must commute
/// with each other. The core condition alone is the core-connection clause.
inline CheckReport splitting_connection_check(const DoubleLieAlgebra& d, const SplittingMap& s) {
  require_section(d, s);
  const std::size_t side = d.n1 + d.n2;
  auto column = [&](std::size_t j) {
    Vector<Rat> v(d.total.dim);
    for (std::size_t i = 0; i < d.total.dim; ++i) v[i] = s.map(i, j);
    return v;
  };

  CheckReport report;
  bool core_ok = true;
  std::string core_detail;
  for (std::size_t k = 0; k < d.core && core_ok; ++k)
    for (std::size_t j = 0; j < side && core_ok; ++j) {
      Vector<Rat> br = d.total.bracket(Vector<Rat>::unit(d.total.dim, side + k), column(j));
      if (!br.is_zero()) {
        core_ok = false;
        core_detail = "[core basis " + std::to_string(k) + ", s(side basis " + std::to_string(j) +
                      ")] = " + br.to_string();
      }
    }
  report.add("core_bracket_condition", core_ok, core_detail);

  bool sides_ok = true;
  std::string sides_detail;
  for (std::size_t i = 0; i < d.n1 && sides_ok; ++i)
    for (std::size_t j = d.n1; j < side && sides_ok; ++j) {
      Vector<Rat> br = d.total.bracket(column(i), column(j));
      if (!br.is_zero()) {
        sides_ok = false;
        sides_detail = "[s(side basis " + std::to_string(i) + "), s(side basis " +
                       std::to_string(j) + ")] = " + br.to_string();
      }
    }
  report.add("side_bracket_condition", sides_ok, sides_detail);

  report.add("core_connection", core_ok, core_ok ? "" : core_detail);
  report.add("full_connection", core_ok && sides_ok, "");
  return report;
}

/// Coordinates for infinitesimal automorphisms: row-major A1, A2, A0 blocks
/// followed by the twist coefficients in (core, side1, side2) order.
inline std::size_t der_coordinate_count(const Dims& d) {
  return d.n1 * d.n1 + d.n2 * d.n2 + d.n0 * d.n0 + d.n0 * d.n1 * d.n2;
}

inline Vector<Rat> flatten_der(const DvsDer<Rat>& x) {
  const Dims d = x.dims();
  Vector<Rat> out(der_coordinate_count(d));
  std::size_t t = 0;
  for (std::size_t i = 0; i < d.n1; ++i)
    for (std::size_t j = 0; j < d.n1; ++j) out[t++] = x.A1(i, j);
  for (std::size_t i = 0; i < d.n2; ++i)
    for (std::size_t j = 0; j < d.n2; ++j) out[t++] = x.A2(i, j);
  for (std::size_t i = 0; i < d.n0; ++i)
    for (std::size_t j = 0; j < d.n0; ++j) out[t++] = x.A0(i, j);
  for (std::size_t k = 0; k < d.n0; ++k)
    for (std::size_t i = 0; i < d.n1; ++i)
      for (std::size_t j = 0; j < d.n2; ++j) out[t++] = x.alpha.coeff(k, i, j);
  return out;
}

inline DvsDer<Rat> unflatten_der(const Dims& d, const Vector<Rat>& v) {
  if (v.size() != der_coordinate_count(d))
    throw Error(ErrorKind::DimMismatch, "derivation coordinate length");
  DvsDer<Rat> x = der_zero<Rat>(d);
  std::size_t t = 0;
  for (std::size_t i = 0; i < d.n1; ++i)
    for (std::size_t j = 0; j < d.n1; ++j) x.A1(i, j) = v[t++];
  for (std::size_t i = 0; i < d.n2; ++i)
    for (std::size_t j = 0; j < d.n2; ++j) x.A2(i, j) = v[t++];
  for (std::size_t i = 0; i < d.n0; ++i)
    for (std::size_t j = 0; j < d.n0; ++j) x.A0(i, j) = v[t++];
  for (std::size_t k = 0; k < d.n0; ++k)
    for (std::size_t i = 0; i < d.n1; ++i)
      for (std::size_t j = 0; j < d.n2; ++j) x.alpha.coeff(k, i, j) = v[t++];
  return x;
}

/// The automorphism Lie algebra of R^[d] as explicit structure constants,
/// evaluated pairwise with der_bracket. Side blocks are the two gl factors;
/// everything killed by both side projections (A0 and the twist) is the
/// core, which here is not abelian.
inline DoubleLieAlgebra aut_algebra_model(const Dims& d) {
  const std::size_t n = der_coordinate_count(d);
  DoubleLieAlgebra out{LieAlgebra::abelian(n), d.n1 * d.n1, d.n2 * d.n2,
                       d.n0 * d.n0 + d.n0 * d.n1 * d.n2};
  std::vector<DvsDer<Rat>> basis;
  basis.reserve(n);
  for (std::size_t i = 0; i < n; ++i) basis.push_back(unflatten_der(d, Vector<Rat>::unit(n, i)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out.total.bracket_basis(i, j) = flatten_der(der_bracket(basis[i], basis[j]));
  return out;
}

/// The trivial-product model: the abelian double Lie algebra on g1+g2+core
/// coordinates with every bracket zero.
inline DoubleLieAlgebra abelian_product_model(std::size_t n1, std::size_t n2, std::size_t core) {
  return {LieAlgebra::abelian(n1 + n2 + core), n1, n2, core};
}

} // namespace dvb

#endif
