#ifndef DVB_BUNDLES_HPP
#define DVB_BUNDLES_HPP

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dvb/dlg.hpp"
#include "dvb/duality.hpp"
#include "dvb/report.hpp"

namespace dvb {

/// Combinatorial nerve of a finite cover: chart indices, overlap pairs closed
/// under reversal, and the triples on which the cocycle condition is imposed.
/// The pair (i, i) is implicit and always carries the identity transition.
struct CoverGraph {
  std::size_t chart_count = 0;
  std::vector<std::pair<std::size_t, std::size_t>> overlaps;
  std::vector<std::array<std::size_t, 3>> triples;

  bool has_overlap(std::size_t i, std::size_t j) const {
    if (i == j) return i < chart_count;
    for (const auto& [a, b] : overlaps)
      if (a == i && b == j) return true;
    return false;
  }

  void require_valid() const {
    for (const auto& [a, b] : overlaps) {
      if (a >= chart_count || b >= chart_count)
        throw Error(ErrorKind::InputError, "overlap chart index out of range");
      if (a == b) throw Error(ErrorKind::InputError, "overlap pairs must join distinct charts");
      if (!has_overlap(b, a))
        throw Error(ErrorKind::InputError, "overlaps not closed under reversal: (" +
                                               std::to_string(a) + "," + std::to_string(b) + ")");
    }
    for (const auto& t : triples) {
      for (std::size_t c : t)
        if (c >= chart_count) throw Error(ErrorKind::InputError, "triple chart index out of range");
      if (!has_overlap(t[0], t[1]) || !has_overlap(t[1], t[2]) || !has_overlap(t[0], t[2]))
        throw Error(ErrorKind::InputError, "triple without all three pairwise overlaps");
    }
  }

  /// Sorted overlap neighbours of chart i.
  std::vector<std::size_t> neighbors(std::size_t i) const {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < chart_count; ++j)
      if (j != i && has_overlap(i, j)) out.push_back(j);
    return out;
  }

  /// Shortest overlap path from i to j (inclusive of both ends). BFS visits
  /// neighbours in increasing index, so ties resolve to the lowest chart
  /// indices; nullopt when unreachable.
  std::optional<std::vector<std::size_t>> shortest_path(std::size_t i, std::size_t j) const {
    if (i >= chart_count || j >= chart_count) return std::nullopt;
    std::vector<std::size_t> parent(chart_count, chart_count);
    std::vector<std::size_t> queue{i};
    parent[i] = i;
    for (std::size_t head = 0; head < queue.size() && parent[j] == chart_count; ++head)
      for (std::size_t n : neighbors(queue[head]))
        if (parent[n] == chart_count) {
          parent[n] = queue[head];
          queue.push_back(n);
        }
    if (parent[j] == chart_count) return std::nullopt;
    std::vector<std::size_t> path{j};
    while (path.back() != i) path.push_back(parent[path.back()]);
    return std::vector<std::size_t>(path.rbegin(), path.rend());
  }

  bool is_connected() const {
    if (chart_count == 0) return true;
    std::size_t reached = 0;
    for (std::size_t j = 0; j < chart_count; ++j)
      if (shortest_path(0, j)) ++reached;
    return reached == chart_count;
  }
};

/// Transition data of a principal bundle over the cover nerve: one group
/// element per ordered overlap, with the cocycle invariants checked by
/// cocycle_verify rather than enforced on construction.
template <typename S>
struct PrincipalCocycle {
  CoverGraph cover;
  DlgSpec<S> group;
  std::map<std::pair<std::size_t, std::size_t>, DvsAut<S>> g;

  /// Transition moving chart-i values into chart j, identity on the diagonal.
  DvsAut<S> transition(std::size_t j, std::size_t i) const {
    if (j == i) return group.identity();
    if (!cover.has_overlap(j, i))
      throw Error(ErrorKind::NoOverlap,
                  "charts " + std::to_string(j) + " and " + std::to_string(i) + " do not overlap");
    auto it = g.find({j, i});
    if (it == g.end())
      throw Error(ErrorKind::InputError, "missing transition (" + std::to_string(j) + "," +
                                             std::to_string(i) + ")");
    return it->second;
  }
};

/// Fills in every reversed overlap that has no stored transition with the
/// group inverse of the stored one.
template <typename S>
void symmetrize_transitions(PrincipalCocycle<S>& pc) {
  for (const auto& [a, b] : pc.cover.overlaps) {
    auto key = std::make_pair(a, b);
    auto rev = std::make_pair(b, a);
    if (!pc.g.count(key) && pc.g.count(rev)) pc.g.emplace(key, pc.group.invert(pc.g.at(rev)));
  }
}

/// Element of the associated bundle, written in one chart. Two writings are
/// identified by (i, v) ~ (j, rho(g(j,i)) v).
template <typename S>
struct AssocElement {
  std::size_t chart = 0;
  DvsElement<S> value;

  friend bool operator==(const AssocElement&, const AssocElement&) = default;

  std::string to_string() const {
    return "[" + std::to_string(chart) + ", " + value.to_string() + "]";
  }
};

/// Fiber representation of the structure group: either the defining action on
/// R^[n] or its I-dual contragredient. Blocks rho1/rho2/rho0 give the induced
/// side and core representations.
enum class RepKind { Defining, Dual };

template <typename S>
struct RepSpec {
  RepKind kind = RepKind::Defining;
  Dims dims; // dims of the group quadruples

  Dims fiber_dims() const { return kind == RepKind::Dual ? dual_dims(dims) : dims; }

  DvsAut<S> rho(const DvsAut<S>& a) const { return kind == RepKind::Dual ? dual_rep(a) : a; }
  Matrix<S> rho1(const DvsAut<S>& a) const { return rho(a).a1; }
  Matrix<S> rho2(const DvsAut<S>& a) const { return rho(a).a2; }
  Matrix<S> rho0(const DvsAut<S>& a) const { return rho(a).a0; }

  DvsElement<S> apply(const DvsAut<S>& a, const DvsElement<S>& v) const {
    return aut_apply(rho(a), v);
  }
};

/// The I-dual associated bundle: same cocycle, contragredient fibers.
template <typename S>
RepSpec<S> dual_bundle(const PrincipalCocycle<S>&, const RepSpec<S>& rep) {
  return {rep.kind == RepKind::Defining ? RepKind::Dual : RepKind::Defining, rep.dims};
}

/// Checks the Cech cocycle laws: membership in the structure group,
/// g(j,i) = g(i,j)^-1 on every overlap, and g(i,j) g(j,k) = g(i,k) on every
/// listed triple. Exact; first counterexample reported per check.
template <typename S>
CheckReport cocycle_verify(const PrincipalCocycle<S>& pc) {
  pc.cover.require_valid();
  CheckReport report;
  const DvsAut<S> e = pc.group.identity();

  bool member = true;
  std::string member_detail;
  for (const auto& [key, val] : pc.g)
    if (member && !pc.group.contains(val)) {
      member = false;
      member_detail = "transition (" + std::to_string(key.first) + "," +
                      std::to_string(key.second) + ") outside " + pc.group.name();
    }
  report.add("group_membership", member, member_detail);

  // The group laws below compose in the ambient automorphism group, so they
  // stay meaningful (and reportable) even when membership fails.
  bool sym = true;
  std::string sym_detail;
  for (const auto& [a, b] : pc.cover.overlaps) {
    if (!sym) break;
    if (!(aut_compose(pc.transition(a, b), pc.transition(b, a)) == e)) {
      sym = false;
      sym_detail = "g(" + std::to_string(a) + "," + std::to_string(b) + ") not inverse to g(" +
                   std::to_string(b) + "," + std::to_string(a) + ")";
    }
  }
  report.add("inverse_symmetry", sym, sym_detail);

  bool tri = true;
  std::string tri_detail;
  for (const auto& t : pc.cover.triples) {
    if (!tri) break;
    if (!(aut_compose(pc.transition(t[0], t[1]), pc.transition(t[1], t[2])) ==
          pc.transition(t[0], t[2]))) {
      tri = false;
      tri_detail = "triple (" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
                   std::to_string(t[2]) + ")";
    }
  }
  report.add("triple_condition", tri, tri_detail);
  return report;
}

/// Cocycle laws plus the double-group content: the side projections of the
/// transitions form cocycles themselves (the two quotient bundles), and a
/// flag records whether all transitions take values in the core subgroup.
template <typename S>
CheckReport dpb_cocycle_verify(const PrincipalCocycle<S>& pc) {
  CheckReport report = cocycle_verify(pc);

  auto projected = [&pc](int side) {
    for (const auto& [a, b] : pc.cover.overlaps) {
      auto fwd = pc.group.phi(pc.transition(a, b));
      auto bwd = pc.group.phi(pc.transition(b, a));
      const Matrix<S>&f = side == 1 ? fwd.first : fwd.second, &g = side == 1 ? bwd.first : bwd.second;
      if (!(f * g).is_identity()) return std::string("overlap (") + std::to_string(a) + "," +
                                         std::to_string(b) + ") projection not symmetric";
    }
    for (const auto& t : pc.cover.triples) {
      auto ij = pc.group.phi(pc.transition(t[0], t[1]));
      auto jk = pc.group.phi(pc.transition(t[1], t[2]));
      auto ik = pc.group.phi(pc.transition(t[0], t[2]));
      const Matrix<S>&a = side == 1 ? ij.first : ij.second, &b = side == 1 ? jk.first : jk.second,
                     &c = side == 1 ? ik.first : ik.second;
      if (!(a * b == c)) return std::string("triple (") + std::to_string(t[0]) + "," +
                                std::to_string(t[1]) + "," + std::to_string(t[2]) + ")";
    }
    return std::string();
  };
  std::string d1 = projected(1), d2 = projected(2);
  report.add("side1_projected_cocycle", d1.empty(), d1);
  report.add("side2_projected_cocycle", d2.empty(), d2);

  bool core = true;
  for (const auto& [key, val] : pc.g) core = core && pc.group.in_core(val);
  report.add("core_valued_flag", true,
             core ? "all transitions core-valued" : "transitions not all core-valued");
  return report;
}

/// Moves an associated element along a chart path. Each step multiplies by
/// rho(g(next, current)); an empty path returns the element unchanged.
template <typename S>
AssocElement<S> transport(const PrincipalCocycle<S>& pc, const RepSpec<S>& rep, AssocElement<S> e,
                          const std::vector<std::size_t>& path) {
  if (path.empty()) return e;
  if (path.front() != e.chart)
    throw Error(ErrorKind::InputError, "transport path must start at the element's chart");
  for (std::size_t step = 0; step + 1 < path.size(); ++step) {
    e.value = rep.apply(pc.transition(path[step + 1], path[step]), e.value);
    e.chart = path[step + 1];
  }
  return e;
}

/// Transport along the BFS-shortest overlap path to the target chart.
template <typename S>
AssocElement<S> transport_to(const PrincipalCocycle<S>& pc, const RepSpec<S>& rep,
                             const AssocElement<S>& e, std::size_t target) {
  auto path = pc.cover.shortest_path(e.chart, target);
  if (!path)
    throw Error(ErrorKind::NoOverlap, "chart " + std::to_string(target) +
                                          " unreachable from chart " + std::to_string(e.chart));
  return transport(pc, rep, e, *path);
}

/// Fiberwise addition of associated elements: the second operand is moved to
/// the first operand's chart, then added there. Chart-independent by the
/// cocycle laws, so the chart choice is bookkeeping only.
template <typename S>
AssocElement<S> assoc_fiber_add(const PrincipalCocycle<S>& pc, const RepSpec<S>& rep, Side side,
                                const AssocElement<S>& e1, const AssocElement<S>& e2) {
  AssocElement<S> moved = transport_to(pc, rep, e2, e1.chart);
  return {e1.chart, dvs_add(side, e1.value, moved.value)};
}

template <typename S>
AssocElement<S> assoc_fiber_scale(Side side, const S& r, const AssocElement<S>& e) {
  return {e.chart, dvs_scale(side, r, e.value)};
}

/// Pairs an associated element of the defining bundle with one of the dual
/// bundle: the dual element is moved to the primal element's chart and the
/// fiberwise pairing applied there. Chart-independent.
template <typename S>
S assoc_pairing(const PrincipalCocycle<S>& pc, const RepSpec<S>& dual_rep_spec,
                const AssocElement<S>& v, const AssocElement<S>& w, double base_tol = 0.0) {
  AssocElement<S> moved = transport_to(pc, dual_rep_spec, w, v.chart);
  return pairing(v.value, moved.value, base_tol);
}

/// Per-chart section data of the associated bundle over its side-II base:
/// either linear sections y -> (b, y, A y) or core sections y -> (0, y, t).
enum class SectionKind { Linear, Core };

template <typename S>
struct BundleSection {
  SectionKind kind = SectionKind::Linear;
  std::vector<LinearSection<S>> linear; // one per chart when kind == Linear
  std::vector<CoreSection<S>> core;     // one per chart when kind == Core
};

template <typename S>
BundleSection<S> linear_bundle_section(std::vector<LinearSection<S>> per_chart) {
  return {SectionKind::Linear, std::move(per_chart), {}};
}

template <typename S>
BundleSection<S> core_bundle_section(std::vector<CoreSection<S>> per_chart) {
  return {SectionKind::Core, {}, std::move(per_chart)};
}

/// Pushforward of chart-i section data into chart j along h = rho(g(j,i)):
/// the unique section with s_j = h o s_i o (h.a2)^-1 on the shared fiber.
template <typename S>
LinearSection<S> section_pushforward(const DvsAut<S>& h, const LinearSection<S>& s) {
  Matrix<S> a2i = inverse(h.a2);
  return {h.a1 * s.base, (h.a0 * s.slope + h.mu.left_contract(s.base)) * a2i};
}

template <typename S>
CoreSection<S> section_pushforward(const DvsAut<S>& h, const CoreSection<S>& s) {
  return {h.a0 * s.value};
}

/// Checks overlap compatibility of per-chart section data: on every ordered
/// overlap the chart-j data must equal the pushforward of the chart-i data.
template <typename S>
CheckReport section_check(const PrincipalCocycle<S>& pc, const RepSpec<S>& rep,
                          const BundleSection<S>& s) {
  pc.cover.require_valid();
  const std::size_t n = pc.cover.chart_count;
  const bool linear = s.kind == SectionKind::Linear;
  if ((linear ? s.linear.size() : s.core.size()) != n)
    throw Error(ErrorKind::InputError, "section data must cover all charts");

  CheckReport report;
  bool ok = true;
  std::string detail;
  for (const auto& [j, i] : pc.cover.overlaps) {
    if (!ok) break;
    DvsAut<S> h = rep.rho(pc.transition(j, i));
    bool match = linear ? section_pushforward(h, s.linear[i]) == s.linear[j]
                        : section_pushforward(h, s.core[i]) == s.core[j];
    if (!match) {
      ok = false;
      detail = "section on chart " + std::to_string(j) +
               " differs from the pushforward from chart " + std::to_string(i);
    }
  }
  report.add("section_compat", ok, detail);
  return report;
}

} // namespace dvb

#endif
