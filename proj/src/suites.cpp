#include "dvb/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "dvb/bundles.hpp"
#include "dvb/connections.hpp"
#include "dvb/derivation.hpp"
#include "dvb/dla.hpp"
#include "dvb/duality.hpp"
#include "dvb/frames.hpp"
#include "dvb/jsonio.hpp"
#include "dvb/rng.hpp"

namespace dvb {

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
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

template <typename S>
DvsElement<S> random_element(Rng& rng, const Dims& d) {
  return {random_vector<S>(rng, d.n1), random_vector<S>(rng, d.n2), random_vector<S>(rng, d.n0)};
}

template <typename S>
DvsDer<S> random_der(Rng& rng, const Dims& d) {
  return {random_matrix<S>(rng, d.n1, d.n1), random_matrix<S>(rng, d.n2, d.n2),
          random_matrix<S>(rng, d.n0, d.n0), random_bilinear<S>(rng, d)};
}

/// Collects properties; each property draws its trials from an independent,
/// name-keyed deterministic stream so that report content depends only on
/// (fixture, seed, trials).
struct PropertySet {
  std::uint64_t trials;
  std::uint64_t seed;
  std::vector<PropertyResult> results;

  template <typename F>
  void property(const std::string& name, F&& trial) {
    PropertyResult r{name, true, ""};
    const std::uint64_t stream = seed ^ fnv1a(name);
    for (std::uint64_t t = 0; t < trials; ++t) {
      Rng rng = Rng::for_trial(stream, t);
      std::string note;
      if (!trial(rng, note)) {
        r.pass = false;
        r.counterexample = "trial " + std::to_string(t) + (note.empty() ? "" : ": " + note);
        break;
      }
    }
    results.push_back(std::move(r));
  }

  /// One-shot check evaluated outside the trial loop.
  void single(const std::string& name, bool pass, const std::string& note) {
    results.push_back({name, pass, pass ? "" : note});
  }
};

void run_aut_suite(const SuiteConfig& cfg, PropertySet& ps) {
  const Dims d = cfg.dims;
  ps.property("action_compose", [&](Rng& rng, std::string& note) {
    DvsAut<Rat> a = random_aut<Rat>(rng, d), b = random_aut<Rat>(rng, d);
    DvsElement<Rat> v = random_element<Rat>(rng, d);
    bool ok = aut_apply(aut_compose(a, b), v) == aut_apply(a, aut_apply(b, v));
    if (!ok) note = "a=" + a.to_string() + " b=" + b.to_string() + " v=" + v.to_string();
    return ok;
  });
  ps.property("action_identity", [&](Rng& rng, std::string& note) {
    DvsElement<Rat> v = random_element<Rat>(rng, d);
    bool ok = aut_apply(aut_identity<Rat>(d), v) == v;
    if (!ok) note = "v=" + v.to_string();
    return ok;
  });
  ps.property("group_associativity", [&](Rng& rng, std::string& note) {
    DvsAut<Rat> a = random_aut<Rat>(rng, d), b = random_aut<Rat>(rng, d),
                c = random_aut<Rat>(rng, d);
    bool ok = aut_compose(aut_compose(a, b), c) == aut_compose(a, aut_compose(b, c));
    if (!ok) note = "a=" + a.to_string() + " b=" + b.to_string() + " c=" + c.to_string();
    return ok;
  });
  ps.property("group_identity", [&](Rng& rng, std::string& note) {
    DvsAut<Rat> a = random_aut<Rat>(rng, d);
    DvsAut<Rat> e = aut_identity<Rat>(d);
    bool ok = aut_compose(a, e) == a && aut_compose(e, a) == a;
    if (!ok) note = "a=" + a.to_string();
    return ok;
  });
  ps.property("group_inverse_round_trip", [&](Rng& rng, std::string& note) {
    DvsAut<Rat> a = random_aut<Rat>(rng, d);
    DvsAut<Rat> e = aut_identity<Rat>(d);
    bool ok = aut_compose(a, aut_inverse(a)) == e && aut_compose(aut_inverse(a), a) == e;
    if (!ok) note = "a=" + a.to_string();
    return ok;
  });
  ps.property("interchange_law", [&](Rng& rng, std::string& note) {
    DvsElement<Rat> u = random_element<Rat>(rng, d), v = random_element<Rat>(rng, d);
    DvsElement<Rat> w = random_element<Rat>(rng, d), s = random_element<Rat>(rng, d);
    v.x = u.x;
    s.x = w.x;
    w.y = u.y;
    s.y = v.y;
    DvsElement<Rat> lhs = dvs_add(Side::II, dvs_add(Side::I, u, v), dvs_add(Side::I, w, s));
    DvsElement<Rat> rhs = dvs_add(Side::I, dvs_add(Side::II, u, w), dvs_add(Side::II, v, s));
    bool ok = lhs == rhs;
    if (!ok) note = "u=" + u.to_string() + " v=" + v.to_string();
    return ok;
  });
}

void run_dual_suite(const SuiteConfig& cfg, PropertySet& ps) {
  const Dims d = cfg.dims;
  ps.property("dual_rep_multiplicative", [&](Rng& rng, std::string& note) {
    DvsAut<Rat> g = random_aut<Rat>(rng, d), h = random_aut<Rat>(rng, d);
    bool ok = dual_rep(aut_compose(g, h)) == aut_compose(dual_rep(g), dual_rep(h));
    if (!ok) note = "g=" + g.to_string() + " h=" + h.to_string();
    return ok;
  });
  ps.property("f_anti_multiplicative", [&](Rng& rng, std::string& note) {
    DvsAut<Rat> a = random_aut<Rat>(rng, d), b = random_aut<Rat>(rng, d);
    bool ok = f_dual(aut_compose(a, b)) == aut_compose(f_dual(b), f_dual(a));
    if (!ok) note = "a=" + a.to_string() + " b=" + b.to_string();
    return ok;
  });
  ps.property("f_identity", [&](Rng&, std::string& note) {
    bool ok = f_dual(aut_identity<Rat>(d)) == aut_identity<Rat>(dual_dims(d));
    if (!ok) note = "f(e) != e";
    return ok;
  });
  ps.property("f_inverse_compatible", [&](Rng& rng, std::string& note) {
    DvsAut<Rat> a = random_aut<Rat>(rng, d);
    bool ok = f_dual(aut_inverse(a)) == aut_inverse(f_dual(a));
    if (!ok) note = "a=" + a.to_string();
    return ok;
  });
  ps.property("f_involutive", [&](Rng& rng, std::string& note) {
    DvsAut<Rat> a = random_aut<Rat>(rng, d);
    bool ok = f_dual(f_dual(a)) == a;
    if (!ok) note = "a=" + a.to_string();
    return ok;
  });
  ps.property("pairing_invariance", [&](Rng& rng, std::string& note) {
    DvsAut<Rat> g = random_aut<Rat>(rng, d);
    DvsElement<Rat> v = random_element<Rat>(rng, d);
    DvsElement<Rat> w = random_element<Rat>(rng, dual_dims(d));
    w.x = v.x;
    Rat before = pairing(v, w);
    Rat after = pairing(aut_apply(g, v), aut_apply(dual_rep(g), w));
    bool ok = before == after;
    if (!ok) note = "g=" + g.to_string() + " v=" + v.to_string() + " w=" + w.to_string();
    return ok;
  });
}

void run_frames_suite(const SuiteConfig& cfg, PropertySet& ps) {
  const Dims d = cfg.dims;
  auto random_frame = [&](Rng& rng) {
    return Frame<Rat>{random_invertible<Rat>(rng, d.n1), random_invertible<Rat>(rng, d.n2),
                      random_invertible<Rat>(rng, d.n0), random_bilinear<Rat>(rng, d)};
  };
  ps.property("action_compatible", [&](Rng& rng, std::string& note) {
    Frame<Rat> f = random_frame(rng);
    DvsAut<Rat> a = random_aut<Rat>(rng, d), b = random_aut<Rat>(rng, d);
    bool ok = frame_act(frame_act(f, a), b) == frame_act(f, aut_compose(a, b));
    if (!ok) note = "f=" + f.to_string() + " a=" + a.to_string() + " b=" + b.to_string();
    return ok;
  });
  ps.property("action_well_defined", [&](Rng& rng, std::string& note) {
    Frame<Rat> f = random_frame(rng);
    DvsAut<Rat> a = random_aut<Rat>(rng, d);
    DvsElement<Rat> xi = random_element<Rat>(rng, d);
    bool ok = frame_eval(frame_act(f, a), xi) == frame_eval(f, aut_apply(a, xi));
    if (!ok) note = "f=" + f.to_string() + " a=" + a.to_string() + " xi=" + xi.to_string();
    return ok;
  });
  ps.property("eval_matches_quadruple", [&](Rng& rng, std::string& note) {
    Frame<Rat> f = random_frame(rng);
    DvsElement<Rat> xi = random_element<Rat>(rng, d);
    bool ok = frame_eval(f, xi) == aut_apply(frame_to_aut(f), xi);
    if (!ok) note = "f=" + f.to_string() + " xi=" + xi.to_string();
    return ok;
  });
  ps.property("round_trip", [&](Rng& rng, std::string& note) {
    Frame<Rat> f = random_frame(rng);
    DvsAut<Rat> a = random_aut<Rat>(rng, d);
    bool ok = frame_from_aut(frame_to_aut(f)) == f && frame_to_aut(frame_from_aut(a)) == a;
    if (!ok) note = "f=" + f.to_string() + " a=" + a.to_string();
    return ok;
  });
  ps.property("torsor_transition", [&](Rng& rng, std::string& note) {
    Frame<Rat> f = random_frame(rng), g = random_frame(rng);
    DvsAut<Rat> a = random_aut<Rat>(rng, d);
    bool ok = frame_act(f, frame_transition(f, g)) == g &&
              frame_transition(f, frame_act(f, a)) == a;
    if (!ok) note = "f=" + f.to_string() + " g=" + g.to_string();
    return ok;
  });
}

void run_algebra_suite(const SuiteConfig& cfg, PropertySet& ps) {
  const Dims d = cfg.dims;
  ps.property("bracket_antisymmetry", [&](Rng& rng, std::string& note) {
    DvsDer<Rat> x = random_der<Rat>(rng, d), y = random_der<Rat>(rng, d);
    bool ok = der_bracket(x, y) == -der_bracket(y, x);
    if (!ok) note = "x=" + x.to_string() + " y=" + y.to_string();
    return ok;
  });
  ps.property("bracket_bilinear", [&](Rng& rng, std::string& note) {
    DvsDer<Rat> x = random_der<Rat>(rng, d), y = random_der<Rat>(rng, d),
                z = random_der<Rat>(rng, d);
    Rat c = random_rat(rng);
    bool ok = der_bracket(x + c * y, z) == der_bracket(x, z) + c * der_bracket(y, z);
    if (!ok) note = "x=" + x.to_string() + " y=" + y.to_string();
    return ok;
  });
  ps.property("bracket_jacobi", [&](Rng& rng, std::string& note) {
    DvsDer<Rat> x = random_der<Rat>(rng, d), y = random_der<Rat>(rng, d),
                z = random_der<Rat>(rng, d);
    DvsDer<Rat> s = der_bracket(der_bracket(x, y), z) + der_bracket(der_bracket(y, z), x) +
                    der_bracket(der_bracket(z, x), y);
    bool ok = s == der_zero<Rat>(d);
    if (!ok) note = "x=" + x.to_string() + " y=" + y.to_string() + " z=" + z.to_string();
    return ok;
  });
  ps.property("commutator_consistency", [&](Rng& rng, std::string& note) {
    DvsDer<double> x = random_der<double>(rng, d), y = random_der<double>(rng, d);
    DvsDer<double> exact = der_bracket(x, y);
    DvsDer<double> approx = group_commutator_estimate(x, y, 1e-4);
    double scale = std::max(1.0, der_norm(exact));
    bool ok = max_abs_diff(exact, approx) <= 1e-3 * scale;
    if (!ok) note = "x=" + x.to_string() + " y=" + y.to_string();
    return ok;
  });
  ps.property("exp_one_parameter", [&](Rng& rng, std::string& note) {
    DvsDer<double> x = random_der<double>(rng, d);
    double nrm = der_norm(x);
    if (nrm > 1.0) x = (1.0 / nrm) * x;
    double inner = std::max(cfg.tol / 10.0, 1e-12);
    DvsAut<double> half = der_exp(0.5 * x, inner);
    DvsAut<double> whole = der_exp(x, inner);
    bool ok = max_abs_diff(aut_compose(half, half), whole) <= cfg.tol;
    if (!ok) note = "x=" + x.to_string();
    return ok;
  });
  ps.single("exp_zero_identity",
            max_abs_diff(der_exp(der_zero<double>(d), 1e-12), aut_identity<double>(d)) <= 1e-12,
            "exp(0) differs from the identity");
}

struct BundleFixture {
  std::string name;
  PrincipalCocycle<Rat> pc;
};

std::vector<BundleFixture> bundle_fixtures(const SuiteConfig& cfg) {
  if (cfg.fixture) return {{cfg.fixture_name, jsonio::bundle_in<Rat>(*cfg.fixture)}};

  // Built-in deterministic fixtures: a 3-chart cycle (no triples, holonomy
  // allowed) and a complete 3-cover whose third transition is composed to
  // close the cocycle.
  std::vector<BundleFixture> out;
  Rng rng = Rng::for_trial(cfg.seed, 0x9e3779b9ull);
  {
    PrincipalCocycle<Rat> pc;
    pc.group = DlgSpec<Rat>::aut(cfg.dims);
    pc.cover.chart_count = 3;
    pc.cover.overlaps = {{0, 1}, {1, 0}, {1, 2}, {2, 1}, {2, 0}, {0, 2}};
    pc.g.emplace(std::make_pair(1, 0), random_aut<Rat>(rng, cfg.dims));
    pc.g.emplace(std::make_pair(2, 1), random_aut<Rat>(rng, cfg.dims));
    pc.g.emplace(std::make_pair(0, 2), random_aut<Rat>(rng, cfg.dims));
    symmetrize_transitions(pc);
    out.push_back({"cycle" + cfg.dims.to_string(), pc});
  }
  {
    PrincipalCocycle<Rat> pc;
    pc.group = DlgSpec<Rat>::aut(cfg.dims);
    pc.cover.chart_count = 3;
    pc.cover.overlaps = {{0, 1}, {1, 0}, {1, 2}, {2, 1}, {2, 0}, {0, 2}};
    pc.cover.triples = {{0, 1, 2}};
    DvsAut<Rat> h10 = random_aut<Rat>(rng, cfg.dims);
    DvsAut<Rat> h21 = random_aut<Rat>(rng, cfg.dims);
    pc.g.emplace(std::make_pair(1, 0), h10);
    pc.g.emplace(std::make_pair(2, 1), h21);
    pc.g.emplace(std::make_pair(2, 0), aut_compose(h21, h10));
    symmetrize_transitions(pc);
    out.push_back({"complete" + cfg.dims.to_string(), pc});
  }
  return out;
}

void run_bundles_suite(const SuiteConfig& cfg, PropertySet& ps) {
  std::vector<BundleFixture> fixtures = bundle_fixtures(cfg);
  const Dims d = fixtures.front().pc.group.dims;
  RepSpec<Rat> rep{RepKind::Defining, d};
  RepSpec<Rat> dual{RepKind::Dual, d};

  for (const auto& fx : fixtures) {
    const PrincipalCocycle<Rat>& pc = fx.pc;
    CheckReport cocycle = cocycle_verify(pc);
    for (const auto& c : cocycle.checks)
      ps.single(fx.name + "/" + c.name, c.pass, c.detail);
    CheckReport dpb = dpb_cocycle_verify(pc);
    for (const char* name : {"side1_projected_cocycle", "side2_projected_cocycle"}) {
      const CheckResult* c = dpb.find(name);
      ps.single(fx.name + "/" + name, c->pass, c->detail);
    }

    auto random_chart = [&](Rng& rng) {
      return static_cast<std::size_t>(rng.next_int(0, static_cast<int>(pc.cover.chart_count) - 1));
    };
    ps.property(fx.name + "/transport_round_trip", [&](Rng& rng, std::string& note) {
      std::size_t i = random_chart(rng);
      auto ns = pc.cover.neighbors(i);
      if (ns.empty()) return true;
      std::size_t j = ns[static_cast<std::size_t>(rng.next_int(0, static_cast<int>(ns.size()) - 1))];
      AssocElement<Rat> e{i, random_element<Rat>(rng, rep.fiber_dims())};
      AssocElement<Rat> back = transport(pc, rep, transport(pc, rep, e, {i, j}), {j, i});
      bool ok = back == e;
      if (!ok) note = "charts " + std::to_string(i) + "<->" + std::to_string(j);
      return ok;
    });
    ps.property(fx.name + "/fiber_ops_chart_independent", [&](Rng& rng, std::string& note) {
      std::size_t i = random_chart(rng);
      auto ns = pc.cover.neighbors(i);
      if (ns.empty()) return true;
      std::size_t j = ns[static_cast<std::size_t>(rng.next_int(0, static_cast<int>(ns.size()) - 1))];
      DvsElement<Rat> a = random_element<Rat>(rng, rep.fiber_dims());
      DvsElement<Rat> b = random_element<Rat>(rng, rep.fiber_dims());
      b.x = a.x; // same side-I fiber
      AssocElement<Rat> ea{i, a}, eb{i, b};
      AssocElement<Rat> sum_then = transport(pc, rep, assoc_fiber_add(pc, rep, Side::I, ea, eb), {i, j});
      AssocElement<Rat> then_sum = assoc_fiber_add(pc, rep, Side::I, transport(pc, rep, ea, {i, j}),
                                                   transport(pc, rep, eb, {i, j}));
      bool ok = sum_then == then_sum;
      if (!ok) note = "charts " + std::to_string(i) + "->" + std::to_string(j);
      return ok;
    });
    ps.property(fx.name + "/interchange_on_fibers", [&](Rng& rng, std::string& note) {
      std::size_t i = random_chart(rng);
      Dims fd = rep.fiber_dims();
      DvsElement<Rat> u = random_element<Rat>(rng, fd), v = random_element<Rat>(rng, fd);
      DvsElement<Rat> w = random_element<Rat>(rng, fd), s = random_element<Rat>(rng, fd);
      v.x = u.x;
      s.x = w.x;
      w.y = u.y;
      s.y = v.y;
      auto add = [&](Side side, const AssocElement<Rat>& a, const AssocElement<Rat>& b) {
        return assoc_fiber_add(pc, rep, side, a, b);
      };
      AssocElement<Rat> lhs = add(Side::II, add(Side::I, {i, u}, {i, v}), add(Side::I, {i, w}, {i, s}));
      AssocElement<Rat> rhs = add(Side::I, add(Side::II, {i, u}, {i, w}), add(Side::II, {i, v}, {i, s}));
      bool ok = lhs == rhs;
      if (!ok) note = "chart " + std::to_string(i);
      return ok;
    });
    ps.property(fx.name + "/pairing_same_path_invariant", [&](Rng& rng, std::string& note) {
      std::size_t i = random_chart(rng);
      auto ns = pc.cover.neighbors(i);
      if (ns.empty()) return true;
      std::size_t j = ns[static_cast<std::size_t>(rng.next_int(0, static_cast<int>(ns.size()) - 1))];
      DvsElement<Rat> v = random_element<Rat>(rng, rep.fiber_dims());
      DvsElement<Rat> w = random_element<Rat>(rng, dual.fiber_dims());
      w.x = v.x;
      Rat before = pairing(v, w);
      DvsElement<Rat> v2 = transport(pc, rep, AssocElement<Rat>{i, v}, {i, j}).value;
      DvsElement<Rat> w2 = transport(pc, dual, AssocElement<Rat>{i, w}, {i, j}).value;
      bool ok = pairing(v2, w2) == before;
      if (!ok) note = "charts " + std::to_string(i) + "->" + std::to_string(j);
      return ok;
    });
  }
}

void run_dla_suite(const SuiteConfig&, PropertySet& ps) {
  LieAlgebra solvable = LieAlgebra::abelian(2);
  solvable.bracket_basis(0, 1) = Vector<Rat>{Rat(1), Rat(0)};
  solvable.bracket_basis(1, 0) = Vector<Rat>{Rat(-1), Rat(0)};
  LieAlgebra sl2 = LieAlgebra::abelian(3);
  sl2.bracket_basis(0, 1) = Vector<Rat>{Rat(0), Rat(0), Rat(1)};
  sl2.bracket_basis(1, 0) = Vector<Rat>{Rat(0), Rat(0), Rat(-1)};
  sl2.bracket_basis(2, 0) = Vector<Rat>{Rat(2), Rat(0), Rat(0)};
  sl2.bracket_basis(0, 2) = Vector<Rat>{Rat(-2), Rat(0), Rat(0)};
  sl2.bracket_basis(2, 1) = Vector<Rat>{Rat(0), Rat(-2), Rat(0)};
  sl2.bracket_basis(1, 2) = Vector<Rat>{Rat(0), Rat(2), Rat(0)};

  auto pick_sides = [&](Rng& rng) {
    std::int64_t which = rng.next_int(0, 2);
    LieAlgebra g1 = which == 0 ? sl2 : which == 1 ? solvable : LieAlgebra::abelian(2);
    LieAlgebra g2 = LieAlgebra::abelian(1 + static_cast<std::size_t>(rng.next_int(0, 1)));
    return std::make_pair(g1, g2);
  };
  auto random_cochain = [](Rng& rng, int degree, std::size_t n, std::size_t m) {
    Cochain c = Cochain::zero(degree, n, m);
    if (degree == 1) {
      for (std::size_t i = 0; i < n; ++i) c.at(i) = random_vector<Rat>(rng, m);
    } else {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) c.set_pair(i, j, random_vector<Rat>(rng, m));
    }
    return c;
  };

  ps.property("differential_squares_to_zero", [&](Rng& rng, std::string& note) {
    auto [g1, g2] = pick_sides(rng);
    LieAlgebra g = direct_sum(g1, g2);
    LieModule m = LieModule::trivial(g.dim, 1 + static_cast<std::size_t>(rng.next_int(0, 2)));
    Cochain theta = random_cochain(rng, 1, g.dim, m.carrier);
    bool ok = ce_differential(g, m, ce_differential(g, m, theta)).is_zero();
    if (!ok) note = "algebra dim " + std::to_string(g.dim);
    return ok;
  });
  ps.property("split_matches_total", [&](Rng& rng, std::string& note) {
    auto [g1, g2] = pick_sides(rng);
    std::size_t carrier = 1 + static_cast<std::size_t>(rng.next_int(0, 1));
    LieModule r1 = rng.next_int(0, 2) == 0 && g1.dim == 3 ? adjoint_module(g1)
                                                          : LieModule::trivial(g1.dim, carrier);
    LieModule r2 = LieModule::trivial(g2.dim, r1.carrier);
    LieAlgebra sum = direct_sum(g1, g2);
    LieModule sum_mod{r1.carrier, {}};
    sum_mod.rho = r1.rho;
    sum_mod.rho.insert(sum_mod.rho.end(), r2.rho.begin(), r2.rho.end());
    Cochain w = rng.next_int(0, 1) == 0
                    ? random_cochain(rng, 2, sum.dim, r1.carrier)
                    : ce_differential(sum, sum_mod, random_cochain(rng, 1, sum.dim, r1.carrier));
    CheckReport r = split_cocycle_check(g1, g2, r1, r2, w);
    bool ok = r.find("matches_total_cocycle_test")->pass;
    if (!ok) note = "split criterion disagreed with the differential";
    return ok;
  });
  ps.property("coboundaries_build_double_algebras", [&](Rng& rng, std::string& note) {
    auto [g1, g2] = pick_sides(rng);
    std::size_t carrier = 1 + static_cast<std::size_t>(rng.next_int(0, 1));
    LieModule r1 = LieModule::trivial(g1.dim, carrier);
    LieModule r2 = LieModule::trivial(g2.dim, carrier);
    LieAlgebra sum = direct_sum(g1, g2);
    LieModule sum_mod = LieModule::trivial(sum.dim, carrier);
    Cochain w = ce_differential(sum, sum_mod, random_cochain(rng, 1, sum.dim, carrier));
    DoubleLieAlgebra dbl = build_double_algebra(g1, g2, r1, r2, w);
    CheckReport r = dla_verify(dbl, g1, g2);
    bool ok = r.all_pass();
    if (!ok) note = "verification failed on a coboundary extension";
    return ok;
  });
  ps.property("wedge_outputs_are_cocycles", [&](Rng& rng, std::string& note) {
    LieAlgebra g2 = LieAlgebra::abelian(2);
    std::size_t m = 1 + static_cast<std::size_t>(rng.next_int(0, 2));
    LieModule r1 = LieModule::trivial(2, m), r2 = LieModule::trivial(2, m);
    Cochain t1 = Cochain::zero(1, 2, m);
    t1.at(1) = random_vector<Rat>(rng, m);
    Cochain t2 = random_cochain(rng, 1, 2, m);
    Cochain w20 = random_cochain(rng, 2, 2, m), w02 = random_cochain(rng, 2, 2, m);
    Cochain w = wedge_construct(solvable, g2, r1, r2, t1, t2, w20, w02);
    CheckReport r = split_cocycle_check(solvable, g2, r1, r2, w);
    bool ok = r.all_pass();
    if (!ok) note = "wedge output failed the split criterion";
    return ok;
  });
}

void run_connections_suite(const SuiteConfig& cfg, PropertySet& ps) {
  ps.property("complement_rank_consistency", [&](Rng& rng, std::string& note) {
    std::size_t n = 2 + static_cast<std::size_t>(rng.next_int(0, 3));
    std::size_t dh = 1 + static_cast<std::size_t>(rng.next_int(0, static_cast<int>(n) - 1));
    std::vector<Vector<Rat>> hv, kv;
    for (std::size_t i = 0; i < dh; ++i) hv.push_back(random_vector<Rat>(rng, n));
    for (std::size_t i = 0; i < n - dh; ++i) kv.push_back(random_vector<Rat>(rng, n));
    SubspaceSpec h = make_subspace(n, hv), k = make_subspace(n, kv);
    if (h.dim() + k.dim() != n) return true;
    CheckReport r = complement_check(h, k);
    bool ok = !r.find("trivial_intersection")->pass || r.find("spanning_sum")->pass;
    if (!ok) note = "trivial intersection without spanning sum at ambient " + std::to_string(n);
    return ok;
  });
  ps.property("abelian_sections_pass", [&](Rng& rng, std::string& note) {
    DoubleLieAlgebra flat = abelian_product_model(2, 1, 2);
    Matrix<Rat> m(5, 3);
    Matrix<Rat> p1 = random_invertible<Rat>(rng, 2), p2 = random_invertible<Rat>(rng, 1);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) m(i, j) = p1(i, j);
    m(2, 2) = p2(0, 0);
    for (std::size_t i = 3; i < 5; ++i)
      for (std::size_t j = 0; j < 3; ++j) m(i, j) = random_rat(rng);
    bool ok = splitting_connection_check(flat, SplittingMap{m}).all_pass();
    if (!ok) note = "an abelian section failed";
    return ok;
  });
  ps.property("built_pair_connections", [&](Rng& rng, std::string& note) {
    LieAlgebra line = LieAlgebra::abelian(1);
    LieModule triv = LieModule::trivial(1, 1);
    Cochain one = Cochain::zero(1, 1, 1);
    one.at(0) = Vector<Rat>{Rat(1)};
    Cochain w = wedge_construct(line, line, triv, triv, one, one, Cochain::zero(2, 1, 1),
                                Cochain::zero(2, 1, 1));
    DoubleLieAlgebra dbl = build_double_algebra(line, line, triv, triv, w);
    SubspaceSpec h1 = make_subspace(3, {Vector<Rat>{Rat(1), Rat(0), random_rat(rng)}});
    SubspaceSpec h2 = make_subspace(3, {Vector<Rat>{Rat(0), Rat(1), random_rat(rng)}});
    bool ok = dlg_connection_check(dbl, h1, h2).all_pass();
    if (!ok) note = "a lifted horizontal pair failed";
    return ok;
  });

  DoubleLieAlgebra aut_model = aut_algebra_model(cfg.dims);
  CheckReport r = splitting_connection_check(aut_model, canonical_splitting(aut_model));
  const bool has_twist = cfg.dims.n0 * cfg.dims.n1 * cfg.dims.n2 > 0;
  const CheckResult* core = r.find("core_bracket_condition");
  const CheckResult* side = r.find("side_bracket_condition");
  ps.single("aut_canonical_core_verdict", core->pass == !has_twist,
            "core condition verdict did not match the twist dimension");
  ps.single("aut_canonical_sides_commute", side->pass, side->detail);
}

} // namespace

std::vector<std::string> suite_names() {
  return {"aut", "dual", "frames", "algebra", "bundles", "dla", "connections"};
}

SuiteReport run_suite(const SuiteConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  SuiteReport report;
  report.suite = config.suite;
  report.trials = config.trials;
  report.seed = config.seed;
  report.fixture = config.fixture_name;

  PropertySet ps{config.trials, config.seed, {}};
  if (config.suite == "aut") {
    if (report.fixture.empty()) report.fixture = "trivial" + config.dims.to_string();
    run_aut_suite(config, ps);
  } else if (config.suite == "dual") {
    if (report.fixture.empty()) report.fixture = "trivial" + config.dims.to_string();
    run_dual_suite(config, ps);
  } else if (config.suite == "frames") {
    if (report.fixture.empty()) report.fixture = "trivial" + config.dims.to_string();
    run_frames_suite(config, ps);
  } else if (config.suite == "algebra") {
    if (report.fixture.empty()) report.fixture = "trivial" + config.dims.to_string();
    run_algebra_suite(config, ps);
  } else if (config.suite == "bundles") {
    if (report.fixture.empty())
      report.fixture = config.fixture ? "input" : "builtin" + config.dims.to_string();
    SuiteConfig cfg = config;
    cfg.fixture_name = report.fixture;
    run_bundles_suite(cfg, ps);
  } else if (config.suite == "dla") {
    if (report.fixture.empty()) report.fixture = "builtin";
    run_dla_suite(config, ps);
  } else if (config.suite == "connections") {
    if (report.fixture.empty()) report.fixture = "trivial" + config.dims.to_string();
    run_connections_suite(config, ps);
  } else {
    throw Error(ErrorKind::InputError, "unknown suite '" + config.suite + "'");
  }

  report.properties = std::move(ps.results);
  std::sort(report.properties.begin(), report.properties.end(),
            [](const PropertyResult& a, const PropertyResult& b) { return a.name < b.name; });
  report.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

nlohmann::json suite_report_json(const SuiteReport& report) {
  nlohmann::json props = nlohmann::json::array();
  for (const auto& p : report.properties) {
    nlohmann::json e{{"name", p.name}, {"pass", p.pass}};
    if (!p.pass) e["counterexample"] = p.counterexample;
    props.push_back(e);
  }
  return nlohmann::json{{"suite", report.suite},   {"fixture", report.fixture},
                        {"trials", report.trials}, {"seed", report.seed},
                        {"properties", props},     {"wall_time_ms", report.wall_time_ms}};
}

} // namespace dvb
