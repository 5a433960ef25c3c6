#ifndef DVB_JSONIO_HPP
#define DVB_JSONIO_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "dvb/bundles.hpp"
#include "dvb/connections.hpp"
#include "dvb/dla.hpp"
#include "dvb/frames.hpp"

/// JSON encodings shared by fixtures, the CLI and the reports:
/// rational scalars as "p/q" strings, float scalars as numbers; vectors as
/// arrays; matrices as row-major nested arrays; bilinear maps as [k][i][j].

namespace dvb::jsonio {

using nlohmann::json;

inline json scalar_out(const Rat& x) { return rat_to_string(x); }
inline json scalar_out(double x) { return x; }

template <typename S>
S scalar_in(const json& j);

template <>
inline Rat scalar_in<Rat>(const json& j) {
  if (j.is_string()) return rat_from_string(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long long>());
  throw Error(ErrorKind::InputError, "rational scalar wants a \"p/q\" string or integer");
}

template <>
inline double scalar_in<double>(const json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) return to_double(rat_from_string(j.get<std::string>()));
  throw Error(ErrorKind::InputError, "float scalar wants a number");
}

template <typename S>
json vector_out(const Vector<S>& v) {
  json out = json::array();
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(scalar_out(v[i]));
  return out;
}

template <typename S>
Vector<S> vector_in(const json& j) {
  if (!j.is_array()) throw Error(ErrorKind::InputError, "vector wants an array");
  Vector<S> v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) v[i] = scalar_in<S>(j[i]);
  return v;
}

template <typename S>
json matrix_out(const Matrix<S>& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(scalar_out(m(i, j)));
    out.push_back(row);
  }
  return out;
}

template <typename S>
Matrix<S> matrix_in(const json& j) {
  if (!j.is_array()) throw Error(ErrorKind::InputError, "matrix wants a nested array");
  const std::size_t rows = j.size();
  const std::size_t cols = rows == 0 ? 0 : j[0].size();
  Matrix<S> m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols)
      throw Error(ErrorKind::InputError, "matrix rows must be arrays of equal length");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = scalar_in<S>(j[i][c]);
  }
  return m;
}

inline json dims_out(const Dims& d) {
  return json{{"n1", d.n1}, {"n2", d.n2}, {"n0", d.n0}};
}

inline Dims dims_in(const json& j) {
  if (!j.is_object() || !j.contains("n1") || !j.contains("n2") || !j.contains("n0"))
    throw Error(ErrorKind::InputError, "dims wants {\"n1\",\"n2\",\"n0\"}");
  return Dims{j["n1"].get<std::size_t>(), j["n2"].get<std::size_t>(),
              j["n0"].get<std::size_t>()};
}

template <typename S>
json bilinear_out(const BilinearMap<S>& m) {
  const Dims d = m.dims();
  json out = json::array();
  for (std::size_t k = 0; k < d.n0; ++k) {
    json plane = json::array();
    for (std::size_t i = 0; i < d.n1; ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < d.n2; ++j) row.push_back(scalar_out(m.coeff(k, i, j)));
      plane.push_back(row);
    }
    out.push_back(plane);
  }
  return out;
}

template <typename S>
BilinearMap<S> bilinear_in(const json& j, const Dims& d) {
  if (!j.is_array() || j.size() != d.n0)
    throw Error(ErrorKind::InputError, "bilinear map wants a [k][i][j] array matching dims");
  BilinearMap<S> m(d);
  for (std::size_t k = 0; k < d.n0; ++k) {
    if (!j[k].is_array() || j[k].size() != d.n1)
      throw Error(ErrorKind::InputError, "bilinear map plane shape");
    for (std::size_t i = 0; i < d.n1; ++i) {
      if (!j[k][i].is_array() || j[k][i].size() != d.n2)
        throw Error(ErrorKind::InputError, "bilinear map row shape");
      for (std::size_t c = 0; c < d.n2; ++c) m.coeff(k, i, c) = scalar_in<S>(j[k][i][c]);
    }
  }
  return m;
}

template <typename S>
json element_out(const DvsElement<S>& v) {
  return json{{"x", vector_out(v.x)}, {"y", vector_out(v.y)}, {"z", vector_out(v.z)}};
}

template <typename S>
DvsElement<S> element_in(const json& j) {
  if (!j.is_object() || !j.contains("x") || !j.contains("y") || !j.contains("z"))
    throw Error(ErrorKind::InputError, "element wants {\"x\",\"y\",\"z\"}");
  return {vector_in<S>(j["x"]), vector_in<S>(j["y"]), vector_in<S>(j["z"])};
}

template <typename S>
json aut_out(const DvsAut<S>& a) {
  return json{{"a1", matrix_out(a.a1)},
              {"a2", matrix_out(a.a2)},
              {"a0", matrix_out(a.a0)},
              {"mu", bilinear_out(a.mu)}};
}

template <typename S>
DvsAut<S> aut_in(const json& j) {
  if (!j.is_object() || !j.contains("a1") || !j.contains("a2") || !j.contains("a0") ||
      !j.contains("mu"))
    throw Error(ErrorKind::InputError, "quadruple wants {\"a1\",\"a2\",\"a0\",\"mu\"}");
  Matrix<S> a1 = matrix_in<S>(j["a1"]), a2 = matrix_in<S>(j["a2"]), a0 = matrix_in<S>(j["a0"]);
  Dims d{a1.rows(), a2.rows(), a0.rows()};
  return {a1, a2, a0, bilinear_in<S>(j["mu"], d)};
}

template <typename S>
json der_out(const DvsDer<S>& x) {
  return json{{"A1", matrix_out(x.A1)},
              {"A2", matrix_out(x.A2)},
              {"A0", matrix_out(x.A0)},
              {"alpha", bilinear_out(x.alpha)}};
}

template <typename S>
DvsDer<S> der_in(const json& j) {
  if (!j.is_object() || !j.contains("A1") || !j.contains("A2") || !j.contains("A0") ||
      !j.contains("alpha"))
    throw Error(ErrorKind::InputError, "derivation wants {\"A1\",\"A2\",\"A0\",\"alpha\"}");
  Matrix<S> a1 = matrix_in<S>(j["A1"]), a2 = matrix_in<S>(j["A2"]), a0 = matrix_in<S>(j["A0"]);
  Dims d{a1.rows(), a2.rows(), a0.rows()};
  return {a1, a2, a0, bilinear_in<S>(j["alpha"], d)};
}

template <typename S>
json frame_out(const Frame<S>& f) {
  return json{{"U", matrix_out(f.U)},
              {"V", matrix_out(f.V)},
              {"W", matrix_out(f.W)},
              {"mu", bilinear_out(f.mu)}};
}

template <typename S>
Frame<S> frame_in(const json& j) {
  if (!j.is_object() || !j.contains("U") || !j.contains("V") || !j.contains("W") ||
      !j.contains("mu"))
    throw Error(ErrorKind::InputError, "frame wants {\"U\",\"V\",\"W\",\"mu\"}");
  Matrix<S> u = matrix_in<S>(j["U"]), v = matrix_in<S>(j["V"]), w = matrix_in<S>(j["W"]);
  Dims d{u.rows(), v.rows(), w.rows()};
  return {u, v, w, bilinear_in<S>(j["mu"], d)};
}

/// Bundle file: {"dims", "charts", "overlaps", "triples"?, "transitions":
/// {"i,j": quadruple}, "representation": "aut"}. Transitions may list one
/// orientation of an overlap; missing reverses are filled by group inversion.
template <typename S>
PrincipalCocycle<S> bundle_in(const json& j) {
  if (!j.is_object()) throw Error(ErrorKind::InputError, "bundle wants an object");
  for (const char* key : {"dims", "charts", "overlaps", "transitions", "representation"})
    if (!j.contains(key))
      throw Error(ErrorKind::InputError, std::string("bundle file misses \"") + key + "\"");
  if (j["representation"].get<std::string>() != "aut")
    throw Error(ErrorKind::InputError, "only the \"aut\" representation is supported");

  PrincipalCocycle<S> pc;
  Dims d = dims_in(j["dims"]);
  pc.group = DlgSpec<S>::aut(d);
  pc.cover.chart_count = j["charts"].get<std::size_t>();
  for (const auto& e : j["overlaps"]) {
    if (!e.is_array() || e.size() != 2)
      throw Error(ErrorKind::InputError, "overlap entries are pairs");
    pc.cover.overlaps.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
  }
  if (j.contains("triples"))
    for (const auto& e : j["triples"]) {
      if (!e.is_array() || e.size() != 3)
        throw Error(ErrorKind::InputError, "triple entries are index triples");
      pc.cover.triples.push_back(
          {e[0].get<std::size_t>(), e[1].get<std::size_t>(), e[2].get<std::size_t>()});
    }
  for (const auto& [key, quad] : j["transitions"].items()) {
    const auto comma = key.find(',');
    if (comma == std::string::npos)
      throw Error(ErrorKind::InputError, "transition keys look like \"i,j\"");
    std::size_t a = 0, b = 0;
    try {
      a = static_cast<std::size_t>(std::stoul(key.substr(0, comma)));
      b = static_cast<std::size_t>(std::stoul(key.substr(comma + 1)));
    } catch (const std::exception&) {
      throw Error(ErrorKind::InputError, "transition key '" + key + "' is not an index pair");
    }
    pc.g.emplace(std::make_pair(a, b), aut_in<S>(quad));
  }
  symmetrize_transitions(pc);
  return pc;
}

template <typename S>
json bundle_out(const PrincipalCocycle<S>& pc) {
  json transitions = json::object();
  for (const auto& [key, quad] : pc.g)
    transitions[std::to_string(key.first) + "," + std::to_string(key.second)] = aut_out(quad);
  json overlaps = json::array();
  for (const auto& [a, b] : pc.cover.overlaps) overlaps.push_back(json::array({a, b}));
  json triples = json::array();
  for (const auto& t : pc.cover.triples) triples.push_back(json::array({t[0], t[1], t[2]}));
  return json{{"dims", dims_out(pc.group.dims)}, {"charts", pc.cover.chart_count},
              {"overlaps", overlaps},            {"triples", triples},
              {"transitions", transitions},      {"representation", "aut"}};
}

template <typename S>
json assoc_out(const AssocElement<S>& e) {
  return json{{"chart", e.chart}, {"value", element_out(e.value)}};
}

template <typename S>
AssocElement<S> assoc_in(const json& j) {
  if (!j.is_object() || !j.contains("chart") || !j.contains("value"))
    throw Error(ErrorKind::InputError, "bundle element wants {\"chart\",\"value\"}");
  return {j["chart"].get<std::size_t>(), element_in<S>(j["value"])};
}

/// Structure constants as a [i][j][k] nested array.
inline json lie_algebra_out(const LieAlgebra& g) {
  json out = json::array();
  for (std::size_t i = 0; i < g.dim; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < g.dim; ++j) row.push_back(vector_out(g.bracket_basis(i, j)));
    out.push_back(row);
  }
  return out;
}

inline LieAlgebra lie_algebra_in(const json& j) {
  if (!j.is_array()) throw Error(ErrorKind::InputError, "structure constants want [i][j][k]");
  LieAlgebra g = LieAlgebra::abelian(j.size());
  for (std::size_t i = 0; i < g.dim; ++i) {
    if (!j[i].is_array() || j[i].size() != g.dim)
      throw Error(ErrorKind::InputError, "structure constant rows must be square");
    for (std::size_t c = 0; c < g.dim; ++c) {
      Vector<Rat> v = vector_in<Rat>(j[i][c]);
      if (v.size() != g.dim)
        throw Error(ErrorKind::InputError, "structure constant vectors match the dimension");
      g.bracket_basis(i, c) = v;
    }
  }
  return g;
}

/// Module as generator-indexed action matrices.
inline json lie_module_out(const LieModule& m) {
  json out = json::array();
  for (const auto& r : m.rho) out.push_back(matrix_out(r));
  return out;
}

inline LieModule lie_module_in(const json& j) {
  if (!j.is_array() || j.empty())
    throw Error(ErrorKind::InputError, "module wants a nonempty array of action matrices");
  LieModule m{0, {}};
  for (const auto& e : j) m.rho.push_back(matrix_in<Rat>(e));
  m.carrier = m.rho[0].rows();
  for (const auto& r : m.rho)
    if (r.rows() != m.carrier || r.cols() != m.carrier)
      throw Error(ErrorKind::InputError, "action matrices must be square of equal size");
  return m;
}

/// Cochain coefficient arrays: degree 1 as [i] of vectors, degree 2 as
/// [i][j] of vectors. The degree is inferred from the nesting depth.
inline json cochain_out(const Cochain& c) {
  json out = json::array();
  if (c.degree == 1) {
    for (std::size_t i = 0; i < c.alg_dim; ++i) out.push_back(vector_out(c.at(i)));
    return out;
  }
  if (c.degree != 2) throw Error(ErrorKind::InputError, "cochain files hold degrees 1 and 2");
  for (std::size_t i = 0; i < c.alg_dim; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < c.alg_dim; ++j) row.push_back(vector_out(c.at(i, j)));
    out.push_back(row);
  }
  return out;
}

inline Cochain cochain_in(const json& j) {
  if (!j.is_array() || j.empty())
    throw Error(ErrorKind::InputError, "cochain wants a nonempty coefficient array");
  const bool degree2 = j[0].is_array() && !j[0].empty() && j[0][0].is_array();
  const std::size_t n = j.size();
  if (!degree2) {
    Vector<Rat> first = vector_in<Rat>(j[0]);
    Cochain c = Cochain::zero(1, n, first.size());
    for (std::size_t i = 0; i < n; ++i) {
      Vector<Rat> v = vector_in<Rat>(j[i]);
      if (v.size() != c.mod_dim)
        throw Error(ErrorKind::InputError, "cochain values share one carrier size");
      c.at(i) = v;
    }
    return c;
  }
  Vector<Rat> first = vector_in<Rat>(j[0][0]);
  Cochain c = Cochain::zero(2, n, first.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (!j[i].is_array() || j[i].size() != n)
      throw Error(ErrorKind::InputError, "degree-2 cochain wants a square [i][j] array");
    for (std::size_t k = 0; k < n; ++k) {
      Vector<Rat> v = vector_in<Rat>(j[i][k]);
      if (v.size() != c.mod_dim)
        throw Error(ErrorKind::InputError, "cochain values share one carrier size");
      c.at(i, k) = v;
    }
  }
  return c;
}

inline json double_algebra_out(const DoubleLieAlgebra& d) {
  return json{{"constants", lie_algebra_out(d.total)},
              {"n1", d.n1},
              {"n2", d.n2},
              {"core", d.core}};
}

inline json report_out(const CheckReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    json e = json{{"name", c.name}, {"pass", c.pass}};
    if (!c.detail.empty()) e["detail"] = c.detail;
    checks.push_back(e);
  }
  return json{{"checks", checks}, {"all_pass", r.all_pass()}};
}

} // namespace dvb::jsonio

#endif
