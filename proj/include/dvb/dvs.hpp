#ifndef DVB_DVS_HPP
#define DVB_DVS_HPP

#include <cstddef>
#include <string>

#include "dvb/dims.hpp"
#include "dvb/errors.hpp"
#include "dvb/linalg.hpp"

namespace dvb {

/// The two vector bundle structures on a double vector space: side I is the
/// bundle over V1 (addition fixes the V1-component), side II the bundle over V2.
enum class Side { I, II };

inline const char* side_name(Side s) { return s == Side::I ? "I" : "II"; }

/// Element (x, y, z) of the split double vector space R^[n] = V1 (+) V2 (+) V0
/// in canonical coordinates.
template <typename S>
struct DvsElement {
  Vector<S> x; // V1-component
  Vector<S> y; // V2-component
  Vector<S> z; // core component

  Dims dims() const { return Dims{x.size(), y.size(), z.size()}; }

  friend bool operator==(const DvsElement&, const DvsElement&) = default;

  std::string to_string() const {
    return "(" + x.to_string() + ", " + y.to_string() + ", " + z.to_string() + ")";
  }
};

template <typename S>
DvsElement<S> dvs_zero(const Dims& d) {
  return {Vector<S>(d.n1), Vector<S>(d.n2), Vector<S>(d.n0)};
}

template <typename S>
void require_same_dims(const DvsElement<S>& u, const DvsElement<S>& v, const char* op) {
  if (!(u.dims() == v.dims()))
    throw Error(ErrorKind::DimMismatch, std::string(op) + " over " + u.dims().to_string() +
                                            " vs " + v.dims().to_string());
}

/// Fiberwise addition. Side I requires equal V1-components and adds the rest;
/// side II requires equal V2-components.
template <typename S>
DvsElement<S> dvs_add(Side side, const DvsElement<S>& u, const DvsElement<S>& v) {
  require_same_dims(u, v, "dvs_add");
  if (side == Side::I) {
    if (!(u.x == v.x))
      throw Error(ErrorKind::BaseMismatch, "side-I addition over distinct V1 points " +
                                               u.x.to_string() + " vs " + v.x.to_string());
    return {u.x, u.y + v.y, u.z + v.z};
  }
  if (!(u.y == v.y))
    throw Error(ErrorKind::BaseMismatch, "side-II addition over distinct V2 points " +
                                             u.y.to_string() + " vs " + v.y.to_string());
  return {u.x + v.x, u.y, u.z + v.z};
}

/// Fiberwise scalar action for the chosen bundle structure.
template <typename S>
DvsElement<S> dvs_scale(Side side, const S& r, const DvsElement<S>& u) {
  if (side == Side::I) return {u.x, r * u.y, r * u.z};
  return {r * u.x, u.y, r * u.z};
}

/// Zero section of the chosen side: the additive unit of the fiber over `base`.
template <typename S>
DvsElement<S> dvs_zero_section(Side side, const Dims& d, const Vector<S>& base) {
  if (side == Side::I) {
    if (base.size() != d.n1) throw Error(ErrorKind::DimMismatch, "side-I base size");
    return {base, Vector<S>(d.n2), Vector<S>(d.n0)};
  }
  if (base.size() != d.n2) throw Error(ErrorKind::DimMismatch, "side-II base size");
  return {Vector<S>(d.n1), base, Vector<S>(d.n0)};
}

/// Embeds a core vector as the element (0, 0, z).
template <typename S>
DvsElement<S> dvs_core_element(const Dims& d, const Vector<S>& z) {
  if (z.size() != d.n0) throw Error(ErrorKind::DimMismatch, "core size");
  return {Vector<S>(d.n1), Vector<S>(d.n2), z};
}

template <typename S>
bool dvs_is_core(const DvsElement<S>& u) {
  return u.x.is_zero() && u.y.is_zero();
}

/// Bilinear map V1 x V2 -> V0 stored as the coefficient tensor
/// coeff[k][i][j] = k-th core coordinate of mu(e_i, f_j). The [core][V1][V2]
/// index order is used everywhere in this project.
template <typename S>
class BilinearMap {
 public:
  BilinearMap() = default;
  explicit BilinearMap(const Dims& d) : dims_(d), c_(d.n0 * d.n1 * d.n2, S(0)) {}

  static BilinearMap zero(const Dims& d) { return BilinearMap(d); }

  const Dims& dims() const { return dims_; }

  S& coeff(std::size_t k, std::size_t i, std::size_t j) {
    return c_[(k * dims_.n1 + i) * dims_.n2 + j];
  }
  const S& coeff(std::size_t k, std::size_t i, std::size_t j) const {
    return c_[(k * dims_.n1 + i) * dims_.n2 + j];
  }

  friend bool operator==(const BilinearMap& a, const BilinearMap& b) {
    return a.dims_ == b.dims_ && a.c_ == b.c_;
  }

  Vector<S> eval(const Vector<S>& x, const Vector<S>& y) const {
    if (x.size() != dims_.n1 || y.size() != dims_.n2)
      throw Error(ErrorKind::DimMismatch, "bilinear map arguments");
    Vector<S> out(dims_.n0);
    for (std::size_t k = 0; k < dims_.n0; ++k) {
      S acc(0);
      for (std::size_t i = 0; i < dims_.n1; ++i) {
        if (x[i] == S(0)) continue;
        for (std::size_t j = 0; j < dims_.n2; ++j) acc += coeff(k, i, j) * x[i] * y[j];
      }
      out[k] = acc;
    }
    return out;
  }

  /// mu o (P x Q): precomposes the V1 argument with P and the V2 argument with Q.
  BilinearMap compose_sides(const Matrix<S>& p, const Matrix<S>& q) const {
    if (p.rows() != dims_.n1 || p.cols() != dims_.n1 || q.rows() != dims_.n2 || q.cols() != dims_.n2)
      throw Error(ErrorKind::DimMismatch, "compose_sides blocks");
    BilinearMap out(dims_);
    for (std::size_t k = 0; k < dims_.n0; ++k)
      for (std::size_t a = 0; a < dims_.n1; ++a)
        for (std::size_t b = 0; b < dims_.n2; ++b) {
          const S& m = coeff(k, a, b);
          if (m == S(0)) continue;
          for (std::size_t i = 0; i < dims_.n1; ++i) {
            if (p(a, i) == S(0)) continue;
            for (std::size_t j = 0; j < dims_.n2; ++j)
              out.coeff(k, i, j) += m * p(a, i) * q(b, j);
          }
        }
    return out;
  }

  /// A o mu: postcomposes the core output with A.
  BilinearMap compose_out(const Matrix<S>& a) const {
    if (a.rows() != dims_.n0 || a.cols() != dims_.n0)
      throw Error(ErrorKind::DimMismatch, "compose_out block");
    BilinearMap out(dims_);
    for (std::size_t k = 0; k < dims_.n0; ++k)
      for (std::size_t m = 0; m < dims_.n0; ++m) {
        if (a(k, m) == S(0)) continue;
        for (std::size_t i = 0; i < dims_.n1; ++i)
          for (std::size_t j = 0; j < dims_.n2; ++j)
            out.coeff(k, i, j) += a(k, m) * coeff(m, i, j);
      }
    return out;
  }

  /// Partial application in the V1 slot: the matrix of y -> mu(x, y).
  Matrix<S> left_contract(const Vector<S>& x) const {
    if (x.size() != dims_.n1) throw Error(ErrorKind::DimMismatch, "left_contract argument");
    Matrix<S> m(dims_.n0, dims_.n2);
    for (std::size_t k = 0; k < dims_.n0; ++k)
      for (std::size_t j = 0; j < dims_.n2; ++j) {
        S acc(0);
        for (std::size_t i = 0; i < dims_.n1; ++i) acc += coeff(k, i, j) * x[i];
        m(k, j) = acc;
      }
    return m;
  }

  BilinearMap& operator+=(const BilinearMap& o) {
    require_same(o, "+");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  BilinearMap& operator-=(const BilinearMap& o) {
    require_same(o, "-");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  friend BilinearMap operator+(BilinearMap a, const BilinearMap& b) { return a += b; }
  friend BilinearMap operator-(BilinearMap a, const BilinearMap& b) { return a -= b; }
  friend BilinearMap operator-(const BilinearMap& a) {
    BilinearMap r(a.dims_);
    for (std::size_t i = 0; i < a.c_.size(); ++i) r.c_[i] = -a.c_[i];
    return r;
  }
  friend BilinearMap operator*(const S& s, const BilinearMap& a) {
    BilinearMap r(a.dims_);
    for (std::size_t i = 0; i < a.c_.size(); ++i) r.c_[i] = s * a.c_[i];
    return r;
  }

  bool is_zero() const {
    for (const S& v : c_)
      if (!(v == S(0))) return false;
    return true;
  }

  double max_abs() const {
    double m = 0;
    for (const S& v : c_) m = std::max(m, std::abs(to_double(v)));
    return m;
  }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t k = 0; k < dims_.n0; ++k) {
      if (k) s += "; ";
      for (std::size_t i = 0; i < dims_.n1; ++i)
        for (std::size_t j = 0; j < dims_.n2; ++j) {
          if (i || j) s += ", ";
          s += scalar_to_string(coeff(k, i, j));
        }
    }
    return s + "]";
  }

 private:
  void require_same(const BilinearMap& o, const char* op) const {
    if (!(dims_ == o.dims_))
      throw Error(ErrorKind::DimMismatch, std::string("bilinear map ") + op);
  }

  Dims dims_;
  std::vector<S> c_;
};

template <typename S>
double max_abs_diff(const BilinearMap<S>& a, const BilinearMap<S>& b) {
  return (a - b).max_abs();
}

/// A splitting of R^[n], recorded by its offset against the canonical one:
/// the decomposition it induces sends (v1, v2, v0) to (v1, v2, v0 + mu(v1, v2)).
template <typename S>
struct Splitting {
  BilinearMap<S> mu;

  Dims dims() const { return mu.dims(); }
  friend bool operator==(const Splitting&, const Splitting&) = default;
};

template <typename S>
Splitting<S> canonical_splitting(const Dims& d) {
  return {BilinearMap<S>::zero(d)};
}

/// Total-space element the splitting assigns to the triple (v1, v2, v0).
template <typename S>
DvsElement<S> decomposition_apply(const Splitting<S>& s, const Vector<S>& v1,
                                  const Vector<S>& v2, const Vector<S>& v0) {
  const Dims d = s.dims();
  if (v1.size() != d.n1 || v2.size() != d.n2 || v0.size() != d.n0)
    throw Error(ErrorKind::DimMismatch, "decomposition_apply arguments");
  Vector<S> z = v0 + s.mu.eval(v1, v2);
  return {v1, v2, z};
}

/// Translates a splitting by a bilinear offset; this is a free and transitive
/// action of the additive group of bilinear maps on the set of splittings.
template <typename S>
Splitting<S> splitting_translate(const Splitting<S>& s, const BilinearMap<S>& m) {
  if (!(s.dims() == m.dims())) throw Error(ErrorKind::DimMismatch, "splitting_translate offset");
  return {s.mu + m};
}

/// The unique offset carrying splitting `a` to splitting `b`.
template <typename S>
BilinearMap<S> decomposition_transition(const Splitting<S>& a, const Splitting<S>& b) {
  if (!(a.dims() == b.dims())) throw Error(ErrorKind::DimMismatch, "decomposition_transition");
  return b.mu - a.mu;
}

/// Linear section of the side-II bundle: y -> (base, y, slope y).
template <typename S>
struct LinearSection {
  Vector<S> base;  // fixed V1 point
  Matrix<S> slope; // V2 -> V0

  friend bool operator==(const LinearSection&, const LinearSection&) = default;
};

/// Core-valued section of the side-II bundle: y -> (0, y, value).
template <typename S>
struct CoreSection {
  Vector<S> value;

  friend bool operator==(const CoreSection&, const CoreSection&) = default;
};

template <typename S>
DvsElement<S> section_eval(const Dims& d, const LinearSection<S>& s, const Vector<S>& y) {
  if (s.base.size() != d.n1 || s.slope.rows() != d.n0 || s.slope.cols() != d.n2 || y.size() != d.n2)
    throw Error(ErrorKind::DimMismatch, "section_eval (linear)");
  return {s.base, y, s.slope * y};
}

template <typename S>
DvsElement<S> section_eval(const Dims& d, const CoreSection<S>& s, const Vector<S>& y) {
  if (s.value.size() != d.n0 || y.size() != d.n2)
    throw Error(ErrorKind::DimMismatch, "section_eval (core)");
  return {Vector<S>(d.n1), y, s.value};
}

} // namespace dvb

#endif
