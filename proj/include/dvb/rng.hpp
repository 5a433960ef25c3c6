#ifndef DVB_RNG_HPP
#define DVB_RNG_HPP

#include <cstdint>

#include "dvb/linalg.hpp"
#include "dvb/scalar.hpp"

namespace dvb {

/// SplitMix64. Hand-rolled so that streams are identical across platforms and
/// standard-library versions; reported counterexamples must be reproducible
/// from (seed, trial) alone.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  /// Independent stream for one trial; lets suites shard trials without
  /// changing the values any trial sees.
  static Rng for_trial(std::uint64_t seed, std::uint64_t trial) {
    Rng mix(seed ^ (0x9e3779b97f4a7c15ULL * (trial + 1)));
    mix.next_u64();
    return mix;
  }

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [lo, hi] inclusive.
  std::int64_t next_int(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(next_u64() % span);
  }

  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

/// Small random rational: numerator in [-6,6], denominator in {1,2,3}.
/// Small bounds keep exact arithmetic compact through 3x3 inverses.
inline Rat random_rat(Rng& rng) {
  const std::int64_t num = rng.next_int(-6, 6);
  const std::int64_t den = rng.next_int(1, 3);
  return Rat(num, den);
}

inline Rat random_nonzero_rat(Rng& rng) {
  for (;;) {
    Rat r = random_rat(rng);
    if (!(r == 0)) return r;
  }
}

template <typename S>
S random_scalar(Rng& rng);

template <>
inline Rat random_scalar<Rat>(Rng& rng) { return random_rat(rng); }

template <>
inline double random_scalar<double>(Rng& rng) { return 2.0 * rng.next_unit() - 1.0; }

template <typename S>
Vector<S> random_vector(Rng& rng, std::size_t n) {
  Vector<S> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = random_scalar<S>(rng);
  return v;
}

template <typename S>
Matrix<S> random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  Matrix<S> m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_scalar<S>(rng);
  return m;
}

/// Rejection-samples until the determinant is comfortably nonzero; falls back
/// to a guaranteed-invertible unit-triangular product if unlucky.
template <typename S>
Matrix<S> random_invertible(Rng& rng, std::size_t n) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    Matrix<S> m = random_matrix<S>(rng, n, n);
    const S d = det(m);
    if constexpr (ScalarTraits<S>::exact) {
      if (!(d == S(0))) return m;
    } else {
      if (std::abs(to_double(d)) > 0.05) return m;
    }
  }
  Matrix<S> l = Matrix<S>::identity(n), u = Matrix<S>::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i > j) l(i, j) = random_scalar<S>(rng);
      if (i < j) u(i, j) = random_scalar<S>(rng);
    }
  return l * u;
}

} // namespace dvb

#endif
