#ifndef DVB_SCALAR_HPP
#define DVB_SCALAR_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <cstdlib>
#include <string>

#include "dvb/errors.hpp"

namespace dvb {

/// Exact arbitrary-precision rational. The default scalar kind: every identity
/// test over Rat is a no-tolerance equality. Expression templates are disabled
/// so arithmetic results deduce as Rat in generic code.
using Rat = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<boost::multiprecision::backends::cpp_int_backend<>>,
    boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::cpp_int;

/// A value set carries exactly one scalar kind; generic code selects behaviour
/// through this trait. Float-kind comparisons always take an explicit tolerance.
template <typename S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rat> {
  static constexpr bool exact = true;
  static constexpr const char* name = "rational";
};

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static constexpr const char* name = "float";
};

inline double abs_val(double x) { return std::fabs(x); }
inline Rat abs_val(const Rat& x) { return x < 0 ? Rat(-x) : x; }

inline double to_double(double x) { return x; }
inline double to_double(const Rat& x) { return x.convert_to<double>(); }

/// Canonical text form: "p" for integers, "p/q" otherwise, q > 0 reduced.
inline std::string rat_to_string(const Rat& x) {
  const BigInt num = boost::multiprecision::numerator(x);
  const BigInt den = boost::multiprecision::denominator(x);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

/// Accepts "p" or "p/q" with optional sign; q must be nonzero.
inline Rat rat_from_string(const std::string& text) {
  const auto slash = text.find('/');
  BigInt num, den = 1;
  try {
    if (slash == std::string::npos) {
      num = BigInt(text);
    } else {
      num = BigInt(text.substr(0, slash));
      den = BigInt(text.substr(slash + 1));
    }
  } catch (const std::exception&) {
    throw Error(ErrorKind::InputError, "bad rational literal '" + text + "'");
  }
  if (den == 0) throw Error(ErrorKind::InputError, "zero denominator in '" + text + "'");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rat(num, den);
}

inline std::string scalar_to_string(const Rat& x) { return rat_to_string(x); }
inline std::string scalar_to_string(double x) { return std::to_string(x); }

} // namespace dvb

#endif
