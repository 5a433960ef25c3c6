#ifndef DVB_DIMS_HPP
#define DVB_DIMS_HPP

#include <cstddef>
#include <string>

namespace dvb {

/// Dimension triple (n1, n2, n0) of a double vector space R^[n]:
/// side spaces V1, V2 and core V0.
struct Dims {
  std::size_t n1 = 0;
  std::size_t n2 = 0;
  std::size_t n0 = 0;

  friend bool operator==(const Dims&, const Dims&) = default;

  std::size_t total() const { return n1 + n2 + n0; }

  std::string to_string() const {
    return "(" + std::to_string(n1) + "," + std::to_string(n2) + "," + std::to_string(n0) + ")";
  }
};

/// Dimension triple of the side-I dual: the V2 and V0 roles swap.
inline Dims dual_dims(const Dims& d) { return Dims{d.n1, d.n0, d.n2}; }

} // namespace dvb

#endif
