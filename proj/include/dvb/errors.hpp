#ifndef DVB_ERRORS_HPP
#define DVB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dvb {

/// Failure kinds surfaced by library operations.
enum class ErrorKind {
  DimMismatch,       // operands built over different dimension triples
  BaseMismatch,      // fiberwise operation on elements over different base points
  Singular,          // a block that must be invertible is not
  InputError,        // malformed or precondition-violating input
  ToleranceNotMet,   // iterative refinement could not certify the requested tolerance
  NoOverlap,         // path step or fiber op across charts with no overlap/route
  NotACocycle,       // transition data fails the cocycle identities
  NotASection,       // section data fails a structural requirement
  PreconditionFailed // a stated precondition of a compound check does not hold
};

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::DimMismatch: return "DimMismatch";
    case ErrorKind::BaseMismatch: return "BaseMismatch";
    case ErrorKind::Singular: return "Singular";
    case ErrorKind::InputError: return "InputError";
    case ErrorKind::ToleranceNotMet: return "ToleranceNotMet";
    case ErrorKind::NoOverlap: return "NoOverlap";
    case ErrorKind::NotACocycle: return "NotACocycle";
    case ErrorKind::NotASection: return "NotASection";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

} // namespace dvb

#endif
