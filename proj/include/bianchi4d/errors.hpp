#ifndef BIANCHI4D_ERRORS_HPP
#define BIANCHI4D_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bianchi4d {

/// Bad input from a caller (unknown label, incompatible family, malformed flag).
struct UsageError : std::runtime_error {
  explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Evaluation outside the interval where a solution family is real and nonzero.
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

/// An internal identity that must hold by construction failed to hold.
struct ConsistencyError : std::logic_error {
  explicit ConsistencyError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace bianchi4d

#endif
