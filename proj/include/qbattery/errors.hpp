#ifndef QBATTERY_ERRORS_HPP
#define QBATTERY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qbattery {

/// Parameters fall outside the strong-coupling regime J > gamma/4 that the
/// dissipative closed forms assume.
struct RegimeError : std::runtime_error {
  explicit RegimeError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qbattery

#endif
