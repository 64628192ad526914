#ifndef QBATTERY_ENTANGLE_HPP
#define QBATTERY_ENTANGLE_HPP

#include "qbattery/model.hpp"

namespace qbattery {
namespace entangle {

enum class ConcurrenceRoute { closed_form, spectral };

struct ConcurrenceResult {
  double value;  // in [0, 1]
  ConcurrenceRoute route;
};

/// Wootters concurrence from the spin-flipped product rho * rho~ with
/// rho~ = (sy x sy) conj(rho) (sy x sy).
ConcurrenceResult concurrence_spectral(const JointState& j);

/// Closed form sin^2(theta/2) |sin(2 J t)|; lossless dynamics only
/// (gamma != 0 is rejected).
ConcurrenceResult concurrence_closed(const BlochState& b,
                                     const SystemParams& p, double t);

}  // namespace entangle
}  // namespace qbattery

#endif
