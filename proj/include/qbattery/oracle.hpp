#ifndef QBATTERY_ORACLE_HPP
#define QBATTERY_ORACLE_HPP

#include <array>
#include <vector>

#include "qbattery/model.hpp"

namespace qbattery {
namespace oracle {

/// RK4 settings. Fixed mode uses h = min(1/(steps_per_unit * max rate),
/// sample spacing); adaptive mode is classical step doubling.
struct IntegratorOptions {
  bool adaptive = false;
  double steps_per_unit = 50.0;
  double tol = 1e-10;  // per-step error estimate bound, adaptive mode
};

struct JointTrajectory {
  std::vector<double> times;
  std::vector<JointState> states;
  IntegratorOptions meta;
};

enum class MomentSystem { first, second };

struct MomentTrajectory {
  std::vector<double> times;
  std::vector<std::array<cplx, 4>> states;
  IntegratorOptions meta;
};

/// Integrate the full 16-dimensional (Lindblad) Liouville equation and
/// sample n_samples states uniformly on [0, t_max].
JointTrajectory integrate_liouvillian(const BlochState& b,
                                      const SystemParams& p, double t_max,
                                      int n_samples,
                                      const IntegratorOptions& opts = {});

/// Integrate i d/dt v = M v for the first- or second-moment generator with
/// the initial conditions implied by the product initial state.
MomentTrajectory integrate_moments(MomentSystem which, const BlochState& b,
                                   const SystemParams& p, double t_max,
                                   int n_samples,
                                   const IntegratorOptions& opts = {});

/// Partial trace over the charger: population rho22+rho33, coherence
/// <sb> = rho20 + rho31.
QubitState reduced_battery_state(const JointState& j);

/// Matrix exponential by scaling-and-squaring with a Pade [6/6] approximant.
/// Second oracle for the 4x4 moment generators.
CMatrix expm(const CMatrix& m);

}  // namespace oracle
}  // namespace qbattery

#endif
