#ifndef QBATTERY_OPTIMIZE_HPP
#define QBATTERY_OPTIMIZE_HPP

#include "qbattery/model.hpp"

namespace qbattery {
namespace optimize {

/// Roots and derived prefactors of the transcendental equations governing
/// the optimal charging times.
struct TranscendentalConstants {
  double A;  // tan(A) = 2A, A in (pi/4, pi/2)
  double B;  // sin^2(A)/A
  double C;  // 1 + 2C tan(2C) = 0, C near 1.4
  double D;  // -cos(2C)/C
  double K;  // -A tan(2A)/4
  double L;  // K/A
};

TranscendentalConstants solve_constants();

enum class Objective { energy, power, ergotropy, ergotropic_power };

struct OptimalPoint {
  double t_star;
  double value;
  Objective objective;
};

/// First local maximum of the chosen objective for t > 0: coarse scan over
/// (0, 2 pi/G] followed by golden-section refinement and a derivative-sign
/// bisection polish. Throws std::invalid_argument for theta = 0 (degenerate
/// objective) and RegimeError outside strong coupling.
OptimalPoint optimal(Objective objective, const BlochState& b,
                     const SystemParams& p);

/// Sigmoid approximant for the optimal ergotropic-power charging time, in
/// units of 1/J (returns J*t). Exact endpoints 7/6 at theta=0, 7/5 at pi.
double approx_t_ergotropic_power(double theta);

/// tanh approximant for the peak ergotropic power, in units of omega_b*J.
/// Exact values 0, 1/3, 2/3 at theta = 0, pi/2, pi.
double approx_peak_ergotropic_power(double theta);

}  // namespace optimize
}  // namespace qbattery

#endif
