#ifndef QBATTERY_ANALYTIC_HPP
#define QBATTERY_ANALYTIC_HPP

#include <utility>

#include "qbattery/model.hpp"

namespace qbattery {
namespace analytic {

/// Closed-form first and second moments at time t. The three-operator
/// moments <sa^dag sa sb> and <sb^dag sb sa> are identically zero and are
/// not carried.
struct MomentSet {
  double n_a;  // <sa^dag sa>
  double n_b;  // <sb^dag sb>
  cplx s_a;    // <sa>
  cplx s_b;    // <sb>
  cplx x_ab;   // <sa^dag sb>
};

/// Damped Rabi amplitude f(t) = (J/G) sin(G t) e^{-gamma t/4}; reduces to
/// sin(J t) at gamma = 0. Requires strong coupling.
double f_dissipative(const SystemParams& p, double t);

/// Charger-side envelope e^{-gamma t/4} (cos(G t) - (gamma/4G) sin(G t));
/// reduces to cos(J t) at gamma = 0.
double charger_envelope(const SystemParams& p, double t);

/// Lossless moments; rejects gamma != 0.
MomentSet moments_lossless(const BlochState& b, const SystemParams& p,
                           double t);

/// Moments for any gamma >= 0 in the strong-coupling regime. Exact: the
/// zero/one-excitation sector closes under the dissipator.
MomentSet moments_dissipative(const BlochState& b, const SystemParams& p,
                              double t);

/// The 4x4 joint density matrix assembled from the closed-form moments.
JointState joint_state(const BlochState& b, const SystemParams& p, double t);

double energy(const BlochState& b, const SystemParams& p, double t);
double power(const BlochState& b, const SystemParams& p, double t);
double variance(const BlochState& b, const SystemParams& p, double t);
double ergotropy_closed(const BlochState& b, const SystemParams& p, double t);
double capacity_closed(const BlochState& b, const SystemParams& p, double t);

/// (inversion I, coherence C) of the battery qubit.
std::pair<double, double> inversion_coherence(const BlochState& b,
                                              const SystemParams& p, double t);

}  // namespace analytic
}  // namespace qbattery

#endif
