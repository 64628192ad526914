#ifndef QBATTERY_MODEL_HPP
#define QBATTERY_MODEL_HPP

#include "qbattery/smallmat.hpp"

namespace qbattery {

// Two-qubit basis order used everywhere: {|00>, |10>, |01>, |11>}, first bit
// is the charger (a), second the battery (b). Charger excitation varies
// fastest, so joint index = a + 2*b.

/// Charger preparation on the Bloch sphere. Angles are normalized on
/// construction: theta clamped to [0, pi] is an error instead, phi wrapped
/// into [0, 2*pi).
struct BlochState {
  BlochState(double theta, double phi = 0.0);
  double theta;
  double phi;
};

/// Transition frequency, coupling rate and charger decay rate, with hbar = 1.
struct SystemParams {
  SystemParams(double omega_b, double J, double gamma = 0.0);
  double omega_b;
  double J;
  double gamma;

  bool strong_coupling() const { return J > gamma / 4.0; }
  /// Damped Rabi frequency sqrt(J^2 - (gamma/4)^2); requires strong coupling.
  double G() const;
  /// Throws RegimeError unless J > gamma/4.
  void require_strong_coupling() const;
};

/// Battery-qubit reduced state: excited population <sb^dag sb> and
/// coherence <sb>.
struct QubitState {
  QubitState(double population, cplx coherence);
  double population;
  cplx coherence;
};

/// 4x4 two-qubit density matrix. Validates Hermiticity, unit trace and
/// positivity on construction.
struct JointState {
  explicit JointState(CMatrix rho);
  CMatrix rho;
};

/// rho = |psi><psi| with |psi> = (cos(theta/2)|0>_a + e^{i phi} sin(theta/2)|1>_a) x |0>_b.
JointState initial_joint_state(const BlochState& b);

/// H = omega_b (sa^dag sa + sb^dag sb) + J (sa^dag sb + sb^dag sa), dim 4.
CMatrix hamiltonian(const SystemParams& p);

/// GKSL generator acting on column-stacked rho:
/// d rho/dt = -i[H, rho] + (gamma/2)(2 sa rho sa^dag - {sa^dag sa, rho}).
CMatrix liouvillian(const SystemParams& p);

/// Generator of the second-moment vector (<sa^dag sa>, <sb^dag sb>,
/// <sa^dag sb>, <sb^dag sa>), including the imaginary diagonal shifts
/// (-i gamma, 0, -i gamma/2, -i gamma/2) when gamma > 0.
CMatrix moment_generator_second(const SystemParams& p);

/// Generator of the first-moment vector (<sa>, <sb>, <sa^dag sa sb>,
/// <sb^dag sb sa>), with diagonal shifts (-i gamma/2, 0, -i gamma,
/// -i gamma/2) when gamma > 0.
CMatrix moment_generator_first(const SystemParams& p);

/// Charger and battery lowering operators in the fixed basis order.
CMatrix sigma_a();
CMatrix sigma_b();

/// Column-stacking vectorization and its inverse.
std::vector<cplx> vectorize(const CMatrix& rho);
CMatrix unvectorize(const std::vector<cplx>& v, int dim);

}  // namespace qbattery

#endif
