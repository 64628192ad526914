#include "qbattery/entangle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace qbattery {
namespace entangle {

namespace {

CMatrix spin_flip_operator() {
  CMatrix sy(2);
  sy(0, 1) = cplx{0.0, -1.0};
  sy(1, 0) = cplx{0.0, 1.0};
  return kron(sy, sy);
}

}  // namespace

ConcurrenceResult concurrence_spectral(const JointState& j) {
  static const CMatrix yy = spin_flip_operator();
  const CMatrix rho_tilde = yy * j.rho.conjugate() * yy;
  // The Wootters values are the eigenvalues of R = sqrt(sqrt(rho) rho~
  // sqrt(rho)); the inner matrix is Hermitian PSD, so its spectrum carries
  // full absolute accuracy (the eigenvalues of rho*rho~ are the same, but a
  // non-symmetric solve loses ~eps^(1/m) at the multiple zero roots).
  const CMatrix root = sqrt_psd(j.rho);
  CMatrix m = root * rho_tilde * root;
  // symmetrize away multiplication round-off before the Hermitian solve
  m += m.adjoint();
  m *= 0.5;
  const Spectrum spec = eig_hermitian(m);

  const double floor = 1e-14 * std::max(1.0, m.max_abs());
  std::array<double, 4> lambdas;
  for (int k = 0; k < 4; ++k) {
    // below machine resolution of the product the eigenvalue is exactly the
    // numerical zero; clamping keeps sqrt from amplifying it to ~1e-8
    const double value = spec.eigenvalues[k];
    lambdas[k] = (value <= floor) ? 0.0 : std::sqrt(value);
  }
  std::sort(lambdas.begin(), lambdas.end(), std::greater<>());
  const double c = lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3];
  return {std::clamp(c, 0.0, 1.0), ConcurrenceRoute::spectral};
}

ConcurrenceResult concurrence_closed(const BlochState& b,
                                     const SystemParams& p, double t) {
  if (p.gamma != 0.0) {
    throw std::invalid_argument(
        "concurrence_closed: only defined for gamma = 0");
  }
  if (!(t >= 0.0)) throw std::invalid_argument("time must be non-negative");
  const double s = std::sin(b.theta / 2.0) * std::sin(b.theta / 2.0);
  return {s * std::abs(std::sin(2.0 * p.J * t)),
          ConcurrenceRoute::closed_form};
}

}  // namespace entangle
}  // namespace qbattery
