#include "qbattery/thermo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qbattery {
namespace thermo {

std::pair<double, double> passive_eigenvalues(const QubitState& q) {
  const double n = q.population;
  double radicand = 1.0 + 4.0 * std::norm(q.coherence) - 4.0 * n * (1.0 - n);
  if (radicand < -1e-12) {
    throw std::invalid_argument(
        "passive_eigenvalues: state violates positivity");
  }
  // states inside the positivity guard band can push the radicand slightly
  // past [0, 1]; clamp so 0 <= lambda- <= 1/2 always holds
  radicand = std::clamp(radicand, 0.0, 1.0);
  const double root = std::sqrt(radicand);
  return {0.5 * (1.0 - root), 0.5 * (1.0 + root)};
}

ThermoReport report(const QubitState& q, double omega_b) {
  if (!(omega_b > 0.0)) {
    throw std::invalid_argument("report: omega_b must be positive");
  }
  const double inv = q.population - 0.5;
  const double coh = std::abs(q.coherence);
  const double r = std::min(std::sqrt(inv * inv + coh * coh), 0.5);

  ThermoReport out;
  out.inversion = inv;
  out.coherence = coh;
  out.energy = omega_b * (0.5 + inv);
  out.passive_energy = omega_b * (0.5 - r);
  out.active_energy = omega_b * (0.5 + r);
  out.ergotropy = omega_b * (inv + r);
  out.antiergotropy = omega_b * (inv - r);
  out.capacity = 2.0 * omega_b * r;
  out.variance =
      omega_b * omega_b * q.population * (1.0 - q.population);

  // Spectral cross-check: the same energies through lambda+-.
  const auto [lo, hi] = passive_eigenvalues(q);
  const double tol = 1e-12 * std::max(1.0, omega_b);
  if (std::abs(out.passive_energy - omega_b * lo) > tol ||
      std::abs(out.active_energy - omega_b * hi) > tol) {
    throw std::logic_error(
        "thermo::report: decomposition and spectral routes disagree");
  }
  return out;
}

}  // namespace thermo
}  // namespace qbattery
