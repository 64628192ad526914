#ifndef QBATTERY_THERMO_HPP
#define QBATTERY_THERMO_HPP

#include <utility>

#include "qbattery/model.hpp"

namespace qbattery {
namespace thermo {

/// Per-state thermodynamic bundle. Energies carry omega_b; inversion and
/// coherence are dimensionless.
struct ThermoReport {
  double energy;
  double passive_energy;
  double active_energy;
  double ergotropy;
  double antiergotropy;  // <= 0 as defined (E minus the active-state energy)
  double capacity;
  double inversion;
  double coherence;
  double variance;
};

/// Passive-state eigenvalues (lambda-, lambda+) of the 2x2 battery state.
std::pair<double, double> passive_eigenvalues(const QubitState& q);

/// Full report; implemented through the inversion/coherence decomposition
/// with the spectral lambda+- route as an internal consistency check.
ThermoReport report(const QubitState& q, double omega_b);

}  // namespace thermo
}  // namespace qbattery

#endif
