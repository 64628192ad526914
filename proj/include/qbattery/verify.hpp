#ifndef QBATTERY_VERIFY_HPP
#define QBATTERY_VERIFY_HPP

#include <string>
#include <vector>

namespace qbattery {
namespace verify {

enum class Level { quick, full };

struct Options {
  /// Mutation smoke fixture: flips the sign the coupling imprints on the
  /// analytic cross moments so the closed-form/oracle comparison must fail.
  bool tamper_j_flip = false;
};

struct CheckResult {
  std::string name;
  double tolerance;
  double observed;  // maximum deviation seen
  bool passed;
};

/// Cross-validation suite over all modules. quick targets a few seconds,
/// full runs the dense grids and perturbative checks.
std::vector<CheckResult> run(Level level, const Options& opts = {});

}  // namespace verify
}  // namespace qbattery

#endif
