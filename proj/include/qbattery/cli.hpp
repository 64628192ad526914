#ifndef QBATTERY_CLI_HPP
#define QBATTERY_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "qbattery/optimize.hpp"
#include "qbattery/verify.hpp"

namespace qbattery {
namespace cli {

enum class Route { analytic, oracle, both };

struct RunConfig {
  std::vector<double> thetas;
  double phi = 0.0;
  double omega_b = 1.0;
  double J = 1.0;
  double gamma = 0.0;
  double t_max = 0.0;
  int samples = 0;
  std::vector<std::string> quantities;
  Route route = Route::analytic;
  bool dimensionless = true;
};

/// Names accepted in --quantities.
const std::vector<std::string>& known_quantities();

/// Parses "pi", "pi/2", "pi/4", "3pi/4" or a decimal radian value.
double parse_angle(const std::string& text);

/// Single angle or inclusive grid "start:stop:count".
std::vector<double> parse_theta_grid(const std::string& text);

Route parse_route(const std::string& text);
optimize::Objective parse_objective(const std::string& text);

/// Shortest round-trip decimal representation.
std::string format_number(double value);

/// Time trace CSV; returns 0, or 1 when route=both finds an analytic/oracle
/// absolute difference above 1e-6.
int run_trace(const RunConfig& cfg, std::ostream& out);

/// Optimal-point sweep CSV over the theta grid. theta = 0 rows are computed
/// at the theta -> 0+ limit (theta = 1e-3).
int run_optimal(optimize::Objective objective, const RunConfig& cfg,
                std::ostream& out);

/// Table of the six transcendental constants and their residuals.
void print_constants(std::ostream& out);

/// Runs the verification suite and prints the report; returns 0 or 1.
int run_verify(verify::Level level, const verify::Options& opts,
               std::ostream& out);

}  // namespace cli
}  // namespace qbattery

#endif
