#include "qbattery/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "qbattery/analytic.hpp"
#include "qbattery/entangle.hpp"
#include "qbattery/errors.hpp"
#include "qbattery/oracle.hpp"
#include "qbattery/thermo.hpp"

namespace qbattery {
namespace cli {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kBothRouteTol = 1e-6;

struct Sample {
  thermo::ThermoReport report;
  double concurrence = 0.0;
  bool has_concurrence = false;
};

bool wants(const RunConfig& cfg, const std::string& name) {
  return std::find(cfg.quantities.begin(), cfg.quantities.end(), name) !=
         cfg.quantities.end();
}

double quantity_value(const RunConfig& cfg, const Sample& s,
                      const std::string& name, double t) {
  const double e_unit = cfg.dimensionless ? cfg.omega_b : 1.0;
  const double p_unit = cfg.dimensionless ? cfg.omega_b * cfg.J : 1.0;
  if (name == "energy") return s.report.energy / e_unit;
  if (name == "power") {
    return (t == 0.0 ? 0.0 : s.report.energy / t) / p_unit;
  }
  if (name == "variance") return s.report.variance / (e_unit * e_unit);
  if (name == "ergotropy") return s.report.ergotropy / e_unit;
  if (name == "antiergotropy") return s.report.antiergotropy / e_unit;
  if (name == "capacity") return s.report.capacity / e_unit;
  if (name == "passive_energy") return s.report.passive_energy / e_unit;
  if (name == "inversion") return s.report.inversion;
  if (name == "coherence") return s.report.coherence;
  if (name == "concurrence") return s.concurrence;
  throw std::invalid_argument("unknown quantity: " + name);
}

Sample analytic_sample(const RunConfig& cfg, const BlochState& b,
                       const SystemParams& p, double t, bool concurrence) {
  const analytic::MomentSet m = analytic::moments_dissipative(b, p, t);
  Sample s;
  s.report = thermo::report(QubitState(m.n_b, m.s_b), p.omega_b);
  if (concurrence) {
    s.concurrence = entangle::concurrence_closed(b, p, t).value;
    s.has_concurrence = true;
  }
  return s;
}

Sample oracle_sample(const JointState& j, double omega_b, bool concurrence) {
  Sample s;
  s.report = thermo::report(oracle::reduced_battery_state(j), omega_b);
  if (concurrence) {
    s.concurrence = entangle::concurrence_spectral(j).value;
    s.has_concurrence = true;
  }
  return s;
}

void write_header_comment(const RunConfig& cfg, const char* command,
                          std::ostream& out) {
  out << "# qbat " << command << "\n";
  out << "# omega_b=" << format_number(cfg.omega_b)
      << " J=" << format_number(cfg.J)
      << " gamma=" << format_number(cfg.gamma)
      << " phi=" << format_number(cfg.phi);
  if (cfg.t_max > 0.0) {
    out << " t_max=" << format_number(cfg.t_max)
        << " samples=" << cfg.samples;
  }
  out << " dimensionless=" << (cfg.dimensionless ? 1 : 0) << "\n";
}

void validate(const RunConfig& cfg, bool needs_time_grid) {
  if (cfg.thetas.empty()) {
    throw std::invalid_argument("empty theta grid");
  }
  if (needs_time_grid) {
    if (cfg.samples < 2) throw std::invalid_argument("samples must be >= 2");
    if (!(cfg.t_max > 0.0)) {
      throw std::invalid_argument("t_max must be positive");
    }
    if (cfg.quantities.empty()) {
      throw std::invalid_argument("quantities must be non-empty");
    }
    for (const std::string& q : cfg.quantities) {
      const auto& known = known_quantities();
      if (std::find(known.begin(), known.end(), q) == known.end()) {
        throw std::invalid_argument("unknown quantity: " + q);
      }
    }
  }
}

}  // namespace

const std::vector<std::string>& known_quantities() {
  static const std::vector<std::string> names = {
      "energy",       "power",     "variance",       "ergotropy",
      "antiergotropy", "capacity",  "passive_energy", "inversion",
      "coherence",    "concurrence"};
  return names;
}

double parse_angle(const std::string& text) {
  static const std::map<std::string, double> tokens = {
      {"pi", kPi},
      {"pi/2", kPi / 2.0},
      {"pi/4", kPi / 4.0},
      {"3pi/4", 3.0 * kPi / 4.0}};
  const auto it = tokens.find(text);
  if (it != tokens.end()) return it->second;
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw std::invalid_argument("cannot parse angle: " + text);
  }
  return value;
}

std::vector<double> parse_theta_grid(const std::string& text) {
  const size_t first = text.find(':');
  if (first == std::string::npos) return {parse_angle(text)};
  const size_t second = text.find(':', first + 1);
  if (second == std::string::npos || text.find(':', second + 1) != std::string::npos) {
    throw std::invalid_argument("theta grid must be start:stop:count");
  }
  const double start = parse_angle(text.substr(0, first));
  const double stop = parse_angle(text.substr(first + 1, second - first - 1));
  int count = 0;
  const std::string tail = text.substr(second + 1);
  const auto [ptr, ec] =
      std::from_chars(tail.data(), tail.data() + tail.size(), count);
  if (ec != std::errc{} || ptr != tail.data() + tail.size() || count < 1) {
    throw std::invalid_argument("bad theta grid count: " + tail);
  }
  std::vector<double> grid(count);
  for (int k = 0; k < count; ++k) {
    grid[k] = (count == 1) ? start
                           : start + (stop - start) * k / (count - 1);
  }
  return grid;
}

Route parse_route(const std::string& text) {
  if (text == "analytic") return Route::analytic;
  if (text == "oracle") return Route::oracle;
  if (text == "both") return Route::both;
  throw std::invalid_argument("route must be analytic, oracle or both");
}

optimize::Objective parse_objective(const std::string& text) {
  if (text == "energy") return optimize::Objective::energy;
  if (text == "power") return optimize::Objective::power;
  if (text == "ergotropy") return optimize::Objective::ergotropy;
  if (text == "ergotropic_power") {
    return optimize::Objective::ergotropic_power;
  }
  throw std::invalid_argument("unknown objective: " + text);
}

std::string format_number(double value) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

int run_trace(const RunConfig& cfg, std::ostream& out) {
  validate(cfg, true);
  const SystemParams p(cfg.omega_b, cfg.J, cfg.gamma);
  const bool want_conc = wants(cfg, "concurrence");
  const bool use_analytic = cfg.route != Route::oracle;
  const bool use_oracle = cfg.route != Route::analytic;

  write_header_comment(cfg, "trace", out);
  out << "theta,t";
  for (const std::string& q : cfg.quantities) {
    if (use_analytic) out << "," << q << "_analytic";
    if (use_oracle) out << "," << q << "_oracle";
    if (use_analytic && use_oracle) out << "," << q << "_absdiff";
  }
  out << "\n";

  oracle::IntegratorOptions opts;
  opts.steps_per_unit = 200.0;

  bool mismatch = false;
  for (double theta : cfg.thetas) {
    const BlochState b(theta, cfg.phi);
    oracle::JointTrajectory traj;
    if (use_oracle) {
      traj = oracle::integrate_liouvillian(b, p, cfg.t_max, cfg.samples, opts);
    }
    for (int k = 0; k < cfg.samples; ++k) {
      const double t = cfg.t_max * k / (cfg.samples - 1);
      out << format_number(theta) << ","
          << format_number(cfg.dimensionless ? t * cfg.J : t);
      Sample sa, so;
      if (use_analytic) sa = analytic_sample(cfg, b, p, t, want_conc);
      if (use_oracle) so = oracle_sample(traj.states[k], p.omega_b, want_conc);
      for (const std::string& q : cfg.quantities) {
        double va = 0.0, vo = 0.0;
        if (use_analytic) {
          va = quantity_value(cfg, sa, q, t);
          out << "," << format_number(va);
        }
        if (use_oracle) {
          vo = quantity_value(cfg, so, q, t);
          out << "," << format_number(vo);
        }
        if (use_analytic && use_oracle) {
          const double diff = std::abs(va - vo);
          if (diff > kBothRouteTol) mismatch = true;
          out << "," << format_number(diff);
        }
      }
      out << "\n";
    }
  }
  return mismatch ? 1 : 0;
}

int run_optimal(optimize::Objective objective, const RunConfig& cfg,
                std::ostream& out) {
  validate(cfg, false);
  const SystemParams p(cfg.omega_b, cfg.J, cfg.gamma);
  const bool power_like = objective == optimize::Objective::power ||
                          objective == optimize::Objective::ergotropic_power;
  const bool approx = objective == optimize::Objective::ergotropic_power;

  write_header_comment(cfg, "optimal", out);
  out << "theta,t_star,value,approx_t,approx_value\n";
  for (double theta : cfg.thetas) {
    // theta = 0 is a degenerate objective; report the theta -> 0+ limit.
    const double theta_eval = (theta == 0.0) ? 1e-3 : theta;
    const auto point =
        optimize::optimal(objective, BlochState(theta_eval, cfg.phi), p);
    const double t_out =
        cfg.dimensionless ? point.t_star * cfg.J : point.t_star;
    const double unit =
        cfg.dimensionless ? (power_like ? cfg.omega_b * cfg.J : cfg.omega_b)
                          : 1.0;
    out << format_number(theta) << "," << format_number(t_out) << ","
        << format_number(point.value / unit);
    if (approx) {
      double at = optimize::approx_t_ergotropic_power(theta);
      double av = optimize::approx_peak_ergotropic_power(theta);
      if (!cfg.dimensionless) {
        at /= cfg.J;
        av *= cfg.omega_b * cfg.J;
      }
      out << "," << format_number(at) << "," << format_number(av);
    } else {
      out << ",,";
    }
    out << "\n";
  }
  return 0;
}

void print_constants(std::ostream& out) {
  const auto k = optimize::solve_constants();
  struct Row {
    const char* name;
    double value;
    double residual;
  };
  const Row rows[] = {
      {"A", k.A, std::abs(std::tan(k.A) - 2.0 * k.A)},
      {"B", k.B, std::abs(k.B - std::sin(k.A) * std::sin(k.A) / k.A)},
      {"C", k.C, std::abs(1.0 + 2.0 * k.C * std::tan(2.0 * k.C))},
      {"D", k.D, std::abs(k.D + std::cos(2.0 * k.C) / k.C)},
      {"K", k.K, std::abs(k.K + k.A * std::tan(2.0 * k.A) / 4.0)},
      {"L", k.L, std::abs(k.L - k.K / k.A)},
  };
  out << "constant  value             defining-equation residual\n";
  char buf[96];
  for (const Row& r : rows) {
    std::snprintf(buf, sizeof(buf), "%-9s %.12g    %.3g\n", r.name, r.value,
                  r.residual);
    out << buf;
  }
}

int run_verify(verify::Level level, const verify::Options& opts,
               std::ostream& out) {
  const auto results = verify::run(level, opts);
  bool all_passed = true;
  for (const auto& r : results) {
    all_passed = all_passed && r.passed;
    char buf[160];
    std::snprintf(buf, sizeof(buf), "[%s] %-48s max dev %.3e (tol %.1e)\n",
                  r.passed ? "PASS" : "FAIL", r.name.c_str(), r.observed,
                  r.tolerance);
    out << buf;
  }
  out << (all_passed ? "verification passed" : "verification FAILED") << " ("
      << results.size() << " checks)\n";
  return all_passed ? 0 : 1;
}

}  // namespace cli
}  // namespace qbattery
