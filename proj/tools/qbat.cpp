// qbat: quantum battery charging model front end.
//
// Subcommands: trace (time traces as CSV), optimal (optimal charging points
// over a theta grid), constants (transcendental constant table), verify
// (cross-validation suite). Exit codes: 0 success, 1 verification failure,
// 2 bad input, 3 regime error, 4 I/O error.

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qbattery/cli.hpp"
#include "qbattery/errors.hpp"

namespace {

using qbattery::cli::RunConfig;

constexpr int kExitBadInput = 2;
constexpr int kExitRegime = 3;
constexpr int kExitIo = 4;

std::vector<std::string> split_csv_list(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  for (const std::string& arg : args) {
    std::stringstream ss(arg);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (!item.empty()) out.push_back(item);
    }
  }
  return out;
}

// Writes through `body` either to stdout or to --output.
int with_output(const std::string& path,
                const std::function<int(std::ostream&)>& body) {
  if (path.empty()) {
    const int rc = body(std::cout);
    std::cout.flush();
    return std::cout ? rc : kExitIo;
  }
  std::ofstream file(path);
  if (!file) {
    std::cerr << "qbat: cannot open " << path << " for writing\n";
    return kExitIo;
  }
  const int rc = body(file);
  file.flush();
  if (!file) {
    std::cerr << "qbat: write failure on " << path << "\n";
    return kExitIo;
  }
  return rc;
}

void add_param_flags(CLI::App* cmd, RunConfig& cfg, std::string& theta_spec,
                     std::string& phi_spec, std::string& output) {
  cmd->add_option("--theta", theta_spec,
                  "polar angle or grid start:stop:count; accepts pi, pi/2, "
                  "pi/4, 3pi/4 or radians")
      ->required();
  cmd->add_option("--phi", phi_spec, "azimuthal angle (same formats)");
  cmd->add_option("--omega-b", cfg.omega_b, "transition frequency");
  cmd->add_option("--j", cfg.J, "coupling rate");
  cmd->add_option("--gamma", cfg.gamma, "charger decay rate");
  cmd->add_option("--output", output, "write CSV to file instead of stdout");
  cmd->add_flag("--dimensionless,!--no-dimensionless", cfg.dimensionless,
                "report E/omega_b, P/(omega_b J), t*J (default on)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"two-qubit quantum battery model"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string theta_spec, phi_spec = "0", output, route_spec = "analytic";
  std::vector<std::string> quantity_args;

  CLI::App* trace = app.add_subcommand("trace", "time-trace CSV sweep");
  add_param_flags(trace, cfg, theta_spec, phi_spec, output);
  trace->add_option("--t-max", cfg.t_max, "trace end time")->required();
  trace->add_option("--samples", cfg.samples, "number of time samples")
      ->required();
  trace->add_option("--quantities", quantity_args,
                    "comma-separated quantity list")
      ->required();
  trace->add_option("--route", route_spec, "analytic, oracle or both");

  std::string objective_spec;
  CLI::App* optimal =
      app.add_subcommand("optimal", "optimal charging points over theta");
  add_param_flags(optimal, cfg, theta_spec, phi_spec, output);
  optimal
      ->add_option("--objective", objective_spec,
                   "energy, power, ergotropy or ergotropic_power")
      ->required();

  CLI::App* constants =
      app.add_subcommand("constants", "transcendental constant table");

  std::string level_spec = "quick";
  qbattery::verify::Options verify_opts;
  CLI::App* verify = app.add_subcommand("verify", "cross-validation suite");
  verify->add_option("--level", level_spec, "quick or full");
  verify
      ->add_flag("--tamper-j-flip", verify_opts.tamper_j_flip,
                 "mutation smoke fixture: corrupt the analytic route")
      ->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadInput;
  }

  try {
    if (*constants) {
      qbattery::cli::print_constants(std::cout);
      return 0;
    }
    if (*verify) {
      qbattery::verify::Level level;
      if (level_spec == "quick") {
        level = qbattery::verify::Level::quick;
      } else if (level_spec == "full") {
        level = qbattery::verify::Level::full;
      } else {
        std::cerr << "qbat: --level must be quick or full\n";
        return kExitBadInput;
      }
      return qbattery::cli::run_verify(level, verify_opts, std::cout);
    }

    cfg.thetas = qbattery::cli::parse_theta_grid(theta_spec);
    cfg.phi = qbattery::cli::parse_angle(phi_spec);
    if (*trace) {
      cfg.quantities = split_csv_list(quantity_args);
      cfg.route = qbattery::cli::parse_route(route_spec);
      return with_output(output, [&](std::ostream& out) {
        return qbattery::cli::run_trace(cfg, out);
      });
    }
    const auto objective = qbattery::cli::parse_objective(objective_spec);
    return with_output(output, [&](std::ostream& out) {
      return qbattery::cli::run_optimal(objective, cfg, out);
    });
  } catch (const qbattery::RegimeError& e) {
    std::cerr << "qbat: " << e.what() << "\n";
    return kExitRegime;
  } catch (const std::invalid_argument& e) {
    std::cerr << "qbat: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "qbat: " << e.what() << "\n";
    return kExitBadInput;
  }
}
