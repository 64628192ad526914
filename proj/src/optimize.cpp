#include "qbattery/optimize.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "qbattery/analytic.hpp"
#include "qbattery/errors.hpp"

namespace qbattery {
namespace optimize {

namespace {

constexpr double kPi = std::numbers::pi;

// Bisection to ~1e-13 bracket width followed by a couple of Newton steps.
double solve_root(const std::function<double(double)>& fn,
                  const std::function<double(double)>& dfn, double lo,
                  double hi) {
  double flo = fn(lo);
  for (int iter = 0; iter < 200 && hi - lo > 1e-13; ++iter) {
    const double mid = 0.5 * (lo + hi);
    const double fmid = fn(mid);
    if ((flo <= 0.0) == (fmid <= 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  double x = 0.5 * (lo + hi);
  for (int iter = 0; iter < 3; ++iter) x -= fn(x) / dfn(x);
  return x;
}

}  // namespace

TranscendentalConstants solve_constants() {
  TranscendentalConstants k;
  k.A = solve_root([](double x) { return std::tan(x) - 2.0 * x; },
                   [](double x) {
                     const double sec = 1.0 / std::cos(x);
                     return sec * sec - 2.0;
                   },
                   0.8, 1.55);
  k.B = std::sin(k.A) * std::sin(k.A) / k.A;
  k.C = solve_root([](double x) { return 1.0 + 2.0 * x * std::tan(2.0 * x); },
                   [](double x) {
                     const double sec = 1.0 / std::cos(2.0 * x);
                     return 2.0 * std::tan(2.0 * x) + 4.0 * x * sec * sec;
                   },
                   1.3, 1.45);
  k.D = -std::cos(2.0 * k.C) / k.C;
  k.K = -k.A * std::tan(2.0 * k.A) / 4.0;
  k.L = k.K / k.A;
  return k;
}

namespace {

std::function<double(double)> make_objective(Objective objective,
                                             const BlochState& b,
                                             const SystemParams& p) {
  switch (objective) {
    case Objective::energy:
      return [=](double t) { return analytic::energy(b, p, t); };
    case Objective::power:
      return [=](double t) { return analytic::power(b, p, t); };
    case Objective::ergotropy:
      return [=](double t) { return analytic::ergotropy_closed(b, p, t); };
    case Objective::ergotropic_power:
      return [=](double t) {
        if (t == 0.0) return 0.0;
        return analytic::ergotropy_closed(b, p, t) / t;
      };
  }
  throw std::logic_error("unknown objective");
}

}  // namespace

OptimalPoint optimal(Objective objective, const BlochState& b,
                     const SystemParams& p) {
  if (b.theta <= 0.0) {
    throw std::invalid_argument(
        "optimal: objective is identically zero at theta = 0");
  }
  if (p.gamma > 0.0) p.require_strong_coupling();
  const auto fn = make_objective(objective, b, p);

  const double rate = (p.gamma > 0.0) ? p.G() : p.J;
  const double t_hi = 2.0 * kPi / rate;
  const int n_scan = 4096;

  // Coarse scan; the first strict rise followed by a non-increase brackets
  // the first local maximum. Plateaus (the ergotropy zero intervals) never
  // satisfy the strict-rise condition and are skipped.
  std::vector<double> value(n_scan + 1);
  for (int k = 0; k <= n_scan; ++k) {
    value[k] = fn(t_hi * k / n_scan);
  }
  int found = -1;
  for (int k = 1; k < n_scan; ++k) {
    if (value[k] > value[k - 1] && value[k + 1] <= value[k]) {
      found = k;
      break;
    }
  }
  if (found < 0) {
    throw std::runtime_error("optimal: no interior maximum located in scan");
  }
  double lo = t_hi * (found - 1) / n_scan;
  double hi = t_hi * (found + 1) / n_scan;

  // Bisect on the sign of a symmetric-difference derivative. The objective
  // rises at lo and falls at hi, so the sign change is inside.
  const double t_scale = 0.5 * (lo + hi);
  const double h = 1e-6 * t_scale;
  for (int iter = 0; iter < 64 && hi - lo > 1e-13 * t_scale; ++iter) {
    const double mid = 0.5 * (lo + hi);
    const double slope = fn(mid + h) - fn(mid - h);
    if (slope > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  OptimalPoint out;
  out.t_star = 0.5 * (lo + hi);
  out.value = fn(out.t_star);
  out.objective = objective;
  return out;
}

double approx_t_ergotropic_power(double theta) {
  if (theta < 0.0 || theta > kPi) {
    throw std::invalid_argument("theta must lie in [0, pi]");
  }
  const double q = 9.0 * std::sqrt(3.0) / 32.0;
  const double pi52 = std::pow(kPi, 2.5);
  const double u = std::pow(theta / kPi, 2.5);
  // Endpoints are exact by construction of the approximant.
  if (u == 0.0) return 7.0 / 6.0;
  if (u == 1.0) return 7.0 / 5.0;
  return (7.0 / 5.0) * (5.0 / 6.0 + (1.0 / 6.0 + q * pi52) * u) /
         (1.0 + q * std::pow(theta, 2.5));
}

double approx_peak_ergotropic_power(double theta) {
  if (theta < 0.0 || theta > kPi) {
    throw std::invalid_argument("theta must lie in [0, pi]");
  }
  return (std::tanh(theta - kPi / 2.0) / std::tanh(kPi / 2.0) + 1.0) / 3.0;
}

}  // namespace optimize
}  // namespace qbattery
