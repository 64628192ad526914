#include "qbattery/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qbattery {
namespace oracle {

namespace {

constexpr cplx kImag{0.0, 1.0};

using Vec = std::vector<cplx>;

double max_abs(const Vec& v) {
  double m = 0.0;
  for (const cplx& z : v) m = std::max(m, std::abs(z));
  return m;
}

Vec rk4_step(const CMatrix& gen, const Vec& y, double h) {
  Vec k1 = qbattery::apply(gen, y);
  Vec tmp(y.size());
  for (size_t i = 0; i < y.size(); ++i) tmp[i] = y[i] + 0.5 * h * k1[i];
  Vec k2 = qbattery::apply(gen, tmp);
  for (size_t i = 0; i < y.size(); ++i) tmp[i] = y[i] + 0.5 * h * k2[i];
  Vec k3 = qbattery::apply(gen, tmp);
  for (size_t i = 0; i < y.size(); ++i) tmp[i] = y[i] + h * k3[i];
  Vec k4 = qbattery::apply(gen, tmp);
  Vec out(y.size());
  for (size_t i = 0; i < y.size(); ++i) {
    out[i] = y[i] + (h / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  }
  return out;
}

// Advance y from t to t + span with fixed substeps.
void advance_fixed(const CMatrix& gen, Vec& y, double span, double rate,
                   double steps_per_unit) {
  const int n_sub =
      std::max(1, static_cast<int>(std::ceil(span * rate * steps_per_unit)));
  const double h = span / n_sub;
  for (int k = 0; k < n_sub; ++k) y = rk4_step(gen, y, h);
}

// Step-doubling adaptive RK4 with local extrapolation.
void advance_adaptive(const CMatrix& gen, Vec& y, double span, double tol,
                      double h_min, double* h_inout) {
  double remaining = span;
  double h = std::min(*h_inout, span);
  while (remaining > 0.0) {
    h = std::min(h, remaining);
    if (h < h_min) {
      std::ostringstream msg;
      msg << "adaptive integration: step underflow, h = " << h
          << " below floor " << h_min;
      throw std::runtime_error(msg.str());
    }
    const Vec full = rk4_step(gen, y, h);
    Vec half = rk4_step(gen, y, 0.5 * h);
    half = rk4_step(gen, half, 0.5 * h);
    double err = 0.0;
    for (size_t i = 0; i < y.size(); ++i) {
      err = std::max(err, std::abs(half[i] - full[i]));
    }
    err /= 15.0;
    const double bound = tol * std::max(1.0, max_abs(y));
    if (err <= bound) {
      for (size_t i = 0; i < y.size(); ++i) {
        y[i] = half[i] + (half[i] - full[i]) / 15.0;
      }
      remaining -= h;
      if (err > 0.0) {
        h *= std::min(4.0, 0.9 * std::pow(bound / err, 0.2));
      } else {
        h *= 4.0;
      }
    } else {
      h *= std::max(0.1, 0.9 * std::pow(bound / err, 0.2));
    }
  }
  *h_inout = h;
}

std::vector<double> sample_times(double t_max, int n_samples) {
  if (n_samples < 2) {
    throw std::invalid_argument("n_samples must be at least 2");
  }
  if (!(t_max > 0.0)) {
    throw std::invalid_argument("t_max must be positive");
  }
  std::vector<double> times(n_samples);
  for (int k = 0; k < n_samples; ++k) {
    times[k] = t_max * k / (n_samples - 1);
  }
  return times;
}

template <typename StateFn>
void run_integration(const CMatrix& gen, Vec& y, const SystemParams& p,
                     const std::vector<double>& times,
                     const IntegratorOptions& opts, StateFn&& record) {
  const double rate = std::max({p.J, p.omega_b, p.gamma});
  const double t_max = times.back();
  double h_adaptive = 1.0 / (rate * opts.steps_per_unit);
  record(y);
  for (size_t k = 1; k < times.size(); ++k) {
    const double span = times[k] - times[k - 1];
    if (opts.adaptive) {
      advance_adaptive(gen, y, span, opts.tol, 1e-12 * t_max, &h_adaptive);
    } else {
      advance_fixed(gen, y, span, rate, opts.steps_per_unit);
    }
    record(y);
  }
}

}  // namespace

JointTrajectory integrate_liouvillian(const BlochState& b,
                                      const SystemParams& p, double t_max,
                                      int n_samples,
                                      const IntegratorOptions& opts) {
  const CMatrix gen = liouvillian(p);
  Vec y = vectorize(initial_joint_state(b).rho);
  JointTrajectory traj;
  traj.times = sample_times(t_max, n_samples);
  traj.meta = opts;
  traj.states.reserve(n_samples);
  run_integration(gen, y, p, traj.times, opts, [&](const Vec& v) {
    traj.states.emplace_back(unvectorize(v, 4));
  });
  return traj;
}

MomentTrajectory integrate_moments(MomentSystem which, const BlochState& b,
                                   const SystemParams& p, double t_max,
                                   int n_samples,
                                   const IntegratorOptions& opts) {
  CMatrix gen = (which == MomentSystem::second) ? moment_generator_second(p)
                                                : moment_generator_first(p);
  gen *= -kImag;  // i dv/dt = M v  ->  dv/dt = -i M v
  const double half = std::sin(b.theta / 2.0);
  Vec y(4, cplx{});
  if (which == MomentSystem::second) {
    y[0] = half * half;
  } else {
    y[0] = 0.5 * std::polar(std::sin(b.theta), b.phi);
  }
  MomentTrajectory traj;
  traj.times = sample_times(t_max, n_samples);
  traj.meta = opts;
  traj.states.reserve(n_samples);
  run_integration(gen, y, p, traj.times, opts, [&](const Vec& v) {
    traj.states.push_back({v[0], v[1], v[2], v[3]});
  });
  return traj;
}

QubitState reduced_battery_state(const JointState& j) {
  const CMatrix& rho = j.rho;
  const double population = rho(2, 2).real() + rho(3, 3).real();
  const cplx coherence = rho(2, 0) + rho(3, 1);
  return QubitState(population, coherence);
}

CMatrix expm(const CMatrix& m) {
  // Scale so the Pade [6/6] approximant is well inside its accuracy region.
  const int n = m.dim();
  double norm = 0.0;
  for (int i = 0; i < n; ++i) {
    double row = 0.0;
    for (int j = 0; j < n; ++j) row += std::abs(m(i, j));
    norm = std::max(norm, row);
  }
  int squarings = 0;
  double scale = 1.0;
  while (norm * scale > 0.5) {
    scale *= 0.5;
    ++squarings;
  }
  CMatrix a = m;
  a *= scale;

  static const double c[7] = {1.0,       1.0 / 2.0,    5.0 / 44.0,
                              1.0 / 66.0, 1.0 / 792.0, 1.0 / 15840.0,
                              1.0 / 665280.0};
  const CMatrix id = CMatrix::identity(n);
  const CMatrix a2 = a * a;
  const CMatrix a4 = a2 * a2;
  const CMatrix a6 = a4 * a2;

  CMatrix u = c[1] * id + c[3] * a2 + c[5] * a4;
  u = a * u;
  CMatrix v = c[0] * id + c[2] * a2 + c[4] * a4 + c[6] * a6;

  CMatrix num = v + u;
  CMatrix den = v - u;
  CMatrix r = solve(std::move(den), std::move(num));
  for (int s = 0; s < squarings; ++s) r = r * r;
  return r;
}

}  // namespace oracle
}  // namespace qbattery
