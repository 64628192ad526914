// Acceptance gate: one printed pass/fail line per criterion, nonzero exit on
// any failure. Tolerances are pinned here and intentionally duplicated from
// the unit suites.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <vector>

#include "qbattery/analytic.hpp"
#include "qbattery/entangle.hpp"
#include "qbattery/optimize.hpp"
#include "qbattery/oracle.hpp"
#include "qbattery/thermo.hpp"

using namespace qbattery;

namespace {

constexpr double kPi = std::numbers::pi;

int failures = 0;

void line(int index, const char* name, bool ok, double observed, double tol) {
  std::printf("[%s] criterion %2d: %-38s observed %.3e (tol %.1e)\n",
              ok ? "PASS" : "FAIL", index, name, observed, tol);
  if (!ok) ++failures;
}

oracle::IntegratorOptions fine() {
  oracle::IntegratorOptions o;
  o.steps_per_unit = 400.0;
  return o;
}

void criterion_constants() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto c = optimize::solve_constants();
  const double us = std::chrono::duration<double, std::micro>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
  const double printed[6] = {1.165, 0.724, 1.399, 0.673, 0.306, 0.262};
  const double got[6] = {c.A, c.B, c.C, c.D, c.K, c.L};
  double dev = 0.0;
  for (int k = 0; k < 6; ++k) {
    dev = std::max(dev, std::abs(std::floor(got[k] * 1000.0) / 1000.0 -
                                 printed[k]));
  }
  line(1, "transcendental constants, printed digits",
       dev == 0.0 && us < 1000.0, dev, 0.0);
}

void criterion_closed_vs_oracle() {
  double dev = 0.0;
  for (double theta : {0.0, kPi / 4.0, kPi / 2.0, 3.0 * kPi / 4.0, kPi}) {
    for (double gamma : {0.0, 0.1, 0.4}) {
      const SystemParams p(1.0, 1.0, gamma);
      const BlochState b(theta, 0.6);
      const double t_max = 4.0 * kPi;
      const int n = 400;
      const auto traj = oracle::integrate_liouvillian(b, p, t_max, n, fine());
      for (int k = 0; k < n; ++k) {
        const double t = traj.times[k];
        const auto q = oracle::reduced_battery_state(traj.states[k]);
        const auto num = thermo::report(q, p.omega_b);
        const auto m = analytic::moments_dissipative(b, p, t);
        const auto ana = thermo::report(QubitState(m.n_b, m.s_b), p.omega_b);
        dev = std::max(dev, std::abs(num.energy - ana.energy));
        dev = std::max(dev, std::abs(num.ergotropy - ana.ergotropy));
        dev = std::max(dev, std::abs(num.capacity - ana.capacity));
        dev = std::max(dev, std::abs(num.coherence - ana.coherence));
        dev = std::max(dev, std::abs(num.inversion - ana.inversion));
        dev = std::max(dev, std::abs(num.variance - ana.variance));
      }
    }
  }
  line(2, "closed forms vs Lindblad oracle", dev <= 1e-8, dev, 1e-8);
}

void criterion_optimal_identities() {
  const SystemParams p(1.0, 1.0);
  double dev = 0.0;
  for (int k = 1; k <= 33; ++k) {
    const double theta = kPi * k / 33.0;
    const BlochState b(theta);
    const auto e = optimize::optimal(optimize::Objective::energy, b, p);
    const auto g = optimize::optimal(optimize::Objective::ergotropy, b, p);
    const double target = std::pow(std::sin(theta / 2.0), 2);
    dev = std::max(dev, std::abs(e.t_star - kPi / 2.0));
    dev = std::max(dev, std::abs(g.t_star - kPi / 2.0));
    dev = std::max(dev, std::abs(e.value - target));
    dev = std::max(dev, std::abs(g.value - target));
  }
  line(3, "energy/ergotropy optimum identity", dev <= 1e-9, dev, 1e-9);
}

void criterion_zero_plateau() {
  const SystemParams p(1.0, 1.0);
  const BlochState b(kPi);
  double dev = 0.0;
  for (int k = 0; k <= 4000; ++k) {
    const double t = (kPi / 4.0) * k / 4000.0;
    dev = std::max(dev, analytic::ergotropy_closed(b, p, t));
  }
  line(4, "ergotropy zero plateau at theta=pi", dev <= 1e-12, dev, 1e-12);
}

void criterion_concurrence() {
  const SystemParams p(1.0, 1.0);
  double dev = 0.0;
  for (double theta : {0.0, kPi / 4.0, kPi / 2.0, 3.0 * kPi / 4.0, kPi}) {
    const BlochState b(theta, 0.4);
    for (int k = 0; k <= 200; ++k) {
      const double t = 4.0 * kPi * k / 200.0;
      const double closed = entangle::concurrence_closed(b, p, t).value;
      const double spectral =
          entangle::concurrence_spectral(analytic::joint_state(b, p, t)).value;
      dev = std::max(dev, std::abs(closed - spectral));
    }
  }
  const double bell =
      entangle::concurrence_spectral(
          analytic::joint_state(BlochState(kPi), p, kPi / 4.0))
          .value;
  const double product =
      entangle::concurrence_spectral(
          analytic::joint_state(BlochState(kPi), p, kPi / 2.0))
          .value;
  const bool ok =
      dev <= 1e-8 && std::abs(bell - 1.0) <= 1e-9 && product <= 1e-8;
  line(5, "concurrence closed vs Wootters route", ok,
       std::max({dev, std::abs(bell - 1.0), product}), 1e-8);
}

void criterion_dissipative_exactness() {
  double dev = 0.0;
  for (double gamma : {0.05, 0.2, 0.4}) {
    const SystemParams p(1.0, 1.0, gamma);
    const double g = p.G();
    const double want = std::atan2(4.0 * g, gamma) / g;
    const auto pt =
        optimize::optimal(optimize::Objective::energy, BlochState(kPi), p);
    dev = std::max(dev, std::abs(pt.t_star - want) / want);
  }
  line(6, "dissipative optimal-time formula", dev <= 1e-9, dev, 1e-9);
}

void criterion_perturbative() {
  const auto c = optimize::solve_constants();
  const double gj = 0.01;
  const SystemParams p(1.0, 1.0, gj);
  const BlochState b(kPi);
  const double bound = 5.0 * gj * gj;

  const auto e = optimize::optimal(optimize::Objective::energy, b, p);
  const auto w = optimize::optimal(optimize::Objective::power, b, p);
  // first-order predictions in natural units (times in 1/J, energies in
  // omega_b, power in omega_b*J)
  const double t_e1 = (kPi / 2.0) * (1.0 - gj / (2.0 * kPi));
  const double e1 = 1.0 - (kPi / 4.0) * gj;
  const double t_p1 = c.A * (1.0 - c.L * gj);
  const double p1 = c.B * (1.0 - (c.A / 2.0) * gj);

  double dev = std::abs(e.t_star - t_e1);
  dev = std::max(dev, std::abs(e.value - e1));
  dev = std::max(dev, std::abs(w.t_star - t_p1));
  dev = std::max(dev, std::abs(w.value - p1));
  line(7, "perturbative first-order consistency", dev <= bound, dev, bound);
}

void criterion_approximants() {
  const bool endpoints =
      optimize::approx_t_ergotropic_power(0.0) == 7.0 / 6.0 &&
      optimize::approx_t_ergotropic_power(kPi) == 7.0 / 5.0 &&
      optimize::approx_peak_ergotropic_power(0.0) == 0.0 &&
      optimize::approx_peak_ergotropic_power(kPi / 2.0) == 1.0 / 3.0 &&
      optimize::approx_peak_ergotropic_power(kPi) == 2.0 / 3.0;

  const SystemParams p(1.0, 1.0);
  double worst = 0.0;
  for (int k = 1; k <= 16; ++k) {
    const double theta = kPi * k / 16.0;
    const auto pt = optimize::optimal(optimize::Objective::ergotropic_power,
                                      BlochState(theta), p);
    worst = std::max(
        worst, std::abs(optimize::approx_t_ergotropic_power(theta) - pt.t_star));
    worst = std::max(worst,
                     std::abs(optimize::approx_peak_ergotropic_power(theta) -
                              pt.value));
  }
  std::printf("       criterion  8 note: mid-range approximant error %.3e "
              "(reported, not asserted)\n",
              worst);
  line(8, "approximant endpoint exactness", endpoints, endpoints ? 0.0 : 1.0,
       0.0);
}

void criterion_conservation() {
  double dev_excitation = 0.0;
  double dev_state = 0.0;
  double dev_phi = 0.0;

  const SystemParams lossless(1.0, 1.0);
  for (double theta : {0.7, kPi / 2.0, 2.6}) {
    const BlochState b(theta, 1.1);
    const double target = std::pow(std::sin(theta / 2.0), 2);
    for (int k = 0; k <= 100; ++k) {
      const double t = 8.0 * k / 100.0;
      const auto m = analytic::moments_lossless(b, lossless, t);
      dev_excitation =
          std::max(dev_excitation, std::abs(m.n_a + m.n_b - target));
    }
  }

  const SystemParams damped(1.0, 1.0, 0.3);
  const auto traj =
      oracle::integrate_liouvillian(BlochState(2.2, 0.5), damped, 10.0, 41,
                                    fine());
  for (const auto& s : traj.states) {
    dev_state = std::max(dev_state, std::abs(s.rho.trace().real() - 1.0));
    dev_state = std::max(dev_state, s.rho.hermiticity_defect());
    const auto spec = eig_hermitian(s.rho);
    dev_state = std::max(dev_state, std::max(0.0, -spec.eigenvalues.front()));
  }

  for (double phi : {0.0, 1.3, 4.0}) {
    const BlochState b0(1.8, 0.0), bp(1.8, phi);
    for (double t : {0.5, 2.0, 5.5}) {
      const auto r0 = thermo::report(
          oracle::reduced_battery_state(analytic::joint_state(b0, damped, t)),
          1.0);
      const auto rp = thermo::report(
          oracle::reduced_battery_state(analytic::joint_state(bp, damped, t)),
          1.0);
      dev_phi = std::max(dev_phi, std::abs(r0.energy - rp.energy));
      dev_phi = std::max(dev_phi, std::abs(r0.ergotropy - rp.ergotropy));
      dev_phi = std::max(dev_phi, std::abs(r0.capacity - rp.capacity));
      dev_phi = std::max(dev_phi, std::abs(r0.coherence - rp.coherence));
    }
  }

  const bool ok = dev_excitation <= 1e-12 && dev_state <= 1e-8 &&
                  dev_phi <= 1e-10;
  line(9, "conservation, normalization, phi-invariance", ok,
       std::max({dev_excitation, dev_state, dev_phi}), 1e-8);
}

void criterion_thermo_identities() {
  std::mt19937 rng(20240817);
  std::uniform_real_distribution<double> un(0.0, 1.0);
  std::uniform_real_distribution<double> uphase(0.0, 2.0 * kPi);
  double dev = 0.0;
  for (int k = 0; k < 10000; ++k) {
    const double n = un(rng);
    const double cmag = un(rng) * std::sqrt(n * (1.0 - n));
    const QubitState q(n, std::polar(cmag, uphase(rng)));
    const auto r = thermo::report(q, 1.0);
    const double rad =
        std::sqrt(r.inversion * r.inversion + r.coherence * r.coherence);
    dev = std::max(dev,
                   std::abs(r.capacity - (r.ergotropy - r.antiergotropy)));
    dev = std::max(dev,
                   std::abs(r.ergotropy - (r.energy - r.passive_energy)));
    dev = std::max(dev, std::abs(r.capacity - 2.0 * rad));
  }
  line(10, "thermodynamic identities on fuzz set", dev <= 1e-12, dev, 1e-12);
}

}  // namespace

int main() {
  criterion_constants();
  criterion_closed_vs_oracle();
  criterion_optimal_identities();
  criterion_zero_plateau();
  criterion_concurrence();
  criterion_dissipative_exactness();
  criterion_perturbative();
  criterion_approximants();
  criterion_conservation();
  criterion_thermo_identities();
  if (failures == 0) {
    std::printf("acceptance: all 10 criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) FAILED\n", failures);
  return 1;
}
