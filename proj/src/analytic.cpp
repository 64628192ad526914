#include "qbattery/analytic.hpp"

#include <cmath>
#include <stdexcept>

#include "qbattery/errors.hpp"

namespace qbattery {
namespace analytic {

namespace {

constexpr cplx kImag{0.0, 1.0};

void require_time(double t) {
  if (!(t >= 0.0)) throw std::invalid_argument("time must be non-negative");
}

// Guard for radicands that dip a hair below zero at the extremal points
// sin^4(theta/2) sin^2(2Jt) = 1.
double clamp_radicand(double x) {
  if (x < 0.0 && x >= -1e-14) return 0.0;
  return x;
}

}  // namespace

double f_dissipative(const SystemParams& p, double t) {
  require_time(t);
  if (p.gamma == 0.0) return std::sin(p.J * t);
  const double g = p.G();
  return (p.J / g) * std::sin(g * t) * std::exp(-p.gamma * t / 4.0);
}

double charger_envelope(const SystemParams& p, double t) {
  require_time(t);
  if (p.gamma == 0.0) return std::cos(p.J * t);
  const double g = p.G();
  return std::exp(-p.gamma * t / 4.0) *
         (std::cos(g * t) - (p.gamma / (4.0 * g)) * std::sin(g * t));
}

MomentSet moments_lossless(const BlochState& b, const SystemParams& p,
                           double t) {
  if (p.gamma != 0.0) {
    throw std::invalid_argument(
        "moments_lossless requires gamma = 0; use moments_dissipative");
  }
  return moments_dissipative(b, p, t);
}

MomentSet moments_dissipative(const BlochState& b, const SystemParams& p,
                              double t) {
  require_time(t);
  if (p.gamma > 0.0) p.require_strong_coupling();
  const double s = std::sin(b.theta / 2.0) * std::sin(b.theta / 2.0);
  const double f = f_dissipative(p, t);
  const double g = charger_envelope(p, t);
  const cplx phase = std::polar(1.0, b.phi - p.omega_b * t);
  const double sin_theta = std::sin(b.theta);
  MomentSet m;
  m.n_a = s * g * g;
  m.n_b = s * f * f;
  m.s_a = 0.5 * sin_theta * g * phase;
  m.s_b = -kImag * 0.5 * sin_theta * f * phase;
  m.x_ab = -kImag * s * f * g;
  return m;
}

JointState joint_state(const BlochState& b, const SystemParams& p, double t) {
  const MomentSet m = moments_dissipative(b, p, t);
  CMatrix rho(4);
  rho(0, 0) = 1.0 - m.n_a - m.n_b;
  rho(1, 1) = m.n_a;
  rho(2, 2) = m.n_b;
  rho(1, 0) = m.s_a;
  rho(0, 1) = std::conj(m.s_a);
  rho(2, 0) = m.s_b;
  rho(0, 2) = std::conj(m.s_b);
  rho(2, 1) = m.x_ab;
  rho(1, 2) = std::conj(m.x_ab);
  return JointState(std::move(rho));
}

double energy(const BlochState& b, const SystemParams& p, double t) {
  require_time(t);
  if (p.gamma > 0.0) p.require_strong_coupling();
  const double s = std::sin(b.theta / 2.0) * std::sin(b.theta / 2.0);
  const double f = f_dissipative(p, t);
  return p.omega_b * s * f * f;
}

double power(const BlochState& b, const SystemParams& p, double t) {
  if (t == 0.0) return 0.0;  // sin^2(Jt)/t -> 0
  return energy(b, p, t) / t;
}

double variance(const BlochState& b, const SystemParams& p, double t) {
  const double n_b = energy(b, p, t) / p.omega_b;
  return p.omega_b * p.omega_b * n_b * (1.0 - n_b);
}

std::pair<double, double> inversion_coherence(const BlochState& b,
                                              const SystemParams& p,
                                              double t) {
  require_time(t);
  if (p.gamma > 0.0) p.require_strong_coupling();
  const double s = std::sin(b.theta / 2.0) * std::sin(b.theta / 2.0);
  const double f = f_dissipative(p, t);
  const double inversion = s * f * f - 0.5;
  const double coherence = 0.5 * std::sin(b.theta) * std::abs(f);
  return {inversion, coherence};
}

double ergotropy_closed(const BlochState& b, const SystemParams& p, double t) {
  const auto [inv, coh] = inversion_coherence(b, p, t);
  return p.omega_b *
         (inv + std::sqrt(clamp_radicand(inv * inv + coh * coh)));
}

double capacity_closed(const BlochState& b, const SystemParams& p, double t) {
  const auto [inv, coh] = inversion_coherence(b, p, t);
  return 2.0 * p.omega_b * std::sqrt(clamp_radicand(inv * inv + coh * coh));
}

}  // namespace analytic
}  // namespace qbattery
