#include "qbattery/model.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "qbattery/errors.hpp"

namespace qbattery {

namespace {

constexpr cplx kImag{0.0, 1.0};
constexpr double kTwoPi = 2.0 * std::numbers::pi;

CMatrix lowering2() {
  CMatrix s(2);
  s(0, 1) = 1.0;  // |1> -> |0>
  return s;
}

}  // namespace

BlochState::BlochState(double theta_in, double phi_in)
    : theta(theta_in), phi(phi_in) {
  if (!(theta >= 0.0 && theta <= std::numbers::pi)) {
    throw std::invalid_argument("BlochState: theta must lie in [0, pi]");
  }
  phi = std::fmod(phi, kTwoPi);
  if (phi < 0.0) phi += kTwoPi;
}

SystemParams::SystemParams(double omega_b_in, double J_in, double gamma_in)
    : omega_b(omega_b_in), J(J_in), gamma(gamma_in) {
  if (!(omega_b > 0.0)) {
    throw std::invalid_argument("SystemParams: omega_b must be positive");
  }
  if (!(J >= 0.0)) {
    throw std::invalid_argument("SystemParams: J must be non-negative");
  }
  if (!(gamma >= 0.0)) {
    throw std::invalid_argument("SystemParams: gamma must be non-negative");
  }
}

double SystemParams::G() const {
  require_strong_coupling();
  const double q = gamma / 4.0;
  return std::sqrt((J - q) * (J + q));
}

void SystemParams::require_strong_coupling() const {
  if (!strong_coupling()) {
    std::ostringstream msg;
    msg << "weak coupling J = " << J << " <= gamma/4 = " << gamma / 4.0
        << "; dissipative closed forms assume J > gamma/4";
    throw RegimeError(msg.str());
  }
}

QubitState::QubitState(double population_in, cplx coherence_in)
    : population(population_in), coherence(coherence_in) {
  if (!(population >= -1e-10 && population <= 1.0 + 1e-10)) {
    throw std::invalid_argument("QubitState: population outside [0, 1]");
  }
  population = std::clamp(population, 0.0, 1.0);
  const double bound = population * (1.0 - population) + 1e-10;
  if (std::norm(coherence) > bound) {
    throw std::invalid_argument(
        "QubitState: |coherence|^2 exceeds population*(1-population)");
  }
}

JointState::JointState(CMatrix rho_in) : rho(std::move(rho_in)) {
  if (rho.dim() != 4) {
    throw std::invalid_argument("JointState: dim must be 4");
  }
  if (rho.hermiticity_defect() > 1e-9) {
    throw std::invalid_argument("JointState: rho not Hermitian");
  }
  if (std::abs(rho.trace() - 1.0) > 1e-9) {
    throw std::invalid_argument("JointState: trace differs from 1");
  }
  const Spectrum s = eig_hermitian(rho);
  if (s.eigenvalues.front() < -1e-8) {
    throw std::invalid_argument("JointState: rho has a negative eigenvalue");
  }
}

JointState initial_joint_state(const BlochState& b) {
  const cplx c0 = std::cos(b.theta / 2.0);
  const cplx c1 = std::polar(std::sin(b.theta / 2.0), b.phi);
  // |psi> = c0 |00> + c1 |10>
  const std::array<cplx, 4> psi{c0, c1, 0.0, 0.0};
  CMatrix rho(4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) rho(i, j) = psi[i] * std::conj(psi[j]);
  return JointState(std::move(rho));
}

CMatrix sigma_a() { return kron(CMatrix::identity(2), lowering2()); }
CMatrix sigma_b() { return kron(lowering2(), CMatrix::identity(2)); }

CMatrix hamiltonian(const SystemParams& p) {
  CMatrix h(4);
  h(1, 1) = p.omega_b;
  h(2, 2) = p.omega_b;
  h(3, 3) = 2.0 * p.omega_b;
  h(1, 2) = p.J;
  h(2, 1) = p.J;
  return h;
}

CMatrix liouvillian(const SystemParams& p) {
  const CMatrix h = hamiltonian(p);
  const CMatrix id = CMatrix::identity(4);
  const CMatrix sa = sigma_a();
  const CMatrix na = sa.adjoint() * sa;
  // Column stacking: vec(A X B) = (B^T kron A) vec(X).
  CMatrix l = kron(id, h);
  l -= kron(h.transpose(), id);
  l *= -kImag;
  if (p.gamma > 0.0) {
    CMatrix diss = kron(sa.conjugate(), sa);
    diss *= 2.0;
    diss -= kron(id, na);
    diss -= kron(na.transpose(), id);
    diss *= p.gamma / 2.0;
    l += diss;
  }
  return l;
}

CMatrix moment_generator_second(const SystemParams& p) {
  CMatrix m(4);
  m(0, 2) = p.J;
  m(0, 3) = -p.J;
  m(1, 2) = -p.J;
  m(1, 3) = p.J;
  m(2, 0) = p.J;
  m(2, 1) = -p.J;
  m(3, 0) = -p.J;
  m(3, 1) = p.J;
  if (p.gamma > 0.0) {
    m(0, 0) -= kImag * p.gamma;
    m(2, 2) -= kImag * p.gamma / 2.0;
    m(3, 3) -= kImag * p.gamma / 2.0;
  }
  return m;
}

CMatrix moment_generator_first(const SystemParams& p) {
  CMatrix m(4);
  for (int i = 0; i < 4; ++i) m(i, i) = p.omega_b;
  m(0, 1) = p.J;
  m(1, 0) = p.J;
  m(0, 2) = -2.0 * p.J;
  m(1, 3) = -2.0 * p.J;
  m(2, 3) = -p.J;
  m(3, 2) = -p.J;
  if (p.gamma > 0.0) {
    m(0, 0) -= kImag * p.gamma / 2.0;
    m(2, 2) -= kImag * p.gamma;
    m(3, 3) -= kImag * p.gamma / 2.0;
  }
  return m;
}

std::vector<cplx> vectorize(const CMatrix& rho) {
  const int n = rho.dim();
  std::vector<cplx> v(n * n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) v[j * n + i] = rho(i, j);
  return v;
}

CMatrix unvectorize(const std::vector<cplx>& v, int dim) {
  if (static_cast<int>(v.size()) != dim * dim) {
    throw std::invalid_argument("unvectorize: length mismatch");
  }
  CMatrix rho(dim);
  for (int j = 0; j < dim; ++j)
    for (int i = 0; i < dim; ++i) rho(i, j) = v[j * dim + i];
  return rho;
}

}  // namespace qbattery
