#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>

#include "qbattery/smallmat.hpp"

using qbattery::CMatrix;
using qbattery::cplx;
using qbattery::determinant;
using qbattery::eig_hermitian;
using qbattery::eigvals_general4;
using qbattery::kron;
using qbattery::solve;
using qbattery::sqrt_psd;

namespace {

CMatrix random_hermitian(int dim, std::mt19937& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  CMatrix m(dim);
  for (int i = 0; i < dim; ++i) {
    m(i, i) = u(rng);
    for (int j = i + 1; j < dim; ++j) {
      m(i, j) = cplx{u(rng), u(rng)};
      m(j, i) = std::conj(m(i, j));
    }
  }
  return m;
}

double reconstruction_error(const CMatrix& m, const qbattery::Spectrum& s) {
  CMatrix rebuilt(m.dim());
  for (int k = 0; k < m.dim(); ++k) {
    for (int i = 0; i < m.dim(); ++i) {
      for (int j = 0; j < m.dim(); ++j) {
        rebuilt(i, j) += s.eigenvalues[k] * s.eigenvectors(i, k) *
                         std::conj(s.eigenvectors(j, k));
      }
    }
  }
  return (rebuilt - m).max_abs();
}

}  // namespace

TEST_CASE("eig_hermitian identity and diagonal cases") {
  auto s = eig_hermitian(CMatrix::identity(2));
  CHECK(s.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(s.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-14));

  s = eig_hermitian(CMatrix::diag({0.75, 0.25}));
  CHECK(s.eigenvalues[0] == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(s.eigenvalues[1] == doctest::Approx(0.75).epsilon(1e-14));
}

TEST_CASE("eig_hermitian pure battery state [[1/2, -i/2], [i/2, 1/2]]") {
  CMatrix m(2);
  m(0, 0) = 0.5;
  m(1, 1) = 0.5;
  m(0, 1) = cplx{0.0, -0.5};
  m(1, 0) = cplx{0.0, 0.5};
  const auto s = eig_hermitian(m);
  CHECK(s.eigenvalues[0] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(s.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("eig_hermitian rejects non-Hermitian input") {
  CMatrix m(2);
  m(0, 1) = 1.0;
  CHECK_THROWS_AS(eig_hermitian(m), std::invalid_argument);
}

TEST_CASE("eig_hermitian random matrices: reconstruction, unitarity, trace") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int dim = (trial % 2 == 0) ? 2 : 4;
    const CMatrix m = random_hermitian(dim, rng);
    const auto s = eig_hermitian(m);

    CHECK(std::is_sorted(s.eigenvalues.begin(), s.eigenvalues.end()));
    CHECK(reconstruction_error(m, s) < 1e-10);

    const CMatrix& v = s.eigenvectors;
    CHECK((v.adjoint() * v - CMatrix::identity(dim)).max_abs() < 1e-10);

    double sum = 0.0;
    for (double lambda : s.eigenvalues) sum += lambda;
    CHECK(std::abs(sum - m.trace().real()) < 1e-10);

    cplx det_direct = determinant(m);
    double det_spec = 1.0;
    for (double lambda : s.eigenvalues) det_spec *= lambda;
    CHECK(std::abs(det_direct - det_spec) <
          1e-8 * std::max(1.0, std::abs(det_direct)));
  }
}

TEST_CASE("eigvals_general4 trivial spectra") {
  // a quadruple root is resolvable only to ~eps^(1/4) from the
  // characteristic polynomial; the residual bound below is the real contract
  auto z = eigvals_general4(CMatrix::identity(4));
  for (const cplx& v : z) CHECK(std::abs(v - 1.0) < 5e-3);

  z = eigvals_general4(CMatrix::diag({0.0, 0.3, 0.7, 0.0}));
  std::array<double, 4> re;
  for (int k = 0; k < 4; ++k) re[k] = z[k].real();
  std::sort(re.begin(), re.end());
  CHECK(re[0] == doctest::Approx(0.0).epsilon(1e-10));
  CHECK(re[1] == doctest::Approx(0.0).epsilon(1e-10));
  CHECK(re[2] == doctest::Approx(0.3).epsilon(1e-10));
  CHECK(re[3] == doctest::Approx(0.7).epsilon(1e-10));
}

TEST_CASE("eigvals_general4 residual bound and Hermitian agreement") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    CMatrix m(4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) m(i, j) = cplx{u(rng), u(rng)};
    const auto z = eigvals_general4(m);
    const double scale = std::pow(m.max_abs(), 4.0);
    for (const cplx& lambda : z) {
      CMatrix shifted = m;
      for (int i = 0; i < 4; ++i) shifted(i, i) -= lambda;
      CHECK(std::abs(determinant(shifted)) <= 1e-8 * scale);
    }

    const CMatrix h = random_hermitian(4, rng);
    auto general = eigvals_general4(h);
    std::array<double, 4> re;
    for (int k = 0; k < 4; ++k) {
      CHECK(std::abs(general[k].imag()) < 1e-8);
      re[k] = general[k].real();
    }
    std::sort(re.begin(), re.end());
    const auto s = eig_hermitian(h);
    for (int k = 0; k < 4; ++k) {
      CHECK(std::abs(re[k] - s.eigenvalues[k]) < 1e-8);
    }
  }
}

TEST_CASE("sqrt_psd basic and property cases") {
  CHECK((sqrt_psd(CMatrix::identity(4)) - CMatrix::identity(4)).max_abs() <
        1e-12);

  const CMatrix r = sqrt_psd(CMatrix::diag({4.0, 1.0, 0.0, 0.0}));
  CHECK((r - CMatrix::diag({2.0, 1.0, 0.0, 0.0})).max_abs() < 1e-12);

  std::mt19937 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    CMatrix a = random_hermitian(4, rng);
    const CMatrix psd = a * a.adjoint();  // PSD by construction
    const CMatrix root = sqrt_psd(psd);
    CHECK((root * root - psd).max_abs() < 1e-8);
  }

  CHECK_THROWS_AS(sqrt_psd(CMatrix::diag({-0.5, 1.0, 1.0, 1.0})),
                  std::invalid_argument);
}

TEST_CASE("solve and determinant agree with known inverses") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  CMatrix m(4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m(i, j) = cplx{u(rng), u(rng)};
  const CMatrix inv = solve(m, CMatrix::identity(4));
  CHECK((m * inv - CMatrix::identity(4)).max_abs() < 1e-10);

  const cplx det = determinant(m);
  const cplx det_inv = determinant(inv);
  CHECK(std::abs(det * det_inv - 1.0) < 1e-10);
}

TEST_CASE("kron index convention") {
  CMatrix a(2), b(2);
  a(0, 1) = 1.0;  // acts on the slow index
  b(1, 0) = 1.0;  // acts on the fast index
  const CMatrix k = kron(a, b);
  // |0>_slow|1>_fast <- |1>_slow|0>_fast : row 0*2+1, column 1*2+0
  CHECK(k(1, 2) == cplx{1.0, 0.0});
  CHECK(k.max_abs() == 1.0);
}
