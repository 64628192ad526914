#include "qbattery/smallmat.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qbattery {

namespace {

constexpr double kHermitianTol = 1e-12;
constexpr double kJacobiTol = 1e-13;
constexpr double kPsdClip = 1e-10;

void require_same_dim(const CMatrix& a, const CMatrix& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("CMatrix dimension mismatch");
  }
}

}  // namespace

CMatrix CMatrix::identity(int dim) {
  CMatrix m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::diag(const std::vector<double>& values) {
  CMatrix m(static_cast<int>(values.size()));
  for (int i = 0; i < m.dim(); ++i) m(i, i) = values[i];
  return m;
}

CMatrix CMatrix::adjoint() const {
  CMatrix out(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) out(i, j) = std::conj((*this)(j, i));
  return out;
}

CMatrix CMatrix::conjugate() const {
  CMatrix out(dim_);
  for (int i = 0; i < dim_ * dim_; ++i) out.data_[i] = std::conj(data_[i]);
  return out;
}

CMatrix CMatrix::transpose() const {
  CMatrix out(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) out(i, j) = (*this)(j, i);
  return out;
}

cplx CMatrix::trace() const {
  cplx t = 0.0;
  for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double CMatrix::max_abs() const {
  double m = 0.0;
  for (const cplx& z : data_) m = std::max(m, std::abs(z));
  return m;
}

double CMatrix::hermiticity_defect() const {
  double d = 0.0;
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      d = std::max(d, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return d;
}

CMatrix& CMatrix::operator+=(const CMatrix& rhs) {
  require_same_dim(*this, rhs);
  for (size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& rhs) {
  require_same_dim(*this, rhs);
  for (size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
  return *this;
}

CMatrix& CMatrix::operator*=(cplx s) {
  for (cplx& z : data_) z *= s;
  return *this;
}

CMatrix operator+(CMatrix lhs, const CMatrix& rhs) { return lhs += rhs; }
CMatrix operator-(CMatrix lhs, const CMatrix& rhs) { return lhs -= rhs; }
CMatrix operator*(cplx s, CMatrix m) { return m *= s; }

CMatrix operator*(const CMatrix& lhs, const CMatrix& rhs) {
  require_same_dim(lhs, rhs);
  const int n = lhs.dim();
  CMatrix out(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const cplx a = lhs(i, k);
      if (a == cplx{}) continue;
      for (int j = 0; j < n; ++j) out(i, j) += a * rhs(k, j);
    }
  }
  return out;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  const int na = a.dim(), nb = b.dim();
  CMatrix out(na * nb);
  for (int ia = 0; ia < na; ++ia)
    for (int ja = 0; ja < na; ++ja)
      for (int ib = 0; ib < nb; ++ib)
        for (int jb = 0; jb < nb; ++jb)
          out(ia * nb + ib, ja * nb + jb) = a(ia, ja) * b(ib, jb);
  return out;
}

std::vector<cplx> apply(const CMatrix& m, const std::vector<cplx>& v) {
  const int n = m.dim();
  if (static_cast<int>(v.size()) != n) {
    throw std::invalid_argument("apply: vector length mismatch");
  }
  std::vector<cplx> out(n);
  for (int i = 0; i < n; ++i) {
    cplx s = 0.0;
    for (int j = 0; j < n; ++j) s += m(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

CMatrix solve(CMatrix a, CMatrix b) {
  require_same_dim(a, b);
  const int n = a.dim();
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r) {
      if (std::abs(a(r, col)) > std::abs(a(pivot, col))) pivot = r;
    }
    if (std::abs(a(pivot, col)) == 0.0) {
      throw std::runtime_error("solve: singular matrix");
    }
    if (pivot != col) {
      for (int j = 0; j < n; ++j) {
        std::swap(a(col, j), a(pivot, j));
        std::swap(b(col, j), b(pivot, j));
      }
    }
    const cplx inv = 1.0 / a(col, col);
    for (int r = col + 1; r < n; ++r) {
      const cplx factor = a(r, col) * inv;
      if (factor == cplx{}) continue;
      for (int j = col; j < n; ++j) a(r, j) -= factor * a(col, j);
      for (int j = 0; j < n; ++j) b(r, j) -= factor * b(col, j);
    }
  }
  for (int col = n - 1; col >= 0; --col) {
    const cplx inv = 1.0 / a(col, col);
    for (int j = 0; j < n; ++j) {
      cplx s = b(col, j);
      for (int k = col + 1; k < n; ++k) s -= a(col, k) * b(k, j);
      b(col, j) = s * inv;
    }
  }
  return b;
}

cplx determinant(CMatrix m) {
  const int n = m.dim();
  cplx det = 1.0;
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r) {
      if (std::abs(m(r, col)) > std::abs(m(pivot, col))) pivot = r;
    }
    if (std::abs(m(pivot, col)) == 0.0) return 0.0;
    if (pivot != col) {
      det = -det;
      for (int j = 0; j < n; ++j) std::swap(m(col, j), m(pivot, j));
    }
    det *= m(col, col);
    const cplx inv = 1.0 / m(col, col);
    for (int r = col + 1; r < n; ++r) {
      const cplx factor = m(r, col) * inv;
      for (int j = col; j < n; ++j) m(r, j) -= factor * m(col, j);
    }
  }
  return det;
}

namespace {

// Closed-form eigendecomposition of a Hermitian 2x2 block [[a, b], [b*, d]].
// Returns {lo, hi} and the unitary whose columns are the eigenvectors.
void eig2_block(double a, cplx b, double d, double* lo, double* hi,
                cplx v[2][2]) {
  const double mid = 0.5 * (a + d);
  const double half = 0.5 * (a - d);
  const double r = std::hypot(half, std::abs(b));
  *lo = mid - r;
  *hi = mid + r;
  if (std::abs(b) == 0.0) {
    const bool swapped = a > d;
    v[0][0] = swapped ? 0.0 : 1.0;
    v[1][0] = swapped ? 1.0 : 0.0;
    v[0][1] = swapped ? 1.0 : 0.0;
    v[1][1] = swapped ? 0.0 : 1.0;
    return;
  }
  // (b, lambda - a) is an eigenvector for eigenvalue lambda. Only one of
  // lambda_lo - a = -half - r, lambda_hi - a = r - half is free of
  // cancellation (the one where the magnitudes add); build that column and
  // take the orthogonal complement for the other, which keeps the rotation
  // accurate even for |b| far below the diagonal gap.
  const int safe = (half > 0.0) ? 0 : 1;
  const double lambda_minus_a = (safe == 0) ? (-half - r) : (r - half);
  cplx w0 = b;
  cplx w1 = lambda_minus_a;
  const double norm = std::sqrt(std::norm(w0) + std::norm(w1));
  w0 /= norm;
  w1 /= norm;
  v[0][safe] = w0;
  v[1][safe] = w1;
  v[0][1 - safe] = -std::conj(w1);
  v[1][1 - safe] = std::conj(w0);
}

double offdiag_norm(const CMatrix& m) {
  double s = 0.0;
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j)
      if (i != j) s += std::norm(m(i, j));
  return std::sqrt(s);
}

Spectrum eig_hermitian_jacobi(CMatrix a) {
  const int n = a.dim();
  CMatrix v = CMatrix::identity(n);
  const double scale = std::max(a.max_abs(), 1.0);
  for (int sweep = 0; sweep < 64; ++sweep) {
    if (offdiag_norm(a) <= kJacobiTol * scale) break;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        if (std::abs(a(p, q)) <= 1e-300) continue;
        double lo, hi;
        cplx g[2][2];
        eig2_block(a(p, p).real(), a(p, q), a(q, q).real(), &lo, &hi, g);
        // a <- G^dag a G, v <- v G with G the (p,q)-embedded block unitary
        for (int j = 0; j < n; ++j) {
          const cplx ap = a(p, j), aq = a(q, j);
          a(p, j) = std::conj(g[0][0]) * ap + std::conj(g[1][0]) * aq;
          a(q, j) = std::conj(g[0][1]) * ap + std::conj(g[1][1]) * aq;
        }
        for (int i = 0; i < n; ++i) {
          const cplx ap = a(i, p), aq = a(i, q);
          a(i, p) = ap * g[0][0] + aq * g[1][0];
          a(i, q) = ap * g[0][1] + aq * g[1][1];
          const cplx vp = v(i, p), vq = v(i, q);
          v(i, p) = vp * g[0][0] + vq * g[1][0];
          v(i, q) = vp * g[0][1] + vq * g[1][1];
        }
      }
    }
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return a(i, i).real() < a(j, j).real(); });
  Spectrum out;
  out.eigenvalues.resize(n);
  out.eigenvectors = CMatrix(n);
  for (int k = 0; k < n; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]).real();
    for (int i = 0; i < n; ++i) out.eigenvectors(i, k) = v(i, order[k]);
  }
  return out;
}

}  // namespace

Spectrum eig_hermitian(const CMatrix& m) {
  if (m.dim() != 2 && m.dim() != 4) {
    throw std::invalid_argument("eig_hermitian: dim must be 2 or 4");
  }
  const double defect = m.hermiticity_defect();
  if (defect > kHermitianTol * std::max(1.0, m.max_abs())) {
    std::ostringstream msg;
    msg << "eig_hermitian: non-Hermitian input, defect " << defect;
    throw std::invalid_argument(msg.str());
  }
  if (m.dim() == 2) {
    double lo, hi;
    cplx v[2][2];
    eig2_block(m(0, 0).real(), m(0, 1), m(1, 1).real(), &lo, &hi, v);
    Spectrum out;
    out.eigenvalues = {lo, hi};
    out.eigenvectors = CMatrix(2);
    for (int i = 0; i < 2; ++i)
      for (int k = 0; k < 2; ++k) out.eigenvectors(i, k) = v[i][k];
    return out;
  }
  return eig_hermitian_jacobi(m);
}

std::array<cplx, 4> eigvals_general4(const CMatrix& m) {
  if (m.dim() != 4) {
    throw std::invalid_argument("eigvals_general4: dim must be 4");
  }
  // Faddeev-LeVerrier: characteristic polynomial
  // p(x) = x^4 + c1 x^3 + c2 x^2 + c3 x + c4.
  std::array<cplx, 5> c{1.0, 0.0, 0.0, 0.0, 0.0};
  CMatrix n = m;
  for (int k = 1; k <= 4; ++k) {
    c[k] = -n.trace() / static_cast<double>(k);
    if (k < 4) {
      CMatrix shifted = n;
      for (int i = 0; i < 4; ++i) shifted(i, i) += c[k];
      n = m * shifted;
    }
  }
  auto poly = [&](cplx x) {
    return (((x + c[1]) * x + c[2]) * x + c[3]) * x + c[4];
  };
  // Durand-Kerner from staggered complex seeds.
  const double radius = 1.0 + m.max_abs();
  std::array<cplx, 4> z;
  const cplx seed{0.4, 0.9};
  cplx power = radius;
  for (int k = 0; k < 4; ++k) {
    power *= seed;
    z[k] = power;
  }
  for (int iter = 0; iter < 200; ++iter) {
    double shift = 0.0;
    for (int k = 0; k < 4; ++k) {
      cplx denom = 1.0;
      for (int j = 0; j < 4; ++j) {
        if (j != k) denom *= z[k] - z[j];
      }
      const cplx delta = poly(z[k]) / denom;
      z[k] -= delta;
      shift = std::max(shift, std::abs(delta));
    }
    if (shift < 1e-12 * radius) break;
  }
  return z;
}

CMatrix sqrt_psd(const CMatrix& m) {
  const Spectrum s = eig_hermitian(m);
  const double scale = std::max(1.0, m.max_abs());
  CMatrix out(m.dim());
  for (int k = 0; k < m.dim(); ++k) {
    double lambda = s.eigenvalues[k];
    if (lambda < -kPsdClip * scale) {
      std::ostringstream msg;
      msg << "sqrt_psd: matrix is not PSD, eigenvalue " << lambda;
      throw std::invalid_argument(msg.str());
    }
    lambda = std::max(lambda, 0.0);
    const double root = std::sqrt(lambda);
    for (int i = 0; i < m.dim(); ++i)
      for (int j = 0; j < m.dim(); ++j)
        out(i, j) += root * s.eigenvectors(i, k) *
                     std::conj(s.eigenvectors(j, k));
  }
  return out;
}

}  // namespace qbattery
