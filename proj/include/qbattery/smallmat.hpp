#ifndef QBATTERY_SMALLMAT_HPP
#define QBATTERY_SMALLMAT_HPP

#include <array>
#include <complex>
#include <vector>

namespace qbattery {

using cplx = std::complex<double>;

/// Dense row-major complex matrix for the tiny fixed dimensions (2, 4, 16)
/// used throughout the model. Not a general linear algebra type.
class CMatrix {
 public:
  CMatrix() = default;
  explicit CMatrix(int dim) : dim_(dim), data_(dim * dim) {}

  static CMatrix identity(int dim);
  static CMatrix diag(const std::vector<double>& values);

  int dim() const { return dim_; }

  cplx& operator()(int i, int j) { return data_[i * dim_ + j]; }
  const cplx& operator()(int i, int j) const { return data_[i * dim_ + j]; }

  std::vector<cplx>& data() { return data_; }
  const std::vector<cplx>& data() const { return data_; }

  CMatrix adjoint() const;
  CMatrix conjugate() const;
  CMatrix transpose() const;
  cplx trace() const;

  /// Largest entry magnitude (entrywise infinity norm).
  double max_abs() const;
  /// max |M[i][j] - conj(M[j][i])|
  double hermiticity_defect() const;

  CMatrix& operator+=(const CMatrix& rhs);
  CMatrix& operator-=(const CMatrix& rhs);
  CMatrix& operator*=(cplx s);

 private:
  int dim_ = 0;
  std::vector<cplx> data_;
};

CMatrix operator+(CMatrix lhs, const CMatrix& rhs);
CMatrix operator-(CMatrix lhs, const CMatrix& rhs);
CMatrix operator*(const CMatrix& lhs, const CMatrix& rhs);
CMatrix operator*(cplx s, CMatrix m);

/// Kronecker product; index convention (i_a, i_b) -> i_a*dim(b) + i_b.
CMatrix kron(const CMatrix& a, const CMatrix& b);

/// Matrix-vector product.
std::vector<cplx> apply(const CMatrix& m, const std::vector<cplx>& v);

/// Solve A X = B by Gaussian elimination with partial pivoting.
CMatrix solve(CMatrix a, CMatrix b);

/// Determinant via LU factorization.
cplx determinant(CMatrix m);

struct Spectrum {
  std::vector<double> eigenvalues;  // ascending
  CMatrix eigenvectors;             // columns, unitary
};

/// Hermitian eigendecomposition, dims 2 and 4. 2x2 is closed form, 4x4 uses
/// cyclic Jacobi sweeps. Throws std::invalid_argument on non-Hermitian input.
Spectrum eig_hermitian(const CMatrix& m);

/// All four eigenvalues of a general (possibly non-normal) 4x4 matrix via
/// the characteristic polynomial and Durand-Kerner iteration. Unordered.
std::array<cplx, 4> eigvals_general4(const CMatrix& m);

/// Principal square root of a positive semidefinite Hermitian matrix.
/// Eigenvalues in [-1e-10, 0) are clipped to zero; below that is an error.
CMatrix sqrt_psd(const CMatrix& m);

}  // namespace qbattery

#endif
