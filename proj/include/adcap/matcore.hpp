#pragma once

#include <complex>
#include <vector>

namespace adcap {

using cplx = std::complex<double>;

/// Dense square complex matrix, row-major. Sized for the 2x2..16x16
/// matrices this project works with; no attempt at large-scale efficiency.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(int dim) : dim_(dim), entries_(static_cast<size_t>(dim) * dim) {}

  static ComplexMatrix identity(int dim);
  static ComplexMatrix zero(int dim) { return ComplexMatrix(dim); }

  int dim() const { return dim_; }

  cplx& operator()(int r, int c) { return entries_[static_cast<size_t>(r) * dim_ + c]; }
  const cplx& operator()(int r, int c) const { return entries_[static_cast<size_t>(r) * dim_ + c]; }

  const std::vector<cplx>& entries() const { return entries_; }

  ComplexMatrix adjoint() const;
  cplx trace() const;

  ComplexMatrix& operator+=(const ComplexMatrix& o);
  ComplexMatrix& operator-=(const ComplexMatrix& o);
  ComplexMatrix& operator*=(cplx s);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

 private:
  int dim_ = 0;
  std::vector<cplx> entries_;
};

/// Largest entrywise |a - b|.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// Largest entrywise magnitude.
double max_abs(const ComplexMatrix& m);

/// Kronecker product; row index of the result is i_a * dim(b) + i_b.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

/// Trace out the second factor of a dimA*dimB system.
ComplexMatrix partial_trace_second(const ComplexMatrix& m, int dimA, int dimB);

/// Eigenvalues of a Hermitian matrix, ascending. Values in [-1e-10, 0)
/// are clipped to 0; anything more negative is kept as-is (callers that
/// need PSD validate separately). Throws if the input is not Hermitian
/// within 1e-10.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

/// Full eigensystem of a Hermitian matrix: ascending eigenvalues and a
/// unitary whose columns are the corresponding eigenvectors.
struct HermitianEigensystem {
  std::vector<double> values;
  ComplexMatrix vectors;
};
HermitianEigensystem hermitian_eigensystem(const ComplexMatrix& m);

/// exp(m * t) by scaling-and-squaring with a Taylor kernel.
ComplexMatrix matrix_exp(const ComplexMatrix& m, double t);

/// Solve a x = b by Gaussian elimination with partial pivoting.
std::vector<cplx> solve_linear(ComplexMatrix a, std::vector<cplx> b);

/// Inverse via Gauss-Jordan. Throws on (numerically) singular input.
ComplexMatrix inverse(const ComplexMatrix& m);

/// Orthonormal basis of the nullspace of m, columns as vectors.
std::vector<std::vector<cplx>> nullspace(ComplexMatrix m, double tol = 1e-9);

/// Hermitian, unit-trace, positive semidefinite matrix. Construction
/// validates all three properties.
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix m);

  const ComplexMatrix& matrix() const { return mat_; }
  int dim() const { return mat_.dim(); }

  /// Spectrum, ascending, with tiny negatives clipped to 0.
  std::vector<double> spectrum() const { return hermitian_eigenvalues(mat_); }

  static DensityMatrix maximally_mixed(int dim);
  static DensityMatrix pure(const std::vector<cplx>& amplitudes);

 private:
  ComplexMatrix mat_;
};

}  // namespace adcap
