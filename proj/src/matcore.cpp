#include "adcap/matcore.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace adcap {

ComplexMatrix ComplexMatrix::identity(int dim) {
  ComplexMatrix m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_);
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

cplx ComplexMatrix::trace() const {
  cplx t = 0.0;
  for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
  if (o.dim_ != dim_) throw std::invalid_argument("matrix dimension mismatch");
  for (size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
  if (o.dim_ != dim_) throw std::invalid_argument("matrix dimension mismatch");
  for (size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx s) {
  for (auto& e : entries_) e *= s;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim_ != b.dim_) throw std::invalid_argument("matrix dimension mismatch");
  const int n = a.dim_;
  ComplexMatrix out(n);
  for (int r = 0; r < n; ++r)
    for (int k = 0; k < n; ++k) {
      const cplx ark = a(r, k);
      if (ark == 0.0) continue;
      for (int c = 0; c < n; ++c) out(r, c) += ark * b(k, c);
    }
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("matrix dimension mismatch");
  double m = 0.0;
  for (int r = 0; r < a.dim(); ++r)
    for (int c = 0; c < a.dim(); ++c) m = std::max(m, std::abs(a(r, c) - b(r, c)));
  return m;
}

double max_abs(const ComplexMatrix& m) {
  double v = 0.0;
  for (const auto& e : m.entries()) v = std::max(v, std::abs(e));
  return v;
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  const int na = a.dim(), nb = b.dim();
  ComplexMatrix out(na * nb);
  for (int ra = 0; ra < na; ++ra)
    for (int ca = 0; ca < na; ++ca) {
      const cplx av = a(ra, ca);
      if (av == 0.0) continue;
      for (int rb = 0; rb < nb; ++rb)
        for (int cb = 0; cb < nb; ++cb)
          out(ra * nb + rb, ca * nb + cb) = av * b(rb, cb);
    }
  return out;
}

ComplexMatrix partial_trace_second(const ComplexMatrix& m, int dimA, int dimB) {
  if (m.dim() != dimA * dimB) throw std::invalid_argument("partial_trace_second: dimension mismatch");
  ComplexMatrix out(dimA);
  for (int ra = 0; ra < dimA; ++ra)
    for (int ca = 0; ca < dimA; ++ca) {
      cplx s = 0.0;
      for (int k = 0; k < dimB; ++k) s += m(ra * dimB + k, ca * dimB + k);
      out(ra, ca) = s;
    }
  return out;
}

namespace {

constexpr double kClipTol = 1e-10;

// Cyclic Jacobi on a real symmetric matrix, eigenvectors accumulated in v.
void jacobi_real_symmetric(std::vector<double>& a, int n, std::vector<double>& v) {
  auto A = [&](int r, int c) -> double& { return a[static_cast<size_t>(r) * n + c]; };
  auto V = [&](int r, int c) -> double& { return v[static_cast<size_t>(r) * n + c]; };
  v.assign(static_cast<size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) V(i, i) = 1.0;

  double scale = 0.0;
  for (int i = 0; i < n; ++i) scale = std::max(scale, std::abs(A(i, i)));
  for (int r = 0; r < n; ++r)
    for (int c = r + 1; c < n; ++c) scale = std::max(scale, std::abs(A(r, c)));
  if (scale == 0.0) return;

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int r = 0; r < n; ++r)
      for (int c = r + 1; c < n; ++c) off = std::max(off, std::abs(A(r, c)));
    if (off <= 1e-15 * scale) return;

    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) {
        const double apq = A(p, q);
        if (std::abs(apq) <= 1e-18 * scale) continue;
        const double theta = (A(q, q) - A(p, p)) / (2.0 * apq);
        double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        if (theta < 0.0) t = -t;
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        for (int k = 0; k < n; ++k) {
          const double akp = A(k, p), akq = A(k, q);
          A(k, p) = c * akp - s * akq;
          A(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = A(p, k), aqk = A(q, k);
          A(p, k) = c * apk - s * aqk;
          A(q, k) = s * apk + c * aqk;
        }
        for (int k = 0; k < n; ++k) {
          const double vkp = V(k, p), vkq = V(k, q);
          V(k, p) = c * vkp - s * vkq;
          V(k, q) = s * vkp + c * vkq;
        }
      }
  }
}

void check_hermitian(const ComplexMatrix& m, double tol) {
  const double d = max_abs_diff(m, m.adjoint());
  if (d > tol) throw std::invalid_argument("matrix is not Hermitian");
}

// Embed the Hermitian matrix H = A + iB into the real symmetric
// [[A, -B], [B, A]]; its spectrum is that of H with every value doubled.
std::vector<double> embed_real(const ComplexMatrix& m) {
  const int n = m.dim();
  const int N = 2 * n;
  std::vector<double> a(static_cast<size_t>(N) * N, 0.0);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      const cplx e = m(r, c);
      a[static_cast<size_t>(r) * N + c] = e.real();
      a[static_cast<size_t>(r) * N + (c + n)] = -e.imag();
      a[static_cast<size_t>(r + n) * N + c] = e.imag();
      a[static_cast<size_t>(r + n) * N + (c + n)] = e.real();
    }
  return a;
}

double clip_small_negative(double x) { return (x < 0.0 && x >= -kClipTol) ? 0.0 : x; }

}  // namespace

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
  check_hermitian(m, 1e-10);
  const int n = m.dim();
  auto a = embed_real(m);
  std::vector<double> v;
  jacobi_real_symmetric(a, 2 * n, v);
  std::vector<double> all(2 * n);
  for (int i = 0; i < 2 * n; ++i) all[i] = a[static_cast<size_t>(i) * 2 * n + i];
  std::sort(all.begin(), all.end());
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) out[i] = clip_small_negative(all[2 * i]);
  return out;
}

HermitianEigensystem hermitian_eigensystem(const ComplexMatrix& m) {
  check_hermitian(m, 1e-10);
  const int n = m.dim();
  const int N = 2 * n;
  auto a = embed_real(m);
  std::vector<double> v;
  jacobi_real_symmetric(a, N, v);

  std::vector<std::pair<double, int>> order(N);
  for (int i = 0; i < N; ++i) order[i] = {a[static_cast<size_t>(i) * N + i], i};
  std::sort(order.begin(), order.end());

  // Each complex eigenvector appears twice in the embedding (v and i*v);
  // keep a complex-orthonormal subset.
  HermitianEigensystem sys;
  sys.vectors = ComplexMatrix(n);
  std::vector<std::vector<cplx>> kept;
  for (const auto& [val, col] : order) {
    if (static_cast<int>(kept.size()) == n) break;
    std::vector<cplx> w(n);
    for (int r = 0; r < n; ++r)
      w[r] = cplx(v[static_cast<size_t>(r) * N + col], v[static_cast<size_t>(r + n) * N + col]);
    for (const auto& u : kept) {
      cplx ov = 0.0;
      for (int r = 0; r < n; ++r) ov += std::conj(u[r]) * w[r];
      for (int r = 0; r < n; ++r) w[r] -= ov * u[r];
    }
    double norm = 0.0;
    for (const auto& e : w) norm += std::norm(e);
    norm = std::sqrt(norm);
    if (norm < 1e-6) continue;
    for (auto& e : w) e /= norm;
    const int k = static_cast<int>(kept.size());
    for (int r = 0; r < n; ++r) sys.vectors(r, k) = w[r];
    sys.values.push_back(clip_small_negative(val));
    kept.push_back(std::move(w));
  }
  if (static_cast<int>(kept.size()) != n)
    throw std::runtime_error("hermitian_eigensystem: failed to extract a full eigenbasis");
  return sys;
}

ComplexMatrix matrix_exp(const ComplexMatrix& m, double t) {
  if (t < 0.0) throw std::invalid_argument("matrix_exp: t must be >= 0");
  const int n = m.dim();
  ComplexMatrix scaled = t * m;

  double norm = 0.0;  // inf-norm
  for (int r = 0; r < n; ++r) {
    double row = 0.0;
    for (int c = 0; c < n; ++c) row += std::abs(scaled(r, c));
    norm = std::max(norm, row);
  }
  int s = 0;
  while (norm > 0.5) {
    norm /= 2.0;
    ++s;
  }
  scaled *= cplx(std::ldexp(1.0, -s));

  ComplexMatrix result = ComplexMatrix::identity(n);
  ComplexMatrix term = ComplexMatrix::identity(n);
  for (int k = 1; k <= 40; ++k) {
    term = term * scaled;
    term *= cplx(1.0 / k);
    result += term;
    if (max_abs(term) < 1e-18) break;
  }
  for (int i = 0; i < s; ++i) result = result * result;
  return result;
}

std::vector<cplx> solve_linear(ComplexMatrix a, std::vector<cplx> b) {
  const int n = a.dim();
  if (static_cast<int>(b.size()) != n) throw std::invalid_argument("solve_linear: size mismatch");
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(a(r, col)) > std::abs(a(piv, col))) piv = r;
    if (std::abs(a(piv, col)) < 1e-14) throw std::runtime_error("solve_linear: singular matrix");
    if (piv != col) {
      for (int c = 0; c < n; ++c) std::swap(a(piv, c), a(col, c));
      std::swap(b[piv], b[col]);
    }
    for (int r = col + 1; r < n; ++r) {
      const cplx f = a(r, col) / a(col, col);
      if (f == 0.0) continue;
      for (int c = col; c < n; ++c) a(r, c) -= f * a(col, c);
      b[r] -= f * b[col];
    }
  }
  for (int r = n - 1; r >= 0; --r) {
    cplx s = b[r];
    for (int c = r + 1; c < n; ++c) s -= a(r, c) * b[c];
    b[r] = s / a(r, r);
  }
  return b;
}

ComplexMatrix inverse(const ComplexMatrix& m) {
  const int n = m.dim();
  ComplexMatrix a = m;
  ComplexMatrix inv = ComplexMatrix::identity(n);
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(a(r, col)) > std::abs(a(piv, col))) piv = r;
    if (std::abs(a(piv, col)) < 1e-14) throw std::runtime_error("inverse: singular matrix");
    if (piv != col)
      for (int c = 0; c < n; ++c) {
        std::swap(a(piv, c), a(col, c));
        std::swap(inv(piv, c), inv(col, c));
      }
    const cplx d = a(col, col);
    for (int c = 0; c < n; ++c) {
      a(col, c) /= d;
      inv(col, c) /= d;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      const cplx f = a(r, col);
      if (f == 0.0) continue;
      for (int c = 0; c < n; ++c) {
        a(r, c) -= f * a(col, c);
        inv(r, c) -= f * inv(col, c);
      }
    }
  }
  return inv;
}

std::vector<std::vector<cplx>> nullspace(ComplexMatrix m, double tol) {
  const int n = m.dim();
  std::vector<int> pivot_col_of_row;
  int row = 0;
  for (int col = 0; col < n && row < n; ++col) {
    int piv = row;
    for (int r = row + 1; r < n; ++r)
      if (std::abs(m(r, col)) > std::abs(m(piv, col))) piv = r;
    if (std::abs(m(piv, col)) <= tol) continue;
    if (piv != row)
      for (int c = 0; c < n; ++c) std::swap(m(piv, c), m(row, c));
    const cplx d = m(row, col);
    for (int c = 0; c < n; ++c) m(row, c) /= d;
    for (int r = 0; r < n; ++r) {
      if (r == row) continue;
      const cplx f = m(r, col);
      if (f == 0.0) continue;
      for (int c = 0; c < n; ++c) m(r, c) -= f * m(row, c);
    }
    pivot_col_of_row.push_back(col);
    ++row;
  }

  std::vector<bool> is_pivot(n, false);
  for (int c : pivot_col_of_row) is_pivot[c] = true;

  std::vector<std::vector<cplx>> basis;
  for (int free_col = 0; free_col < n; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<cplx> v(n, 0.0);
    v[free_col] = 1.0;
    for (size_t r = 0; r < pivot_col_of_row.size(); ++r)
      v[pivot_col_of_row[r]] = -m(static_cast<int>(r), free_col);
    // Gram-Schmidt against previously found vectors.
    for (const auto& u : basis) {
      cplx ov = 0.0;
      for (int i = 0; i < n; ++i) ov += std::conj(u[i]) * v[i];
      for (int i = 0; i < n; ++i) v[i] -= ov * u[i];
    }
    double norm = 0.0;
    for (const auto& e : v) norm += std::norm(e);
    norm = std::sqrt(norm);
    if (norm < tol) continue;
    for (auto& e : v) e /= norm;
    basis.push_back(std::move(v));
  }
  return basis;
}

DensityMatrix::DensityMatrix(ComplexMatrix m) : mat_(std::move(m)) {
  const double herm = max_abs_diff(mat_, mat_.adjoint());
  if (herm > 1e-12) throw std::invalid_argument("DensityMatrix: not Hermitian");
  const cplx tr = mat_.trace();
  if (std::abs(tr.real() - 1.0) > 1e-12 || std::abs(tr.imag()) > 1e-12)
    throw std::invalid_argument("DensityMatrix: trace is not 1");
  const auto eig = hermitian_eigenvalues(mat_);
  if (!eig.empty() && eig.front() < -kClipTol)
    throw std::invalid_argument("DensityMatrix: not positive semidefinite");
}

DensityMatrix DensityMatrix::maximally_mixed(int dim) {
  ComplexMatrix m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1.0 / dim;
  return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::pure(const std::vector<cplx>& amplitudes) {
  const int n = static_cast<int>(amplitudes.size());
  double norm = 0.0;
  for (const auto& a : amplitudes) norm += std::norm(a);
  if (std::abs(norm - 1.0) > 1e-12) throw std::invalid_argument("pure state not normalized");
  ComplexMatrix m(n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m(r, c) = amplitudes[r] * std::conj(amplitudes[c]);
  return DensityMatrix(std::move(m));
}

}  // namespace adcap
