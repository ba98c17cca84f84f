#include "adcap/lindblad.hpp"

#include <cmath>
#include <stdexcept>

namespace adcap {

namespace {

// Two-qubit lowering operator sigma (x) sigma under the convention that
// |0> is the excited state, so sigma = |1><0| on one qubit.
ComplexMatrix double_lowering() {
  ComplexMatrix s(2);
  s(1, 0) = 1.0;
  return tensor(s, s);
}

cplx trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  cplx t = 0.0;
  for (int r = 0; r < a.dim(); ++r)
    for (int c = 0; c < a.dim(); ++c) t += a(r, c) * b(c, r);
  return t;
}

}  // namespace

LindbladParams::LindbladParams(double alpha_, double t_) : alpha(alpha_), t(t_) {
  if (alpha < 0.0) throw std::invalid_argument("LindbladParams: alpha must be >= 0");
  if (t < 0.0) throw std::invalid_argument("LindbladParams: t must be >= 0");
}

std::vector<cplx> vectorize(const ComplexMatrix& m) {
  const int n = m.dim();
  std::vector<cplx> v(static_cast<size_t>(n) * n);
  for (int c = 0; c < n; ++c)
    for (int r = 0; r < n; ++r) v[static_cast<size_t>(c) * n + r] = m(r, c);
  return v;
}

ComplexMatrix devectorize(const std::vector<cplx>& v, int dim) {
  if (static_cast<int>(v.size()) != dim * dim)
    throw std::invalid_argument("devectorize: size mismatch");
  ComplexMatrix m(dim);
  for (int c = 0; c < dim; ++c)
    for (int r = 0; r < dim; ++r) m(r, c) = v[static_cast<size_t>(c) * dim + r];
  return m;
}

ComplexMatrix sandwich_superoperator(const ComplexMatrix& a, const ComplexMatrix& b) {
  // vec(A X B^dag) = (conj(B) (x) A) vec(X) under column-stacking.
  ComplexMatrix bconj(b.dim());
  for (int r = 0; r < b.dim(); ++r)
    for (int c = 0; c < b.dim(); ++c) bconj(r, c) = std::conj(b(r, c));
  return tensor(bconj, a);
}

ComplexMatrix build_superoperator(double alpha) {
  if (alpha < 0.0) throw std::invalid_argument("build_superoperator: alpha must be >= 0");
  const auto s = double_lowering();
  const auto sdag = s.adjoint();
  const auto num = sdag * s;
  const auto id = ComplexMatrix::identity(4);

  ComplexMatrix l = sandwich_superoperator(num, id);  // N rho
  l += sandwich_superoperator(id, num.adjoint());     // rho N
  l -= cplx(2.0) * sandwich_superoperator(s, s);      // 2 S rho S^dag
  l *= cplx(-alpha / 2.0);
  return l;
}

ComplexMatrix evolve_raw(double alpha, double t, const ComplexMatrix& m) {
  LindbladParams check(alpha, t);
  const auto propagator = matrix_exp(build_superoperator(alpha), t);
  const auto v = vectorize(m);
  std::vector<cplx> out(v.size(), 0.0);
  for (int r = 0; r < propagator.dim(); ++r)
    for (int c = 0; c < propagator.dim(); ++c) out[r] += propagator(r, c) * v[c];
  return devectorize(out, m.dim());
}

DensityMatrix evolve(double alpha, double t, const DensityMatrix& rho) {
  return DensityMatrix(evolve_raw(alpha, t, rho.matrix()));
}

DampingBasis damping_basis(double alpha) {
  if (!(alpha > 0.0)) throw std::invalid_argument("damping_basis: alpha must be > 0");
  const auto l = build_superoperator(alpha);
  const auto ldag = l.adjoint();

  // Closed spectrum of this generator; multiplicities 9, 6, 1.
  const std::vector<double> lambdas = {0.0, -alpha / 2.0, -alpha};

  DampingBasis basis;
  for (double lam : lambdas) {
    ComplexMatrix shifted = l;
    ComplexMatrix shifted_dag = ldag;
    for (int i = 0; i < 16; ++i) {
      shifted(i, i) -= lam;
      shifted_dag(i, i) -= lam;  // real eigenvalues
    }
    const auto right = nullspace(shifted, 1e-9 * std::max(alpha, 1.0));
    const auto left = nullspace(shifted_dag, 1e-9 * std::max(alpha, 1.0));
    if (right.size() != left.size())
      throw std::runtime_error("damping_basis: defective eigenvalue block");
    for (size_t k = 0; k < right.size(); ++k) {
      basis.eigenvalues.push_back(lam);
      basis.right_ops.push_back(devectorize(right[k], 4));
      // Left eigen-operator: the adjoint nullspace vector w represents the
      // functional rho -> w^dag vec(rho) = Tr(W^dag rho), so L = W^dag.
      basis.left_ops.push_back(devectorize(left[k], 4).adjoint());
    }
  }
  if (basis.eigenvalues.size() != 16)
    throw std::runtime_error("damping_basis: expected 16 eigen-operators");

  // Duality normalization: replace L by M^{-1} L where M_ij = Tr(L_i R_j).
  ComplexMatrix gram(16);
  for (int i = 0; i < 16; ++i)
    for (int j = 0; j < 16; ++j)
      gram(i, j) = trace_product(basis.left_ops[i], basis.right_ops[j]);
  const auto gram_inv = inverse(gram);
  std::vector<ComplexMatrix> normalized(16, ComplexMatrix(4));
  for (int i = 0; i < 16; ++i)
    for (int k = 0; k < 16; ++k) {
      ComplexMatrix term = basis.left_ops[k];
      term *= gram_inv(i, k);
      normalized[i] += term;
    }
  basis.left_ops = std::move(normalized);
  return basis;
}

ComplexMatrix reconstruct(const DampingBasis& basis, double t, const ComplexMatrix& rho) {
  ComplexMatrix out(rho.dim());
  for (size_t i = 0; i < basis.eigenvalues.size(); ++i) {
    ComplexMatrix term = basis.right_ops[i];
    term *= trace_product(basis.left_ops[i], rho) * std::exp(basis.eigenvalues[i] * t);
    out += term;
  }
  return out;
}

ComplexMatrix choi_matrix(double alpha, double t) {
  const auto propagator = matrix_exp(build_superoperator(alpha), t);
  ComplexMatrix choi(16);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      ComplexMatrix unit(4);
      unit(i, j) = 1.0;
      const auto v = vectorize(unit);
      std::vector<cplx> out(16, 0.0);
      for (int r = 0; r < 16; ++r)
        for (int c = 0; c < 16; ++c) out[r] += propagator(r, c) * v[c];
      const auto mapped = devectorize(out, 4);
      for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n) choi(i * 4 + m, j * 4 + n) = mapped(m, n);
    }
  return choi;
}

std::vector<ComplexMatrix> kraus_from_choi(const ComplexMatrix& choi, double tol) {
  const auto sys = hermitian_eigensystem(choi);
  std::vector<ComplexMatrix> ops;
  const int dim = 4;
  for (size_t k = 0; k < sys.values.size(); ++k) {
    if (sys.values[k] < -1e-9) throw std::runtime_error("kraus_from_choi: Choi matrix not PSD");
    if (sys.values[k] <= tol) continue;
    const double w = std::sqrt(sys.values[k]);
    ComplexMatrix a(dim);
    for (int i = 0; i < dim; ++i)
      for (int m = 0; m < dim; ++m) a(m, i) = w * sys.vectors(i * dim + m, static_cast<int>(k));
    ops.push_back(std::move(a));
  }
  return ops;
}

}  // namespace adcap
