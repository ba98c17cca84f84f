#pragma once

#include "adcap/matcore.hpp"

namespace adcap {

/// Correlated two-qubit damping generator and its damping-basis solution.
/// Vectorization is column-stacking: vec(rho) index = col * 4 + row, so the
/// superoperator of A rho B^dag is conj(B) (x) A.

struct LindbladParams {
  double alpha;  // decay rate
  double t;      // elapsed time

  LindbladParams(double alpha_, double t_);
};

/// Eigen-operator decomposition of the generator. Right and left
/// operators are paired by Tr(L_i R_j) = delta_ij.
struct DampingBasis {
  std::vector<cplx> eigenvalues;
  std::vector<ComplexMatrix> right_ops;
  std::vector<ComplexMatrix> left_ops;
};

/// Column-stack a matrix into a vector.
std::vector<cplx> vectorize(const ComplexMatrix& m);

/// Inverse of vectorize.
ComplexMatrix devectorize(const std::vector<cplx>& v, int dim);

/// Superoperator of X -> A X B^dag under column-stacking.
ComplexMatrix sandwich_superoperator(const ComplexMatrix& a, const ComplexMatrix& b);

/// The 16x16 generator of correlated two-qubit amplitude damping.
ComplexMatrix build_superoperator(double alpha);

/// exp(L t) applied to rho.
DensityMatrix evolve(double alpha, double t, const DensityMatrix& rho);

/// Same map on a raw matrix.
ComplexMatrix evolve_raw(double alpha, double t, const ComplexMatrix& m);

/// Full damping basis. The spectrum of this generator is known in closed
/// form ({0, -alpha/2, -alpha}); eigen-operators come from nullspaces of
/// the shifted superoperator, then duality-normalized.
DampingBasis damping_basis(double alpha);

/// Reconstruct exp(L t) rho from the damping basis (sum of
/// Tr(L_i rho) exp(lambda_i t) R_i).
ComplexMatrix reconstruct(const DampingBasis& basis, double t, const ComplexMatrix& rho);

/// Choi matrix of the time-t map, built by applying it to matrix units.
ComplexMatrix choi_matrix(double alpha, double t);

/// Kraus operators extracted from the Choi spectrum (eigenvalues below
/// tol are dropped). For this map the rank is 2 at every t > 0.
std::vector<ComplexMatrix> kraus_from_choi(const ComplexMatrix& choi, double tol = 1e-10);

}  // namespace adcap
