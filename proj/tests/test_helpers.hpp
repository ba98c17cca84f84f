#pragma once

#include <random>

#include "adcap/matcore.hpp"

namespace adcap::testing {

inline ComplexMatrix random_matrix(int dim, std::mt19937& rng) {
  std::normal_distribution<double> dist(0.0, 1.0);
  ComplexMatrix m(dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) m(r, c) = cplx(dist(rng), dist(rng));
  return m;
}

inline ComplexMatrix random_hermitian(int dim, std::mt19937& rng) {
  auto g = random_matrix(dim, rng);
  auto h = g + g.adjoint();
  h *= cplx(0.5);
  return h;
}

// Unitary from exponentiating a random anti-Hermitian matrix.
inline ComplexMatrix random_unitary(int dim, std::mt19937& rng) {
  auto g = random_matrix(dim, rng);
  auto a = g - g.adjoint();
  a *= cplx(0.5);
  return matrix_exp(a, 1.0);
}

}  // namespace adcap::testing
