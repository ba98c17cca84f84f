#include "adcap/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace adcap {

double shannon_entropy_bits(const std::vector<double>& p) {
  double h = 0.0;
  for (double x : p) {
    if (x < -1e-10) throw std::invalid_argument("shannon_entropy_bits: negative probability");
    if (x <= 0.0) continue;
    h -= x * std::log2(x);
  }
  return std::max(h, 0.0);
}

double von_neumann_entropy(const DensityMatrix& rho) {
  return shannon_entropy_bits(rho.spectrum());
}

ComplexMatrix exchange_matrix(const KrausChannel& ch, const DensityMatrix& rho) {
  if (rho.dim() != ch.input_dim) throw std::invalid_argument("entropy_exchange: dimension mismatch");
  const int n = static_cast<int>(ch.operators.size());
  ComplexMatrix w(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      w(i, j) = (ch.operators[i] * rho.matrix() * ch.operators[j].adjoint()).trace();
  return w;
}

EntropyExchange entropy_exchange(const KrausChannel& ch, const DensityMatrix& rho) {
  auto spectrum = hermitian_eigenvalues(exchange_matrix(ch, rho));
  std::sort(spectrum.begin(), spectrum.end(), std::greater<>());
  return {shannon_entropy_bits(spectrum), std::move(spectrum)};
}

ComplexMatrix memory_environment_state(const ChannelParams& params, const DensityMatrix& rho) {
  if (rho.dim() != 4)
    throw std::invalid_argument("memory_environment_state: input must be two qubits");
  const auto uncorr = uncorrelated_kraus(params.chi).operators;  // write |e_00..e_11>
  const auto corr = correlated_kraus(params.chi).operators;      // write |e_00>, |e_11>
  ComplexMatrix env(4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      env(i, j) = cplx(1.0 - params.mu) *
                  (uncorr[i] * rho.matrix() * uncorr[j].adjoint()).trace();
  constexpr int slot[2] = {0, 3};
  for (int m = 0; m < 2; ++m)
    for (int n = 0; n < 2; ++n)
      env(slot[m], slot[n]) +=
          cplx(params.mu) * (corr[m] * rho.matrix() * corr[n].adjoint()).trace();
  return env;
}

EntropyExchange memory_entropy_exchange(const ChannelParams& params, const DensityMatrix& rho) {
  auto spectrum = hermitian_eigenvalues(memory_environment_state(params, rho));
  std::sort(spectrum.begin(), spectrum.end(), std::greater<>());
  return {shannon_entropy_bits(spectrum), std::move(spectrum)};
}

}  // namespace adcap
