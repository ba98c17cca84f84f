#include "adcap/channels.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace adcap {

ChannelParams::ChannelParams(double chi_, double mu_) : chi(chi_), mu(mu_) {
  if (!(chi >= 0.0 && chi <= std::numbers::pi / 2.0 + 1e-15))
    throw std::invalid_argument("ChannelParams: chi must be in [0, pi/2]");
  if (!(mu >= 0.0 && mu <= 1.0))
    throw std::invalid_argument("ChannelParams: mu must be in [0, 1]");
}

double KrausChannel::completeness_defect() const {
  ComplexMatrix sum(input_dim);
  for (const auto& a : operators) sum += a.adjoint() * a;
  return max_abs_diff(sum, ComplexMatrix::identity(input_dim));
}

KrausChannel amplitude_damping_kraus(double chi) {
  if (!(chi >= 0.0 && chi <= std::numbers::pi / 2.0 + 1e-15))
    throw std::invalid_argument("amplitude_damping_kraus: chi out of range");
  ComplexMatrix a0(2), a1(2);
  a0(0, 0) = std::cos(chi);
  a0(1, 1) = 1.0;
  a1(1, 0) = std::sin(chi);
  return KrausChannel{{a0, a1}, 2};
}

KrausChannel correlated_kraus(double chi) {
  if (!(chi >= 0.0 && chi <= std::numbers::pi / 2.0 + 1e-15))
    throw std::invalid_argument("correlated_kraus: chi out of range");
  ComplexMatrix c00(4), c11(4);
  c00(0, 0) = std::cos(chi);
  c00(1, 1) = 1.0;
  c00(2, 2) = 1.0;
  c00(3, 3) = 1.0;
  c11(3, 0) = std::sin(chi);
  return KrausChannel{{c00, c11}, 4};
}

KrausChannel uncorrelated_kraus(double chi) {
  const auto single = amplitude_damping_kraus(chi);
  KrausChannel ch{{}, 4};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      ch.operators.push_back(tensor(single.operators[i], single.operators[j]));
  return ch;
}

KrausChannel memory_channel(const ChannelParams& params) {
  const double wu = std::sqrt(1.0 - params.mu);
  const double wc = std::sqrt(params.mu);
  KrausChannel ch{{}, 4};
  for (auto& a : uncorrelated_kraus(params.chi).operators) {
    a *= cplx(wu);
    ch.operators.push_back(std::move(a));
  }
  for (auto& a : correlated_kraus(params.chi).operators) {
    a *= cplx(wc);
    ch.operators.push_back(std::move(a));
  }
  return ch;
}

ComplexMatrix apply_raw(const KrausChannel& ch, const ComplexMatrix& m) {
  if (m.dim() != ch.input_dim) throw std::invalid_argument("apply: dimension mismatch");
  ComplexMatrix out(ch.input_dim);
  for (const auto& a : ch.operators) out += a * m * a.adjoint();
  return out;
}

DensityMatrix apply(const KrausChannel& ch, const DensityMatrix& rho) {
  return DensityMatrix(apply_raw(ch, rho.matrix()));
}

}  // namespace adcap
