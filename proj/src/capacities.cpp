#include "adcap/capacities.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "adcap/entropy.hpp"

namespace adcap {

namespace {

double entropy4(const std::array<double, 4>& p) {
  return shannon_entropy_bits({p.begin(), p.end()});
}

DensityMatrix diagonal_state(double d0, double d1, double d2, double d3) {
  ComplexMatrix m(4);
  m(0, 0) = d0;
  m(1, 1) = d1;
  m(2, 2) = d2;
  m(3, 3) = d3;
  return DensityMatrix(std::move(m));
}

}  // namespace

EntanglementAnsatz::EntanglementAnsatz(double t1, double t2) : theta1(t1), theta2(t2) {
  const double quarter = std::numbers::pi / 4.0 + 1e-15;
  if (!(theta1 >= 0.0 && theta1 <= quarter) || !(theta2 >= 0.0 && theta2 <= quarter))
    throw std::invalid_argument("EntanglementAnsatz: angles must be in [0, pi/4]");
}

std::array<double, 4> output_spectrum_closed(const ChannelParams& params) {
  const double c = std::cos(params.chi) * std::cos(params.chi);
  const double mu = params.mu;
  const double w1 = 0.25 * ((1.0 - mu) * c * c + mu * c);
  const double w2 = 0.25 * ((1.0 - mu) * c * (2.0 - c) + mu);
  const double w4 = -0.25 * (2.0 - c) * ((1.0 - mu) * c + mu - 2.0);
  return {w1, w2, w2, w4};
}

std::array<double, 4> environment_spectrum_closed(const ChannelParams& params) {
  const double s = std::sin(params.chi) * std::sin(params.chi);
  const double mu = params.mu;
  const double w1 = 0.25 * ((1.0 - mu) * s * s + mu * s);
  const double w2 = 0.25 * (1.0 - mu) * (2.0 - s) * s;
  const double w4 = 0.25 * ((1.0 - mu) * (2.0 - s) * (2.0 - s) + mu * (4.0 - s));
  return {w1, w2, w2, w4};
}

double ce2(const ChannelParams& params) {
  return 2.0 + entropy4(output_spectrum_closed(params)) -
         entropy4(environment_spectrum_closed(params));
}

double ce2_via_states(const ChannelParams& params) {
  const auto rho = DensityMatrix::maximally_mixed(4);
  const auto ch = memory_channel(params);
  const auto out = apply(ch, rho);
  return von_neumann_entropy(rho) + von_neumann_entropy(out) -
         memory_entropy_exchange(params, rho).entropy_bits;
}

double qe2(const ChannelParams& params) { return ce2(params) / 2.0; }

std::array<double, 4> input_spectrum_closed(const EntanglementAnsatz& ansatz) {
  const double t1 = std::cos(ansatz.theta1) * std::cos(ansatz.theta1);
  const double t2 = std::cos(ansatz.theta2) * std::cos(ansatz.theta2);
  const double s1 = 1.0 - t1, s2 = 1.0 - t2;
  return {t1 * t2, t1 * s2, s1 * t2, s1 * s2};
}

std::array<DensityMatrix, 4> ansatz_states(const EntanglementAnsatz& ansatz) {
  const auto v = input_spectrum_closed(ansatz);
  // v = (T1T2, T1S2, S1T2, S1S2); the four states permute these weights
  // over the computational basis.
  return {diagonal_state(v[0], v[1], v[2], v[3]),
          diagonal_state(v[1], v[0], v[3], v[2]),
          diagonal_state(v[2], v[3], v[0], v[1]),
          diagonal_state(v[3], v[2], v[1], v[0])};
}

std::array<std::array<double, 4>, 4> limited_exchange_spectra_closed(
    const ChannelParams& params, const EntanglementAnsatz& ansatz) {
  const double c = std::cos(params.chi) * std::cos(params.chi);
  const double s = std::sin(params.chi) * std::sin(params.chi);
  const double mu = params.mu;
  const double t1 = std::cos(ansatz.theta1) * std::cos(ansatz.theta1);
  const double t2 = std::cos(ansatz.theta2) * std::cos(ansatz.theta2);
  const double s1 = 1.0 - t1, s2 = 1.0 - t2;

  // a: excited weight damped; b: ground weight damped.
  const double a1 = t1 * c + s1, a2 = t2 * c + s2;
  const double b1 = t1 + c * s1, b2 = t2 + c * s2;
  const double corr = (1.0 - mu) * s + mu;  // shared tail factor

  const std::array<double, 4> w_s1 = {(1.0 - mu) * a1 * a2 + mu * (s1 + t1 * a2),
                                      (1.0 - mu) * t2 * a1 * s, (1.0 - mu) * t1 * a2 * s,
                                      t1 * t2 * s * corr};
  const std::array<double, 4> w_s2 = {(1.0 - mu) * a1 * b2 + mu * (s1 + t1 * b2),
                                      (1.0 - mu) * s2 * a1 * s, (1.0 - mu) * t1 * b2 * s,
                                      t1 * s2 * s * corr};
  const std::array<double, 4> w_s3 = {(1.0 - mu) * b1 * a2 + mu * (t1 + s1 * a2),
                                      (1.0 - mu) * t2 * b1 * s, (1.0 - mu) * s1 * a2 * s,
                                      s1 * t2 * s * corr};
  const std::array<double, 4> w_s4 = {(1.0 - mu) * b1 * b2 + mu * (t1 + s1 * b2),
                                      (1.0 - mu) * s2 * b1 * s, (1.0 - mu) * s1 * b2 * s,
                                      s1 * s2 * s * corr};
  return {w_s1, w_s2, w_s3, w_s4};
}

double ce_lim(const ChannelParams& params, const EntanglementAnsatz& ansatz) {
  const auto blocks = limited_exchange_spectra_closed(params, ansatz);
  double exchange = 0.0;
  for (const auto& b : blocks) exchange += entropy4(b);
  return entropy4(input_spectrum_closed(ansatz)) + entropy4(output_spectrum_closed(params)) -
         0.25 * exchange;
}

double ce_lim_via_states(const ChannelParams& params, const EntanglementAnsatz& ansatz) {
  const auto ch = memory_channel(params);
  const auto states = ansatz_states(ansatz);
  // Equiprobable inputs average to I/4.
  const auto out = apply(ch, DensityMatrix::maximally_mixed(4));
  double value = von_neumann_entropy(out);
  for (const auto& rho : states)
    value += 0.25 * (von_neumann_entropy(rho) - memory_entropy_exchange(params, rho).entropy_bits);
  return value;
}

double entanglement_consumed(const EntanglementAnsatz& ansatz) {
  return entropy4(input_spectrum_closed(ansatz));
}

double cp2(const ChannelParams& params) {
  const double c = std::cos(params.chi) * std::cos(params.chi);
  const double s = std::sin(params.chi) * std::sin(params.chi);
  const double mu = params.mu;

  const std::array<double, 4> w_s1 = {(1.0 - mu) * c * c + mu * c, (1.0 - mu) * c * s,
                                      (1.0 - mu) * c * s, (1.0 - mu) * s * s + mu * s};
  const std::array<double, 4> w_s2 = {(1.0 - mu) * c + mu, 0.0, (1.0 - mu) * s, 0.0};
  const std::array<double, 4> w_s3 = {(1.0 - mu) * c + mu, (1.0 - mu) * s, 0.0, 0.0};
  const std::array<double, 4> w_s4 = {1.0, 0.0, 0.0, 0.0};

  const double exchange =
      entropy4(w_s1) + entropy4(w_s2) + entropy4(w_s3) + entropy4(w_s4);
  return entropy4(output_spectrum_closed(params)) - 0.25 * exchange;
}

CapacityReport point_report(const ChannelParams& params) {
  return CapacityReport{params,
                        ce2(params),
                        qe2(params),
                        cp2(params),
                        output_spectrum_closed(params),
                        environment_spectrum_closed(params)};
}

}  // namespace adcap
