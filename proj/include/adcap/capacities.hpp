#pragma once

#include <array>

#include "adcap/channels.hpp"
#include "adcap/matcore.hpp"

namespace adcap {

/// (theta1, theta2) in [0, pi/4] parametrizing the shared partially
/// entangled pairs. theta = pi/4 is maximal entanglement, theta = 0 is
/// a product state.
struct EntanglementAnsatz {
  double theta1;
  double theta2;

  EntanglementAnsatz(double t1, double t2);

  static EntanglementAnsatz maximal() { return {0.78539816339744831, 0.78539816339744831}; }
  static EntanglementAnsatz product() { return {0.0, 0.0}; }
};

/// Spectrum of the two-use channel output on the maximally mixed input,
/// closed form. Order: (omega1, omega2, omega3, omega4).
std::array<double, 4> output_spectrum_closed(const ChannelParams& params);

/// Spectrum of the environment after the interaction (closed form).
std::array<double, 4> environment_spectrum_closed(const ChannelParams& params);

/// Entanglement-assisted classical capacity, two uses, bits.
double ce2(const ChannelParams& params);

/// Same quantity evaluated through the mutual-information pipeline on
/// explicit matrices (the oracle route).
double ce2_via_states(const ChannelParams& params);

/// Entanglement-assisted quantum capacity, two uses, qubits; ce2 / 2.
double qe2(const ChannelParams& params);

/// The four diagonal input states built from the partially entangled
/// ansatz pairs.
std::array<DensityMatrix, 4> ansatz_states(const EntanglementAnsatz& ansatz);

/// Spectrum shared by all four ansatz input states:
/// (cos^2 t1 cos^2 t2, cos^2 t1 sin^2 t2, sin^2 t1 cos^2 t2, sin^2 t1 sin^2 t2).
std::array<double, 4> input_spectrum_closed(const EntanglementAnsatz& ansatz);

/// Entropy-exchange spectra for the four ansatz inputs, closed form;
/// each block sums to 1.
std::array<std::array<double, 4>, 4> limited_exchange_spectra_closed(
    const ChannelParams& params, const EntanglementAnsatz& ansatz);

/// Classical capacity with limited shared entanglement, two uses, bits.
/// Reduces to ce2 at theta = pi/4 and to cp2 at theta = 0.
double ce_lim(const ChannelParams& params, const EntanglementAnsatz& ansatz);

/// Oracle route for ce_lim: entropies of the explicit ansatz states,
/// channel output and W matrices.
double ce_lim_via_states(const ChannelParams& params, const EntanglementAnsatz& ansatz);

/// Entanglement consumed by the ansatz, bits in [0, 2].
double entanglement_consumed(const EntanglementAnsatz& ansatz);

/// Product-state classical capacity, two uses, bits.
double cp2(const ChannelParams& params);

/// Per-point result bundle. Raw values are per two channel uses;
/// *_per_use are halved to match the figure convention.
struct CapacityReport {
  ChannelParams params;
  double ce2_bits;
  double qe2_qubits;
  double cp2_bits;
  std::array<double, 4> omega;
  std::array<double, 4> omega_tilde;

  double ce2_per_use() const { return ce2_bits / 2.0; }
  double qe2_per_use() const { return qe2_qubits / 2.0; }
  double cp2_per_use() const { return cp2_bits / 2.0; }
};

CapacityReport point_report(const ChannelParams& params);

}  // namespace adcap
