#pragma once

#include "adcap/matcore.hpp"

namespace adcap {

/// Damping angle chi (radians, [0, pi/2]) and memory mu ([0, 1]).
struct ChannelParams {
  double chi;
  double mu;

  ChannelParams(double chi_, double mu_);
};

/// CPTP map as a list of Kraus operators, weights folded in as
/// sqrt(weight) * A. Operator order is fixed so that entropy-exchange
/// matrix indexing is reproducible; zero-weight operators are kept.
struct KrausChannel {
  std::vector<ComplexMatrix> operators;
  int input_dim;

  /// max entry of |sum_i A_i^dag A_i - I|.
  double completeness_defect() const;
};

/// Single-use amplitude-damping channel:
/// A0 = [[cos chi, 0], [0, 1]], A1 = [[0, 0], [sin chi, 0]].
/// Basis convention: |0> is the excited state.
KrausChannel amplitude_damping_kraus(double chi);

/// Two-use channel with perfectly correlated damping; two 4x4 operators.
KrausChannel correlated_kraus(double chi);

/// Two-use uncorrelated product channel {A_i (x) A_j}.
KrausChannel uncorrelated_kraus(double chi);

/// Markov-memory mix: sqrt(1-mu) * {A_i (x) A_j} followed by
/// sqrt(mu) * {A_kk^c}. Operator order: [u00, u01, u10, u11, c00, c11].
KrausChannel memory_channel(const ChannelParams& params);

/// sum_i A_i rho A_i^dag.
DensityMatrix apply(const KrausChannel& ch, const DensityMatrix& rho);

/// Same map on a raw matrix (no density-matrix validation of the output).
ComplexMatrix apply_raw(const KrausChannel& ch, const ComplexMatrix& m);

}  // namespace adcap
