#pragma once

#include "adcap/channels.hpp"
#include "adcap/matcore.hpp"

namespace adcap {

/// -sum p_i log2 p_i with 0 log 0 := 0. Entries in [-1e-10, 0) are
/// treated as 0; anything more negative throws.
double shannon_entropy_bits(const std::vector<double>& p);

/// Entropy of the state's spectrum, in bits.
double von_neumann_entropy(const DensityMatrix& rho);

struct EntropyExchange {
  double entropy_bits;
  std::vector<double> spectrum;  // W-matrix spectrum, descending
};

/// Entropy acquired by an initially pure environment: builds
/// W_ij = Tr(A_i rho A_j^dag) over the channel's ordered Kraus list and
/// diagonalizes it. W is Hermitian PSD with unit trace.
EntropyExchange entropy_exchange(const KrausChannel& ch, const DensityMatrix& rho);

/// The W matrix itself (one row/column per Kraus operator).
ComplexMatrix exchange_matrix(const KrausChannel& ch, const DensityMatrix& rho);

/// Environment output of the memory channel. The memory flag is classical
/// and unrecorded: both noise branches act on the same four environment
/// basis states |e_ij>, the correlated flips populating |e_00> and |e_11>,
/// and the branch environment outputs average with weights (1-mu, mu).
/// Distinct from the 6x6 W of the flat Kraus list, whose spectrum also
/// counts the sqrt((1-mu)mu) inter-branch coherences.
ComplexMatrix memory_environment_state(const ChannelParams& params, const DensityMatrix& rho);

/// Entropy exchange of the memory channel: spectrum and entropy of the
/// shared-basis environment state above (4 eigenvalues, descending).
EntropyExchange memory_entropy_exchange(const ChannelParams& params, const DensityMatrix& rho);

}  // namespace adcap
