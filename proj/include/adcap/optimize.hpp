#pragma once

#include <cstdint>

#include "adcap/capacities.hpp"
#include "adcap/channels.hpp"

namespace adcap {

/// Trade-off curve request: budgets on a uniform grid over [0, p_max].
struct TradeoffQuery {
  ChannelParams params;
  double p_max = 2.0;
  int budget_points = 11;
  int resolution = 64;  // coarse scan grid per axis

  TradeoffQuery(ChannelParams p, double pmax, int points, int res);
};

struct TradeoffPoint {
  double budget;  // P, bits
  double theta1;
  double theta2;
  double capacity;  // bits per two uses
};

/// For each budget P: maximize ce_lim over the feasible set
/// {entanglement_consumed(theta) <= P} by a coarse grid scan followed by
/// coordinate-wise golden-section refinement (1e-6 radian tolerance).
std::vector<TradeoffPoint> tradeoff_curve(const TradeoffQuery& query);

/// Best constrained ansatz for a single budget.
TradeoffPoint maximize_for_budget(const ChannelParams& params, double budget, int resolution);

/// Quantum mutual information S(rho) + S(N(rho)) - S_e(rho) of the memory
/// channel at an arbitrary input.
double mutual_information(const ChannelParams& params, const DensityMatrix& rho);

/// Hilbert-Schmidt-style sample G G^dag / Tr(G G^dag) with seeded
/// Gaussian entries; same seed gives the same matrix bit-for-bit.
DensityMatrix random_density_matrix(int dim, uint64_t seed);

}  // namespace adcap
