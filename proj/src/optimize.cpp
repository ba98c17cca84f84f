#include "adcap/optimize.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "adcap/entropy.hpp"

namespace adcap {

namespace {

constexpr double kQuarterPi = std::numbers::pi / 4.0;
constexpr double kGoldenRatio = 1.6180339887498949;

// Entanglement consumed by one pair: binary entropy of cos^2(theta).
double pair_cost(double theta) {
  const double c = std::cos(theta) * std::cos(theta);
  const double s = 1.0 - c;
  double h = 0.0;
  if (c > 0.0) h -= c * std::log2(c);
  if (s > 0.0) h -= s * std::log2(s);
  return h;
}

// Largest theta in [0, pi/4] with pair_cost(theta) <= budget.
double max_feasible_theta(double budget) {
  if (budget <= 0.0) return 0.0;
  if (budget >= 1.0) return kQuarterPi;
  double lo = 0.0, hi = kQuarterPi;
  while (hi - lo > 1e-13) {
    const double mid = 0.5 * (lo + hi);
    (pair_cost(mid) <= budget ? lo : hi) = mid;
  }
  return lo;
}

// Golden-section maximization of f on [a, b] to tol in the argument.
template <class F>
double golden_max(F&& f, double a, double b, double tol) {
  double c = b - (b - a) / kGoldenRatio;
  double d = a + (b - a) / kGoldenRatio;
  while (std::abs(b - a) > tol) {
    if (f(c) > f(d))
      b = d;
    else
      a = c;
    c = b - (b - a) / kGoldenRatio;
    d = a + (b - a) / kGoldenRatio;
  }
  return 0.5 * (a + b);
}

double gaussian(std::mt19937_64& rng) {
  // Hand-rolled Box-Muller so the stream is identical across platforms.
  const double u1 = (static_cast<double>(rng() >> 11) + 1.0) * 0x1.0p-53;
  const double u2 = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace

TradeoffQuery::TradeoffQuery(ChannelParams p, double pmax, int points, int res)
    : params(p), p_max(pmax), budget_points(points), resolution(res) {
  if (!(p_max >= 0.0 && p_max <= 2.0))
    throw std::invalid_argument("TradeoffQuery: budget must be in [0, 2]");
  if (budget_points < 1) throw std::invalid_argument("TradeoffQuery: need at least one budget point");
  if (resolution < 2) throw std::invalid_argument("TradeoffQuery: resolution must be >= 2");
}

TradeoffPoint maximize_for_budget(const ChannelParams& params, double budget, int resolution) {
  const double slack = 1e-12;
  double best1 = 0.0, best2 = 0.0;
  double best = ce_lim(params, EntanglementAnsatz::product());

  for (int i = 0; i <= resolution; ++i) {
    const double t1 = kQuarterPi * i / resolution;
    const double c1 = pair_cost(t1);
    if (c1 > budget + slack) break;
    // Largest feasible companion angle for this t1.
    const double t2_cap = max_feasible_theta(budget - c1);
    for (int j = 0; j <= resolution; ++j) {
      const double t2 = std::min(t2_cap, kQuarterPi * j / resolution);
      const double v = ce_lim(params, EntanglementAnsatz(t1, t2));
      if (v > best) {
        best = v;
        best1 = t1;
        best2 = t2;
      }
      if (t2 >= t2_cap) break;
    }
  }

  // Coordinate-wise golden-section refinement along the budget frontier.
  for (int pass = 0; pass < 8; ++pass) {
    const double cap1 = max_feasible_theta(budget - pair_cost(best2));
    best1 = golden_max(
        [&](double t) { return ce_lim(params, EntanglementAnsatz(t, best2)); }, 0.0, cap1, 1e-7);
    const double cap2 = max_feasible_theta(budget - pair_cost(best1));
    const double prev = best2;
    best2 = golden_max(
        [&](double t) { return ce_lim(params, EntanglementAnsatz(best1, t)); }, 0.0, cap2, 1e-7);
    if (std::abs(best2 - prev) < 1e-8) break;
  }

  // Budget-saturating candidates; exact endpoints win at P = 0 and P >= 2.
  std::vector<std::pair<double, double>> candidates = {
      {best1, best2},
      {max_feasible_theta(budget - pair_cost(best2)), best2},
      {best1, max_feasible_theta(budget - pair_cost(best1))},
      {max_feasible_theta(budget / 2.0), max_feasible_theta(budget / 2.0)}};
  if (budget >= 2.0 - slack) candidates.push_back({kQuarterPi, kQuarterPi});

  TradeoffPoint result{budget, 0.0, 0.0, ce_lim(params, EntanglementAnsatz::product())};
  for (const auto& [t1, t2] : candidates) {
    const double v = ce_lim(params, EntanglementAnsatz(t1, t2));
    if (v > result.capacity) result = {budget, t1, t2, v};
  }
  return result;
}

std::vector<TradeoffPoint> tradeoff_curve(const TradeoffQuery& query) {
  std::vector<TradeoffPoint> curve;
  curve.reserve(query.budget_points);
  for (int k = 0; k < query.budget_points; ++k) {
    const double p =
        query.budget_points == 1 ? query.p_max : query.p_max * k / (query.budget_points - 1);
    curve.push_back(maximize_for_budget(query.params, p, query.resolution));
  }
  return curve;
}

double mutual_information(const ChannelParams& params, const DensityMatrix& rho) {
  const auto ch = memory_channel(params);
  return von_neumann_entropy(rho) + von_neumann_entropy(apply(ch, rho)) -
         memory_entropy_exchange(params, rho).entropy_bits;
}

DensityMatrix random_density_matrix(int dim, uint64_t seed) {
  if (dim < 2) throw std::invalid_argument("random_density_matrix: dim must be >= 2");
  std::mt19937_64 rng(seed);
  ComplexMatrix g(dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) g(r, c) = cplx(gaussian(rng), gaussian(rng));
  ComplexMatrix gram = g * g.adjoint();
  gram *= cplx(1.0 / gram.trace().real());
  // Exact Hermitian symmetrization to absorb rounding in the product.
  ComplexMatrix sym = gram + gram.adjoint();
  sym *= cplx(0.5);
  return DensityMatrix(std::move(sym));
}

}  // namespace adcap
