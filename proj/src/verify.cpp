#include "adcap/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "adcap/capacities.hpp"
#include "adcap/channels.hpp"
#include "adcap/entropy.hpp"
#include "adcap/lindblad.hpp"
#include "adcap/matcore.hpp"
#include "adcap/optimize.hpp"

namespace adcap {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;
constexpr double kQuarterPi = std::numbers::pi / 4.0;

std::vector<ChannelParams> param_grid(int n) {
  std::vector<ChannelParams> grid;
  grid.reserve(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      grid.emplace_back(kHalfPi * i / (n - 1), static_cast<double>(j) / (n - 1));
  return grid;
}

double spectrum_mismatch(std::vector<double> a, std::vector<double> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  double d = 0.0;
  for (size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

VerifyCheck make_check(std::string name, double deviation, double tol) {
  return {std::move(name), deviation <= tol, deviation, tol};
}

VerifyCheck check_output_spectrum(const VerifyOptions& opts) {
  const auto mixed = DensityMatrix::maximally_mixed(4);
  double dev = 0.0;
  for (const auto& p : param_grid(opts.grid)) {
    auto closed = output_spectrum_closed(p);
    if (opts.perturb_omega) closed[0] *= 1.0 + 1e-6;
    const auto oracle = apply(memory_channel(p), mixed).spectrum();
    dev = std::max(dev, spectrum_mismatch({closed.begin(), closed.end()}, oracle));
  }
  return make_check("output-spectrum closed form vs channel oracle", dev, 1e-10);
}

VerifyCheck check_environment_spectrum(const VerifyOptions& opts) {
  const auto mixed = DensityMatrix::maximally_mixed(4);
  double dev = 0.0;
  for (const auto& p : param_grid(opts.grid)) {
    const auto closed = environment_spectrum_closed(p);
    const auto w = memory_entropy_exchange(p, mixed).spectrum;  // descending, 4 values
    std::vector<double> sorted(closed.begin(), closed.end());
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    double d = 0.0;
    for (int i = 0; i < 4; ++i) d = std::max(d, std::abs(sorted[i] - w[i]));
    dev = std::max(dev, d);
  }
  return make_check("environment-spectrum closed form vs W-matrix oracle", dev, 1e-10);
}

VerifyCheck check_completeness(const VerifyOptions& opts) {
  double dev = 0.0;
  for (const auto& p : param_grid(opts.grid))
    dev = std::max(dev, memory_channel(p).completeness_defect());
  return make_check("Kraus completeness on parameter grid", dev, 1e-12);
}

VerifyCheck check_normalization(const VerifyOptions& opts) {
  double dev = 0.0;
  const EntanglementAnsatz ansatz(kQuarterPi / 3.0, kQuarterPi / 2.0);
  for (const auto& p : param_grid(opts.grid)) {
    auto sum4 = [](const std::array<double, 4>& v) { return v[0] + v[1] + v[2] + v[3]; };
    dev = std::max(dev, std::abs(sum4(output_spectrum_closed(p)) - 1.0));
    dev = std::max(dev, std::abs(sum4(environment_spectrum_closed(p)) - 1.0));
    for (const auto& block : limited_exchange_spectra_closed(p, ansatz))
      dev = std::max(dev, std::abs(sum4(block) - 1.0));
  }
  return make_check("closed-form spectra sum to 1", dev, 1e-12);
}

VerifyCheck check_dual_route(const VerifyOptions& opts) {
  double dev = 0.0;
  const EntanglementAnsatz ansatz(kQuarterPi * 0.4, kQuarterPi * 0.7);
  for (const auto& p : param_grid(opts.grid)) {
    dev = std::max(dev, std::abs(ce2(p) - ce2_via_states(p)));
    dev = std::max(dev, std::abs(ce_lim(p, ansatz) - ce_lim_via_states(p, ansatz)));
  }
  return make_check("closed-form capacities vs entropy-pipeline route", dev, 1e-10);
}

VerifyCheck check_reductions(const VerifyOptions& opts) {
  double dev = 0.0;
  for (const auto& p : param_grid(opts.grid)) {
    dev = std::max(dev, std::abs(ce_lim(p, EntanglementAnsatz::maximal()) - ce2(p)));
    dev = std::max(dev, std::abs(ce_lim(p, EntanglementAnsatz::product()) - cp2(p)));
    dev = std::max(dev, std::abs(qe2(p) - ce2(p) / 2.0));
  }
  return make_check("ce_lim endpoint reductions to ce2 and cp2", dev, 1e-10);
}

VerifyCheck check_monotonicity(const VerifyOptions& opts) {
  const int n = opts.grid;
  double worst_drop = 0.0;
  for (int i = 0; i < n; ++i) {
    const double chi = kHalfPi * i / (n - 1);
    double prev_ce = -1.0, prev_cp = -1.0;
    for (int j = 0; j < n; ++j) {
      const ChannelParams p(chi, static_cast<double>(j) / (n - 1));
      const double ce = ce2(p), cp = cp2(p);
      if (j > 0) {
        worst_drop = std::max(worst_drop, prev_ce - ce);
        worst_drop = std::max(worst_drop, prev_cp - cp);
      }
      prev_ce = ce;
      prev_cp = cp;
    }
  }
  // ce_lim in each theta at a few representative channel points.
  for (const ChannelParams p : {ChannelParams(kHalfPi / 3.0, 0.25), ChannelParams(kHalfPi, 0.8),
                                ChannelParams(kHalfPi * 0.9, 0.0)}) {
    for (int i = 0; i < n; ++i) {
      const double fixed = kQuarterPi * i / (n - 1);
      double prev1 = -1.0, prev2 = -1.0;
      for (int j = 0; j < n; ++j) {
        const double moving = kQuarterPi * j / (n - 1);
        const double v1 = ce_lim(p, EntanglementAnsatz(moving, fixed));
        const double v2 = ce_lim(p, EntanglementAnsatz(fixed, moving));
        if (j > 0) {
          worst_drop = std::max(worst_drop, prev1 - v1);
          worst_drop = std::max(worst_drop, prev2 - v2);
        }
        prev1 = v1;
        prev2 = v2;
      }
    }
  }
  return make_check("monotonicity of ce2/cp2 in mu and ce_lim in theta", worst_drop, 1e-12);
}

VerifyCheck check_memory_positivity(const VerifyOptions& opts) {
  const int n = opts.grid;
  double min_value = 1e300;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double mu = static_cast<double>(j) / (n - 1);
      if (mu < 0.05) continue;
      min_value = std::min(min_value, ce2(ChannelParams(kHalfPi * i / (n - 1), mu)));
    }
  // Deviation is how far below the strict-positivity floor we got.
  const double dev = min_value > 0.0 ? 0.0 : -min_value + 1e-15;
  return make_check("ce2 strictly positive whenever mu >= 0.05", dev, 0.0);
}

VerifyCheck check_lindblad_correspondence(const VerifyOptions& opts) {
  const double alpha = opts.alpha;
  double dev = 0.0;
  for (double scaled_t : {0.1, 0.5, 1.0, 2.0, 5.0}) {
    const double t = scaled_t / alpha;
    const double chi = std::acos(std::exp(-alpha * t / 2.0));
    const auto kraus = correlated_kraus(chi);
    for (int k = 0; k < opts.lindblad_states; ++k) {
      const auto rho = random_density_matrix(4, opts.seed + 1000 * k + static_cast<uint64_t>(scaled_t * 10));
      dev = std::max(dev, max_abs_diff(evolve_raw(alpha, t, rho.matrix()),
                                       apply_raw(kraus, rho.matrix())));
    }
  }
  return make_check("exp(Lt) equals correlated Kraus map at cos(chi)=e^{-at/2}", dev, 1e-9);
}

VerifyCheck check_damping_basis(const VerifyOptions& opts) {
  const double alpha = opts.alpha;
  const auto basis = damping_basis(alpha);
  double dev = 0.0;
  for (double scaled_t : {0.1, 1.0, 5.0}) {
    const double t = scaled_t / alpha;
    for (int k = 0; k < 10; ++k) {
      const auto rho = random_density_matrix(4, opts.seed + 77 * k);
      dev = std::max(dev, max_abs_diff(reconstruct(basis, t, rho.matrix()),
                                       evolve_raw(alpha, t, rho.matrix())));
    }
  }
  return make_check("damping-basis reconstruction vs matrix exponential", dev, 1e-8);
}

VerifyCheck check_duality(const VerifyOptions& opts) {
  const auto basis = damping_basis(opts.alpha);
  double dev = 0.0;
  for (int i = 0; i < 16; ++i)
    for (int j = 0; j < 16; ++j) {
      cplx tr = 0.0;
      for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) tr += basis.left_ops[i](r, c) * basis.right_ops[j](c, r);
      dev = std::max(dev, std::abs(tr - (i == j ? cplx(1.0) : cplx(0.0))));
    }
  return make_check("damping-basis duality Tr(L_i R_j) = delta_ij", dev, 1e-9);
}

VerifyCheck check_dominance(const VerifyOptions& opts) {
  double dev = 0.0;  // largest excess of MI(rho) over MI(I/4)
  uint64_t seed = opts.seed;
  for (double chi_frac : {0.25, 0.5, 1.0})
    for (double mu : {0.0, 0.5, 1.0}) {
      const ChannelParams p(kHalfPi * chi_frac, mu);
      const double reference = ce2(p);
      const auto ch = memory_channel(p);
      for (int k = 0; k < opts.dominance_samples; ++k) {
        const auto rho = random_density_matrix(4, seed++);
        const double mi = von_neumann_entropy(rho) +
                          von_neumann_entropy(apply(ch, rho)) -
                          memory_entropy_exchange(p, rho).entropy_bits;
        dev = std::max(dev, mi - reference);
      }
    }
  return make_check("mutual information never exceeds the I/4 value", std::max(dev, 0.0), 1e-9);
}

VerifyCheck check_tradeoff(const VerifyOptions&) {
  const TradeoffQuery query(ChannelParams(kHalfPi * 2.0 / 3.0, 0.5), 2.0, 9, 64);
  const auto curve = tradeoff_curve(query);
  double dev = 0.0;
  for (size_t i = 1; i < curve.size(); ++i)
    dev = std::max(dev, curve[i - 1].capacity - curve[i].capacity);
  dev = std::max(dev, std::abs(curve.front().capacity - cp2(query.params)));
  dev = std::max(dev, std::abs(curve.back().capacity - ce2(query.params)));
  return make_check("trade-off curve monotone with matching endpoints", dev, 1e-8);
}

}  // namespace

std::vector<VerifyCheck> run_verification(const VerifyOptions& opts) {
  return {check_output_spectrum(opts),
          check_environment_spectrum(opts),
          check_completeness(opts),
          check_normalization(opts),
          check_dual_route(opts),
          check_reductions(opts),
          check_monotonicity(opts),
          check_memory_positivity(opts),
          check_lindblad_correspondence(opts),
          check_damping_basis(opts),
          check_duality(opts),
          check_dominance(opts),
          check_tradeoff(opts)};
}

std::string format_report(const std::vector<VerifyCheck>& checks) {
  std::ostringstream out;
  for (const auto& c : checks) {
    char line[256];
    std::snprintf(line, sizeof(line), "%s  %-58s max dev %.3e (tol %.1e)\n",
                  c.passed ? "PASS" : "FAIL", c.name.c_str(), c.max_deviation, c.tolerance);
    out << line;
  }
  return out.str();
}

bool all_passed(const std::vector<VerifyCheck>& checks) {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

}  // namespace adcap
