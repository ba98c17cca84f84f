#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace adcap {

struct VerifyCheck {
  std::string name;
  bool passed;
  double max_deviation;
  double tolerance;
};

struct VerifyOptions {
  int grid = 21;                  // (chi, mu) grid per axis
  uint64_t seed = 12345;          // RNG seed for sampled checks
  int dominance_samples = 10000;  // random inputs per (chi, mu) point
  int lindblad_states = 50;
  double alpha = 1.3;
  // Test hook: scale omega_1 by (1 + 1e-6) inside the spectral check so a
  // broken closed form is provably caught.
  bool perturb_omega = false;
};

/// Runs every closed-form-vs-oracle, normalization, monotonicity,
/// Lindblad-correspondence and dominance check.
std::vector<VerifyCheck> run_verification(const VerifyOptions& opts);

/// One line per check: PASS/FAIL, name, max deviation, tolerance.
std::string format_report(const std::vector<VerifyCheck>& checks);

bool all_passed(const std::vector<VerifyCheck>& checks);

}  // namespace adcap
