// Command-line front end: capacity sweeps over (chi, mu), trade-off
// curves, single-point reports and the verification suite.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>
#include <thread>
#include <vector>

#include "adcap/capacities.hpp"
#include "adcap/optimize.hpp"
#include "adcap/verify.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";
constexpr double kHalfPi = std::numbers::pi / 2.0;
constexpr double kQuarterPi = std::numbers::pi / 4.0;

int output_precision() {
  if (const char* env = std::getenv("ADCAP_PRECISION")) {
    const int p = std::atoi(env);
    if (p >= 1 && p <= 17) return p;
  }
  return 12;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.*g", output_precision(), v);
  return buf;
}

// Angles are read as fractions of their natural range by default
// (chi in units of pi/2, theta in units of pi/4) so grid endpoints are
// exact decimals; --radians switches to raw radians.
double chi_from_input(double v, bool radians) { return radians ? v : v * kHalfPi; }
double theta_from_input(double v, bool radians) { return radians ? v : v * kQuarterPi; }

struct SweepConfig {
  int chi_points = 51;
  int mu_points = 51;
  std::string quantity = "ce2";
  double theta1 = 0.25;  // fraction of pi/4 unless --radians
  double theta2 = 0.25;
  bool radians = false;
  bool two_use = false;
  std::string format = "csv";
  std::string output;
  int jobs = 1;
};

double evaluate_quantity(const SweepConfig& cfg, const adcap::ChannelParams& p) {
  double value;
  if (cfg.quantity == "ce2")
    value = adcap::ce2(p);
  else if (cfg.quantity == "qe2")
    value = adcap::qe2(p);
  else if (cfg.quantity == "cp2")
    value = adcap::cp2(p);
  else
    value = adcap::ce_lim(p, adcap::EntanglementAnsatz(theta_from_input(cfg.theta1, cfg.radians),
                                                       theta_from_input(cfg.theta2, cfg.radians)));
  return cfg.two_use ? value : value / 2.0;
}

int write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return 0;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open '" << path << "' for writing\n";
    return 1;
  }
  out << text;
  if (!out.flush()) {
    std::cerr << "error: failed writing '" << path << "'\n";
    return 1;
  }
  return 0;
}

int run_sweep(const SweepConfig& cfg) {
  const int n_chi = cfg.chi_points, n_mu = cfg.mu_points;
  std::vector<double> values(static_cast<size_t>(n_chi) * n_mu);
  std::vector<double> chis(n_chi), mus(n_mu);
  for (int i = 0; i < n_chi; ++i) chis[i] = kHalfPi * i / (n_chi - 1);
  for (int j = 0; j < n_mu; ++j) mus[j] = static_cast<double>(j) / (n_mu - 1);

  auto worker = [&](int first, int last) {
    for (int idx = first; idx < last; ++idx)
      values[idx] = evaluate_quantity(cfg, adcap::ChannelParams(chis[idx / n_mu], mus[idx % n_mu]));
  };
  const int total = n_chi * n_mu;
  if (cfg.jobs <= 1) {
    worker(0, total);
  } else {
    std::vector<std::thread> pool;
    const int chunk = (total + cfg.jobs - 1) / cfg.jobs;
    for (int k = 0; k < cfg.jobs; ++k)
      pool.emplace_back(worker, k * chunk, std::min(total, (k + 1) * chunk));
    for (auto& th : pool) th.join();
  }

  std::string text;
  if (cfg.format == "csv") {
    text = "chi,mu,value\n";
    for (int i = 0; i < n_chi; ++i)
      for (int j = 0; j < n_mu; ++j)
        text += fmt(chis[i]) + "," + fmt(mus[j]) + "," +
                fmt(values[static_cast<size_t>(i) * n_mu + j]) + "\n";
  } else {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < n_chi; ++i)
      for (int j = 0; j < n_mu; ++j)
        rows.push_back({{"chi", chis[i]},
                        {"mu", mus[j]},
                        {"value", values[static_cast<size_t>(i) * n_mu + j]}});
    nlohmann::json doc = {{"metadata",
                           {{"quantity", cfg.quantity},
                            {"per_use", !cfg.two_use},
                            {"chi_points", n_chi},
                            {"mu_points", n_mu},
                            {"version", kVersion}}},
                          {"rows", rows}};
    text = doc.dump(2) + "\n";
  }
  return write_text(cfg.output, text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Capacities of the two-use amplitude-damping channel with Markov memory"};
  app.require_subcommand(1);

  SweepConfig sweep_cfg;
  auto* sweep = app.add_subcommand("sweep", "Tabulate a capacity over a (chi, mu) grid");
  sweep->add_option("--chi-points", sweep_cfg.chi_points, "Grid points along chi")
      ->check(CLI::Range(2, 100000));
  sweep->add_option("--mu-points", sweep_cfg.mu_points, "Grid points along mu")
      ->check(CLI::Range(2, 100000));
  sweep->add_option("--quantity", sweep_cfg.quantity, "One of ce2, qe2, cp2, ce_lim")
      ->check(CLI::IsMember({"ce2", "qe2", "cp2", "ce_lim"}));
  sweep->add_option("--theta1", sweep_cfg.theta1, "Ansatz angle 1 (ce_lim only)");
  sweep->add_option("--theta2", sweep_cfg.theta2, "Ansatz angle 2 (ce_lim only)");
  sweep->add_flag("--radians", sweep_cfg.radians, "Angles are raw radians, not fractions");
  sweep->add_flag("--two-use", sweep_cfg.two_use, "Report raw two-use values instead of per-use");
  sweep->add_option("--format", sweep_cfg.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  sweep->add_option("-o,--output", sweep_cfg.output, "Output path ('-' for stdout)");
  sweep->add_option("--jobs", sweep_cfg.jobs, "Worker threads")->check(CLI::Range(1, 256));

  double to_chi = 2.0 / 3.0, to_mu = 0.5;
  int to_points = 11, to_resolution = 64;
  bool to_radians = false;
  std::string to_output;
  auto* tradeoff = app.add_subcommand("tradeoff", "Capacity vs entanglement budget");
  tradeoff->add_option("--chi", to_chi, "Channel noise");
  tradeoff->add_option("--mu", to_mu, "Memory")->check(CLI::Range(0.0, 1.0));
  tradeoff->add_flag("--radians", to_radians, "chi is raw radians, not a fraction of pi/2");
  tradeoff->add_option("--budget-points", to_points, "Budget grid points")->check(CLI::Range(1, 10000));
  tradeoff->add_option("--resolution", to_resolution, "Coarse search grid per axis")
      ->check(CLI::Range(2, 4096));
  tradeoff->add_option("-o,--output", to_output, "Output path ('-' for stdout)");

  double pt_chi = 0.5, pt_mu = 0.5;
  bool pt_radians = false;
  auto* point = app.add_subcommand("point", "Full capacity report at one (chi, mu)");
  point->add_option("--chi", pt_chi, "Channel noise");
  point->add_option("--mu", pt_mu, "Memory")->check(CLI::Range(0.0, 1.0));
  point->add_flag("--radians", pt_radians, "chi is raw radians, not a fraction of pi/2");

  adcap::VerifyOptions vopts;
  bool perturb = false;
  auto* verify = app.add_subcommand("verify", "Run the closed-form/oracle verification suite");
  verify->add_option("--grid", vopts.grid, "Parameter grid per axis")->check(CLI::Range(3, 201));
  verify->add_option("--seed", vopts.seed, "RNG seed");
  verify->add_option("--samples", vopts.dominance_samples, "Random inputs per dominance point")
      ->check(CLI::Range(1, 10000000));
  verify->add_flag("--perturb", perturb, "Self-test hook: inject a 1e-6 spectral error");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (sweep->parsed()) return run_sweep(sweep_cfg);

    if (tradeoff->parsed()) {
      const adcap::ChannelParams params(chi_from_input(to_chi, to_radians), to_mu);
      const auto curve =
          adcap::tradeoff_curve(adcap::TradeoffQuery(params, 2.0, to_points, to_resolution));
      std::string text = "P,theta1,theta2,capacity\n";
      for (const auto& pt : curve)
        text += fmt(pt.budget) + "," + fmt(pt.theta1) + "," + fmt(pt.theta2) + "," +
                fmt(pt.capacity) + "\n";
      return write_text(to_output, text);
    }

    if (point->parsed()) {
      const adcap::ChannelParams params(chi_from_input(pt_chi, pt_radians), pt_mu);
      const auto report = adcap::point_report(params);
      nlohmann::json doc = {
          {"chi", params.chi},
          {"mu", params.mu},
          {"two_use", {{"ce2", report.ce2_bits}, {"qe2", report.qe2_qubits}, {"cp2", report.cp2_bits}}},
          {"per_use",
           {{"ce2", report.ce2_per_use()}, {"qe2", report.qe2_per_use()}, {"cp2", report.cp2_per_use()}}},
          {"omega", report.omega},
          {"omega_tilde", report.omega_tilde},
          {"version", kVersion}};
      std::cout << doc.dump(2) << "\n";
      return 0;
    }

    if (verify->parsed()) {
      vopts.perturb_omega = perturb;
      const auto checks = adcap::run_verification(vopts);
      std::cout << adcap::format_report(checks);
      return adcap::all_passed(checks) ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
