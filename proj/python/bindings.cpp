#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "adcap/capacities.hpp"
#include "adcap/channels.hpp"
#include "adcap/entropy.hpp"
#include "adcap/lindblad.hpp"
#include "adcap/matcore.hpp"
#include "adcap/optimize.hpp"
#include "adcap/verify.hpp"

namespace py = pybind11;
using namespace adcap;

namespace {

ComplexMatrix matrix_from_rows(const std::vector<std::vector<cplx>>& rows) {
  const int n = static_cast<int>(rows.size());
  ComplexMatrix m(n);
  for (int r = 0; r < n; ++r) {
    if (static_cast<int>(rows[r].size()) != n)
      throw std::invalid_argument("matrix rows must form a square matrix");
    for (int c = 0; c < n; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

std::vector<std::vector<cplx>> matrix_to_rows(const ComplexMatrix& m) {
  std::vector<std::vector<cplx>> rows(m.dim(), std::vector<cplx>(m.dim()));
  for (int r = 0; r < m.dim(); ++r)
    for (int c = 0; c < m.dim(); ++c) rows[r][c] = m(r, c);
  return rows;
}

DensityMatrix density_from_rows(const std::vector<std::vector<cplx>>& rows) {
  return DensityMatrix(matrix_from_rows(rows));
}

}  // namespace

PYBIND11_MODULE(_adcap, m) {
  m.doc() = "Capacities of the two-use amplitude-damping channel with Markov memory";

  m.def("ce2", [](double chi, double mu) { return ce2(ChannelParams(chi, mu)); },
        py::arg("chi"), py::arg("mu"),
        "Entanglement-assisted classical capacity, bits per two uses.");
  m.def("qe2", [](double chi, double mu) { return qe2(ChannelParams(chi, mu)); },
        py::arg("chi"), py::arg("mu"),
        "Entanglement-assisted quantum capacity, qubits per two uses.");
  m.def("cp2", [](double chi, double mu) { return cp2(ChannelParams(chi, mu)); },
        py::arg("chi"), py::arg("mu"),
        "Product-state classical capacity, bits per two uses.");
  m.def("ce_lim",
        [](double chi, double mu, double theta1, double theta2) {
          return ce_lim(ChannelParams(chi, mu), EntanglementAnsatz(theta1, theta2));
        },
        py::arg("chi"), py::arg("mu"), py::arg("theta1"), py::arg("theta2"),
        "Classical capacity with limited entanglement, bits per two uses.");
  m.def("entanglement_consumed",
        [](double theta1, double theta2) {
          return entanglement_consumed(EntanglementAnsatz(theta1, theta2));
        },
        py::arg("theta1"), py::arg("theta2"));

  m.def("output_spectrum",
        [](double chi, double mu) {
          const auto v = output_spectrum_closed(ChannelParams(chi, mu));
          return std::vector<double>(v.begin(), v.end());
        },
        py::arg("chi"), py::arg("mu"));
  m.def("environment_spectrum",
        [](double chi, double mu) {
          const auto v = environment_spectrum_closed(ChannelParams(chi, mu));
          return std::vector<double>(v.begin(), v.end());
        },
        py::arg("chi"), py::arg("mu"));

  m.def("mutual_information",
        [](double chi, double mu, const std::vector<std::vector<cplx>>& rho) {
          return mutual_information(ChannelParams(chi, mu), density_from_rows(rho));
        },
        py::arg("chi"), py::arg("mu"), py::arg("rho"),
        "Quantum mutual information of the memory channel at an arbitrary input.");
  m.def("random_density_matrix",
        [](int dim, uint64_t seed) { return matrix_to_rows(random_density_matrix(dim, seed).matrix()); },
        py::arg("dim"), py::arg("seed"));
  m.def("apply_memory_channel",
        [](double chi, double mu, const std::vector<std::vector<cplx>>& rho) {
          return matrix_to_rows(
              apply(memory_channel(ChannelParams(chi, mu)), density_from_rows(rho)).matrix());
        },
        py::arg("chi"), py::arg("mu"), py::arg("rho"));
  m.def("evolve",
        [](double alpha, double t, const std::vector<std::vector<cplx>>& rho) {
          return matrix_to_rows(evolve(alpha, t, density_from_rows(rho)).matrix());
        },
        py::arg("alpha"), py::arg("t"), py::arg("rho"),
        "Correlated-damping Lindblad evolution of a two-qubit state.");

  m.def("tradeoff_curve",
        [](double chi, double mu, int budget_points, int resolution) {
          const auto curve =
              tradeoff_curve(TradeoffQuery(ChannelParams(chi, mu), 2.0, budget_points, resolution));
          py::list out;
          for (const auto& pt : curve)
            out.append(py::dict(py::arg("P") = pt.budget, py::arg("theta1") = pt.theta1,
                                py::arg("theta2") = pt.theta2, py::arg("capacity") = pt.capacity));
          return out;
        },
        py::arg("chi"), py::arg("mu"), py::arg("budget_points") = 11, py::arg("resolution") = 64);

  m.def("point_report", [](double chi, double mu) {
    const auto r = point_report(ChannelParams(chi, mu));
    py::dict d;
    d["chi"] = chi;
    d["mu"] = mu;
    d["ce2"] = r.ce2_bits;
    d["qe2"] = r.qe2_qubits;
    d["cp2"] = r.cp2_bits;
    d["omega"] = std::vector<double>(r.omega.begin(), r.omega.end());
    d["omega_tilde"] = std::vector<double>(r.omega_tilde.begin(), r.omega_tilde.end());
    return d;
  });

  m.def("verify", [](int grid, uint64_t seed, int samples) {
    VerifyOptions opts;
    opts.grid = grid;
    opts.seed = seed;
    opts.dominance_samples = samples;
    const auto checks = run_verification(opts);
    py::list out;
    for (const auto& c : checks)
      out.append(py::dict(py::arg("name") = c.name, py::arg("passed") = c.passed,
                          py::arg("max_deviation") = c.max_deviation,
                          py::arg("tolerance") = c.tolerance));
    return out;
  }, py::arg("grid") = 21, py::arg("seed") = 12345, py::arg("samples") = 10000);
}
