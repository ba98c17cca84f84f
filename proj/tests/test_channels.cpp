#include <doctest.h>

#include <cmath>
#include <numbers>

#include "adcap/channels.hpp"
#include "adcap/optimize.hpp"
#include "test_helpers.hpp"

using namespace adcap;

namespace {
constexpr double kHalfPi = std::numbers::pi / 2.0;
}

TEST_CASE("amplitude damping Kraus operators") {
  const auto noiseless = amplitude_damping_kraus(0.0);
  CHECK(max_abs_diff(noiseless.operators[0], ComplexMatrix::identity(2)) == 0.0);
  CHECK(max_abs(noiseless.operators[1]) == 0.0);

  const auto full = amplitude_damping_kraus(kHalfPi);
  CHECK(std::abs(full.operators[0](0, 0)) < 1e-16);
  CHECK(full.operators[0](1, 1) == cplx(1.0));
  CHECK(full.operators[1](1, 0) == cplx(1.0));

  for (double chi : {0.1, 0.9, 1.3}) CHECK(amplitude_damping_kraus(chi).completeness_defect() < 1e-15);

  CHECK_THROWS(amplitude_damping_kraus(-0.1));
  CHECK_THROWS(amplitude_damping_kraus(2.0));
}

TEST_CASE("correlated Kraus operators") {
  const auto noiseless = correlated_kraus(0.0);
  CHECK(max_abs_diff(noiseless.operators[0], ComplexMatrix::identity(4)) == 0.0);
  CHECK(max_abs(noiseless.operators[1]) == 0.0);

  CHECK(correlated_kraus(std::numbers::pi / 5.0).completeness_defect() < 1e-15);

  // |00><00| decays to cos^2 |00><00| + sin^2 |11><11|.
  const double chi = 0.8;
  const auto ch = correlated_kraus(chi);
  const auto out = apply(ch, DensityMatrix::pure({1.0, 0.0, 0.0, 0.0}));
  ComplexMatrix expected(4);
  expected(0, 0) = std::cos(chi) * std::cos(chi);
  expected(3, 3) = std::sin(chi) * std::sin(chi);
  CHECK(max_abs_diff(out.matrix(), expected) < 1e-15);
}

TEST_CASE("memory channel endpoints and operator order") {
  const ChannelParams p(0.9, 0.3);
  const auto ch = memory_channel(p);
  REQUIRE(ch.operators.size() == 6);
  // Order [u00, u01, u10, u11, c00, c11]: u00 acts diagonally, c11 has a
  // single entry at (3, 0).
  CHECK(std::abs(ch.operators[0](0, 0) -
                 cplx(std::sqrt(0.7) * std::cos(0.9) * std::cos(0.9))) < 1e-15);
  CHECK(std::abs(ch.operators[5](3, 0) - cplx(std::sqrt(0.3) * std::sin(0.9))) < 1e-15);

  std::mt19937 rng(3);
  for (int k = 0; k < 50; ++k) {
    const auto rho = random_density_matrix(4, 100 + k);
    // mu = 0 equals the product of two single-use channels.
    const auto mem0 = apply(memory_channel(ChannelParams(0.9, 0.0)), rho);
    const auto prod = apply(uncorrelated_kraus(0.9), rho);
    CHECK(max_abs_diff(mem0.matrix(), prod.matrix()) < 1e-12);
    // mu = 1 equals the correlated pair.
    const auto mem1 = apply(memory_channel(ChannelParams(0.9, 1.0)), rho);
    const auto corr = apply(correlated_kraus(0.9), rho);
    CHECK(max_abs_diff(mem1.matrix(), corr.matrix()) < 1e-12);
  }
}

TEST_CASE("memory channel spectrum at (pi/3, 0.5) on the maximally mixed input") {
  const auto out =
      apply(memory_channel(ChannelParams(std::numbers::pi / 3.0, 0.5)), DensityMatrix::maximally_mixed(4));
  const auto spec = out.spectrum();  // ascending
  CHECK(spec[0] == doctest::Approx(0.0390625).epsilon(1e-12));
  CHECK(spec[1] == doctest::Approx(0.1796875).epsilon(1e-12));
  CHECK(spec[2] == doctest::Approx(0.1796875).epsilon(1e-12));
  CHECK(spec[3] == doctest::Approx(0.6015625).epsilon(1e-12));
}

TEST_CASE("completeness holds across the parameter grid") {
  for (int i = 0; i < 21; ++i)
    for (int j = 0; j < 21; ++j) {
      const ChannelParams p(kHalfPi * i / 20.0, j / 20.0);
      CHECK(memory_channel(p).completeness_defect() < 1e-12);
    }
}

TEST_CASE("apply preserves trace, Hermiticity and positivity") {
  const auto ch = memory_channel(ChannelParams(1.1, 0.4));
  for (int k = 0; k < 20; ++k) {
    const auto rho = random_density_matrix(4, 500 + k);
    const auto out = apply_raw(ch, rho.matrix());
    CHECK(std::abs(out.trace() - cplx(1.0)) < 1e-12);
    CHECK(max_abs_diff(out, out.adjoint()) < 1e-13);
    CHECK(hermitian_eigenvalues(out).front() >= -1e-10);
  }
  CHECK_THROWS(apply(ch, DensityMatrix::maximally_mixed(2)));
}

TEST_CASE("identity channel and full decay") {
  const KrausChannel identity{{ComplexMatrix::identity(4)}, 4};
  const auto rho = random_density_matrix(4, 9);
  CHECK(max_abs_diff(apply(identity, rho).matrix(), rho.matrix()) == 0.0);

  const auto decay = apply(amplitude_damping_kraus(kHalfPi), DensityMatrix::pure({1.0, 0.0}));
  CHECK(decay.matrix()(1, 1) == cplx(1.0));
  CHECK(std::abs(decay.matrix()(0, 0)) < 1e-16);
}
