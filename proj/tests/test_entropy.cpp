#include <doctest.h>

#include <cmath>
#include <numbers>

#include "adcap/entropy.hpp"
#include "adcap/optimize.hpp"
#include "test_helpers.hpp"

using namespace adcap;
using adcap::testing::random_unitary;

namespace {
constexpr double kHalfPi = std::numbers::pi / 2.0;
}

TEST_CASE("shannon_entropy_bits") {
  CHECK(shannon_entropy_bits({1.0, 0.0, 0.0, 0.0}) == 0.0);
  CHECK(shannon_entropy_bits({0.25, 0.25, 0.25, 0.25}) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(shannon_entropy_bits({0.5, 0.25, 0.125, 0.125}) == doctest::Approx(1.75).epsilon(1e-14));
  CHECK(shannon_entropy_bits({1.0, -5e-11}) == 0.0);  // within clipping band
  CHECK_THROWS(shannon_entropy_bits({1.0, -1e-6}));
}

TEST_CASE("von Neumann entropy") {
  CHECK(von_neumann_entropy(DensityMatrix::maximally_mixed(4)) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(von_neumann_entropy(DensityMatrix::pure({0.6, cplx(0.0, 0.8)})) ==
        doctest::Approx(0.0).epsilon(1e-10));

  const auto out = apply(memory_channel(ChannelParams(std::numbers::pi / 3.0, 0.5)),
                         DensityMatrix::maximally_mixed(4));
  const double expected = shannon_entropy_bits({0.0390625, 0.1796875, 0.1796875, 0.6015625});
  CHECK(von_neumann_entropy(out) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("entropy exchange: identity channel has pure environment") {
  const KrausChannel identity{{ComplexMatrix::identity(4)}, 4};
  const auto ex = entropy_exchange(identity, random_density_matrix(4, 71));
  CHECK(ex.entropy_bits == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("entropy exchange of the memory channel on I/4") {
  const auto mixed = DensityMatrix::maximally_mixed(4);

  // Memoryless full damping: flat nonzero spectrum.
  const auto flat = entropy_exchange(memory_channel(ChannelParams(kHalfPi, 0.0)), mixed);
  CHECK(flat.entropy_bits == doctest::Approx(2.0).epsilon(1e-10));
  for (int i = 0; i < 4; ++i) CHECK(flat.spectrum[i] == doctest::Approx(0.25).epsilon(1e-12));

  const auto ex = memory_entropy_exchange(ChannelParams(std::numbers::pi / 3.0, 0.5), mixed);
  CHECK(ex.spectrum[0] == doctest::Approx(0.6015625).epsilon(1e-12));
  CHECK(ex.spectrum[1] == doctest::Approx(0.1640625).epsilon(1e-12));
  CHECK(ex.spectrum[2] == doctest::Approx(0.1171875).epsilon(1e-12));
  CHECK(ex.spectrum[3] == doctest::Approx(0.1171875).epsilon(1e-12));
}

TEST_CASE("shared-basis environment state vs the flat 6x6 W") {
  const auto mixed = DensityMatrix::maximally_mixed(4);

  // Single-branch endpoints coincide with the generic W-matrix exchange.
  for (double mu : {0.0, 1.0}) {
    const ChannelParams p(1.1, mu);
    CHECK(memory_entropy_exchange(p, mixed).entropy_bits ==
          doctest::Approx(entropy_exchange(memory_channel(p), mixed).entropy_bits)
              .epsilon(1e-10));
  }

  // For 0 < mu < 1 the flat W additionally records inter-branch coherence,
  // so its entropy is strictly larger: the branch average discards which
  // noise branch acted.
  const ChannelParams p(std::numbers::pi / 3.0, 0.5);
  const auto env = memory_environment_state(p, mixed);
  CHECK(max_abs_diff(env, env.adjoint()) < 1e-12);
  CHECK(std::abs(env.trace() - cplx(1.0)) < 1e-12);
  const double folded = memory_entropy_exchange(p, mixed).entropy_bits;
  const double flat_w = entropy_exchange(memory_channel(p), mixed).entropy_bits;
  CHECK(folded < flat_w - 1e-3);
}

TEST_CASE("W matrix is Hermitian with unit trace") {
  for (int k = 0; k < 10; ++k) {
    const ChannelParams p(kHalfPi * (k + 1) / 11.0, k / 10.0);
    const auto rho = random_density_matrix(4, 900 + k);
    const auto w = exchange_matrix(memory_channel(p), rho);
    CHECK(max_abs_diff(w, w.adjoint()) < 1e-12);
    CHECK(std::abs(w.trace() - cplx(1.0)) < 1e-12);
  }
}

TEST_CASE("entropy exchange is invariant under Kraus re-mixing") {
  std::mt19937 rng(17);
  const auto base = memory_channel(ChannelParams(1.0, 0.35));
  const auto rho = random_density_matrix(4, 1234);
  const double reference = entropy_exchange(base, rho).entropy_bits;

  for (int trial = 0; trial < 5; ++trial) {
    const auto u = random_unitary(6, rng);
    KrausChannel mixed{{}, 4};
    for (int i = 0; i < 6; ++i) {
      ComplexMatrix op(4);
      for (int j = 0; j < 6; ++j) {
        ComplexMatrix scaled = base.operators[j];
        scaled *= u(i, j);
        op += scaled;
      }
      mixed.operators.push_back(std::move(op));
    }
    CHECK(mixed.completeness_defect() < 1e-12);
    CHECK(entropy_exchange(mixed, rho).entropy_bits == doctest::Approx(reference).epsilon(1e-9));
  }
}

TEST_CASE("purification symmetry: S_e equals output entropy for pure inputs") {
  std::mt19937 rng(29);
  const auto ch = memory_channel(ChannelParams(0.7, 0.6));
  std::normal_distribution<double> dist(0.0, 1.0);
  for (int k = 0; k < 10; ++k) {
    std::vector<cplx> amp(4);
    double norm = 0.0;
    for (auto& a : amp) {
      a = cplx(dist(rng), dist(rng));
      norm += std::norm(a);
    }
    norm = std::sqrt(norm);
    for (auto& a : amp) a /= norm;
    const auto rho = DensityMatrix::pure(amp);
    CHECK(entropy_exchange(ch, rho).entropy_bits ==
          doctest::Approx(von_neumann_entropy(apply(ch, rho))).epsilon(1e-9));
  }
}
