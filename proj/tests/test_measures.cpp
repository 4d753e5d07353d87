// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <vector>

#include "core/measures.hpp"
#include "core/rng.hpp"
#include "core/stats.hpp"

using namespace gaussens;

TEST_CASE("micro-canonical draws respect the support exactly") {
  const MicrocanonicalConfig cfg{4, 30.0};
  RngStream rng(41, 0);
  for (int i = 0; i < 5000; ++i) {
    const Eigen::VectorXd e = sample_mc_energies(cfg, rng);
    CHECK(e.minCoeff() >= 2.0);
    CHECK(e.sum() <= cfg.total_energy);
  }
}

TEST_CASE("degenerate cap pins every mode at the vacuum") {
  const MicrocanonicalConfig cfg{3, 6.0};
  RngStream rng(42, 0);
  const Eigen::VectorXd e = sample_mc_energies(cfg, rng);
  CHECK(e.minCoeff() == 2.0);
  CHECK(e.maxCoeff() == 2.0);
}

TEST_CASE("n = 1 energy is uniform on [2, E]") {
  const MicrocanonicalConfig cfg{1, 6.0};
  RngStream rng(43, 0);
  std::vector<double> draws(10000);
  for (double& d : draws) d = sample_mc_energies(cfg, rng)[0];
  const auto cdf = [&](double e) { return (e - 2.0) / (cfg.total_energy - 2.0); };
  CHECK(ks_test(draws, cdf).p_value > 0.001);
}

TEST_CASE("marginal density") {
  // n = 1: constant 1/(E-2)
  const MicrocanonicalConfig one{1, 6.0};
  CHECK(mc_marginal_density(3.7, one) == doctest::Approx(0.25).epsilon(1e-14));
  // vanishes at the top of the support for n >= 2
  const MicrocanonicalConfig cfg{3, 18.0};
  CHECK(mc_marginal_density(18.0 - 2.0 * 2, cfg) == 0.0);
  CHECK(mc_marginal_density(30.0, cfg) == 0.0);
  CHECK_THROWS_AS(mc_marginal_density(1.0, cfg), InvariantError);

  // integrates to one (Simpson)
  const double lo = 2.0, hi = cfg.total_energy - 2.0 * (cfg.n - 1);
  const int panels = 20000;
  double integral = mc_marginal_density(lo, cfg) + mc_marginal_density(hi, cfg);
  for (int k = 1; k < panels; ++k) {
    const double e = lo + (hi - lo) * k / panels;
    integral += (k % 2 == 1 ? 4.0 : 2.0) * mc_marginal_density(e, cfg);
  }
  integral *= (hi - lo) / (3.0 * panels);
  CHECK(integral == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("empirical marginal matches the density (n = 3)") {
  const MicrocanonicalConfig cfg{3, 18.0};  // reduced energy 12
  RngStream rng(44, 0);
  std::vector<double> draws(10000);
  for (double& d : draws) d = sample_mc_energies(cfg, rng)[0];
  const double spare = cfg.reduced_energy();
  const auto cdf = [&](double e) {
    const double u = std::clamp((e - 2.0) / spare, 0.0, 1.0);
    return 1.0 - std::pow(1.0 - u, cfg.n);
  };
  CHECK(ks_test(draws, cdf).p_value > 0.001);
}

TEST_CASE("exchangeability of the coordinates") {
  const MicrocanonicalConfig cfg{5, 40.0};
  RngStream rng(45, 0);
  std::vector<double> first(10000), last(10000);
  for (int i = 0; i < 10000; ++i) {
    const Eigen::VectorXd e = sample_mc_energies(cfg, rng);
    first[i] = e[0];
    last[i] = e[cfg.n - 1];
  }
  CHECK(ks_test(first, last).p_value > 0.001);
}

TEST_CASE("large-n marginal approaches the Boltzmann weight") {
  const int n = 10000;
  const double t = 3.0;
  const MicrocanonicalConfig cfg{n, n * (t + 2.0)};
  for (double e : {2.5, 4.0, 8.0, 14.0}) {
    const double exact = std::exp(-(e - 2.0) / t) / t;
    CHECK(mc_marginal_density(e, cfg) == doctest::Approx(exact).epsilon(0.01));
  }
}

TEST_CASE("normalisation") {
  CHECK(mc_normalization({1, 4.0}) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(mc_normalization({2, 5.0}) == doctest::Approx(2.0).epsilon(1e-14));
  // reciprocal equals the simplex volume spare^n / n!
  for (int n : {1, 2, 3}) {
    const MicrocanonicalConfig cfg{n, 2.0 * n + 3.5};
    double volume = 1.0;
    for (int k = 1; k <= n; ++k) volume *= 3.5 / k;
    CHECK(mc_normalization(cfg) * volume == doctest::Approx(1.0).epsilon(1e-12));
  }
  CHECK_THROWS_AS(mc_normalization({2, 4.0}), InvariantError);
}

TEST_CASE("canonical sampling") {
  RngStream rng(46, 0);
  CHECK_THROWS_AS(sample_can_energies({2, 0.0}, rng), InvariantError);

  const CanonicalConfig tiny{4, 1e-12};
  CHECK(sample_can_energies(tiny, rng).maxCoeff() == doctest::Approx(2.0).epsilon(1e-9));

  const CanonicalConfig cfg{1, 4.0};
  MomentAccumulator acc;
  std::vector<double> draws(100000);
  for (double& d : draws) {
    d = sample_can_energies(cfg, rng)[0];
    acc.add(d);
  }
  CHECK(std::abs(acc.mean - 6.0) < 3.0 * acc.std_error());
  const auto cdf = [&](double e) { return 1.0 - std::exp(-(e - 2.0) / cfg.temperature); };
  CHECK(ks_test(draws, cdf).p_value > 0.001);
}

TEST_CASE("micro-canonical and canonical marginals merge for large n") {
  const int n = 1000;
  const double t = 4.0;
  RngStream rng(47, 0);
  std::vector<double> mc(10000), can(10000);
  const MicrocanonicalConfig mcc{n, n * (t + 2.0)};
  const CanonicalConfig cc{1, t};
  for (int i = 0; i < 10000; ++i) {
    mc[i] = sample_mc_energies(mcc, rng)[0];
    can[i] = sample_can_energies(cc, rng)[0];
  }
  CHECK(ks_test(mc, can).statistic < 0.05);
}
