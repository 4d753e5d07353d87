// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>

#include "core/analytics.hpp"
#include "core/ensemble.hpp"
#include "core/io.hpp"

using namespace gaussens;

namespace {

EnsembleConfig base_config() {
  EnsembleConfig cfg;
  cfg.measure = Measure::microcanonical;
  cfg.n = 4;
  cfg.m = 1;
  cfg.total_energy = 24.0;
  cfg.samples = 400;
  cfg.seed = 2024;
  return cfg;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("single mode alone carries no entanglement") {
  for (Measure measure : {Measure::microcanonical, Measure::canonical}) {
    EnsembleConfig cfg = base_config();
    cfg.measure = measure;
    cfg.n = 1;
    cfg.m = 1;
    cfg.total_energy = 9.0;
    cfg.temperature = 3.0;
    cfg.samples = 200;
    const EnsembleResult r = run_ensemble(cfg);
    for (const SampleRecord& rec : r.records) CHECK(rec.entropy < 1e-6);
    CHECK(r.summary.mean_entropy < 1e-6);
  }
}

TEST_CASE("keeping every mode gives the pure state back") {
  EnsembleConfig cfg = base_config();
  cfg.n = 3;
  cfg.m = 3;
  cfg.samples = 100;
  const EnsembleResult r = run_ensemble(cfg);
  CHECK(r.summary.mean_entropy < 1e-5);
  CHECK(r.summary.entropy_max == 0.0);
  for (const SampleRecord& rec : r.records) {
    CHECK(rec.inv_purity == doctest::Approx(1.0).epsilon(1e-6));
  }
}

TEST_CASE("runs are reproducible and thread-count independent") {
  EnsembleConfig cfg = base_config();
  cfg.threads = 1;
  const EnsembleResult a = run_ensemble(cfg);
  cfg.threads = 2;
  const EnsembleResult b = run_ensemble(cfg);
  REQUIRE(a.records.size() == b.records.size());
  for (size_t i = 0; i < a.records.size(); ++i) {
    CHECK(a.records[i].entropy == b.records[i].entropy);
    CHECK(a.records[i].inv_purity == b.records[i].inv_purity);
    CHECK(a.records[i].total_energy == b.records[i].total_energy);
  }
  CHECK(a.summary.mean_entropy == b.summary.mean_entropy);
}

TEST_CASE("record fields are mutually consistent") {
  EnsembleConfig cfg = base_config();
  cfg.m = 2;
  cfg.check_all = true;  // full-route verification on every sample
  cfg.samples = 60;
  const EnsembleResult r = run_ensemble(cfg);
  for (const SampleRecord& rec : r.records) {
    REQUIRE(rec.nus.size() == 2);
    CHECK(rec.nus[0] >= rec.nus[1]);
    CHECK(rec.nus[1] >= 1.0);
    const double nu2 = rec.nus[0] * rec.nus[0];
    const double mu2 = rec.nus[1] * rec.nus[1];
    CHECK(rec.inv_purity == doctest::Approx(nu2 * mu2).epsilon(1e-10));
    CHECK(rec.invariants[0] == doctest::Approx(nu2 + mu2).epsilon(1e-10));
    CHECK(rec.invariants[1] == doctest::Approx(nu2 * mu2).epsilon(1e-10));
    CHECK(rec.entropy ==
          doctest::Approx(entropic_h(rec.nus[0]) + entropic_h(rec.nus[1])).epsilon(1e-10));
    CHECK(rec.total_energy <= cfg.total_energy);
  }
}

TEST_CASE("ensemble mean of a matches the closed form") {
  EnsembleConfig cfg = base_config();
  cfg.samples = 20000;
  const EnsembleResult r = run_ensemble(cfg);
  const MomentPair closed = microcanonical_invpurity_moments({cfg.n, cfg.total_energy});
  CHECK(std::abs(r.summary.mean_inv_purity - closed.mean_a) < 3.0 * r.summary.se_inv_purity);

  EnsembleConfig can = base_config();
  can.measure = Measure::canonical;
  can.temperature = 2.0;
  can.samples = 20000;
  const EnsembleResult rc = run_ensemble(can);
  const MomentPair closed_c = canonical_invpurity_moments({can.n, can.temperature});
  CHECK(std::abs(rc.summary.mean_inv_purity - closed_c.mean_a) < 3.0 * rc.summary.se_inv_purity);
  CHECK(std::isnan(rc.summary.entropy_max));
}

TEST_CASE("summary distance uses the attainable maximum") {
  EnsembleConfig cfg = base_config();
  cfg.n = 5;
  cfg.total_energy = 50.0;
  cfg.samples = 2000;
  const EnsembleResult r = run_ensemble(cfg);
  CHECK(r.summary.entropy_max ==
        doctest::Approx(max_entropy(1, 4, 50.0)).epsilon(1e-12));
  CHECK(r.summary.max_distance_sd ==
        doctest::Approx((r.summary.entropy_max - r.summary.mean_entropy) /
                        r.summary.std_entropy)
            .epsilon(1e-12));
  CHECK(r.summary.max_distance_sd_se > 0.0);
  CHECK(r.summary.max_distance_sd_se < 0.2);
}

TEST_CASE("concentration scan fits a negative power") {
  const ConcentrationScan scan =
      concentration_scan({4, 8, 16}, Measure::microcanonical, 6.0, 1, 800, 7, LogBase::base2);
  REQUIRE(scan.points.size() == 3);
  for (const ConcentrationPoint& p : scan.points) {
    CHECK(p.ratio > 0.0);
    CHECK(p.ratio_se > 0.0);
  }
  CHECK(scan.points.front().ratio > scan.points.back().ratio);
  CHECK(scan.fit.slope < -0.5);
  CHECK(scan.fit.slope > -1.6);
}

TEST_CASE("entropy grows with the reduction up to half the system") {
  const std::vector<MdepPoint> points = mdep_scan({12}, 6, 10.0, 1500, 11, LogBase::base2);
  REQUIRE(points.size() == 6);
  for (size_t i = 1; i < points.size(); ++i) {
    CHECK(points[i].mean_entropy > points[i - 1].mean_entropy);
  }
  // sub-linear: the per-mode entropy decreases with m
  CHECK(points[5].mean_entropy / 6.0 < points[0].mean_entropy);
}

TEST_CASE("entropy spread grows with m and shrinks with n") {
  const std::vector<MdepPoint> points = mdep_scan({10, 30}, 4, 10.0, 2000, 12, LogBase::base2);
  REQUIRE(points.size() == 8);
  const auto std_at = [&](int n, int m) {
    for (const MdepPoint& p : points) {
      if (p.n == n && p.m == m) return p.std_entropy;
    }
    REQUIRE(false);
    return 0.0;
  };
  CHECK(std_at(10, 1) < std_at(10, 2));
  CHECK(std_at(10, 2) < std_at(10, 4));
  CHECK(std_at(30, 1) < std_at(30, 4));
  for (int m : {1, 2, 4}) CHECK(std_at(30, m) < std_at(10, m));
}

TEST_CASE("single-mode entropy distributions narrow as the system grows") {
  double prev = 1e300;
  for (int n : {4, 8, 16}) {
    EnsembleConfig cfg = base_config();
    cfg.n = n;
    cfg.total_energy = 10.0 * n;
    cfg.samples = 5000;
    cfg.seed = 4200 + n;
    const EnsembleResult r = run_ensemble(cfg);
    CHECK(r.summary.std_entropy < prev);
    prev = r.summary.std_entropy;
  }
}

TEST_CASE("weak concentration at a fixed subsystem ratio") {
  // reductions of a fixed fraction of the system: the relative spread
  // var/mean^2 still dies away even though both moments grow
  double prev = 1e300;
  for (int n : {8, 16, 32}) {
    EnsembleConfig cfg = base_config();
    cfg.n = n;
    cfg.m = n / 4;
    cfg.total_energy = 6.0 * n;
    cfg.samples = 1500;
    cfg.seed = 4100 + n;
    const EnsembleResult r = run_ensemble(cfg);
    const double rel = r.summary.std_entropy * r.summary.std_entropy /
                       (r.summary.mean_entropy * r.summary.mean_entropy);
    CHECK(rel < prev);
    prev = rel;
  }
}

TEST_CASE("invariant means approach their thermal limits at large n") {
  EnsembleConfig cfg;
  cfg.measure = Measure::canonical;
  cfg.n = 200;
  cfg.m = 2;
  cfg.temperature = 4.0;
  cfg.samples = 600;
  cfg.seed = 88;
  const EnsembleResult r = run_ensemble(cfg);
  MomentAccumulator d1, d2;
  for (const SampleRecord& rec : r.records) {
    d1.add(rec.invariants[0]);
    d2.add(rec.invariants[1]);
  }
  CHECK(std::abs(d1.mean / asymptotic_invariant(1, 2, 4.0) - 1.0) < 0.02);
  CHECK(std::abs(d2.mean / asymptotic_invariant(2, 2, 4.0) - 1.0) < 0.02);
}

TEST_CASE("state dump replays the drawn state") {
  EnsembleConfig cfg = base_config();
  cfg.samples = 3;
  cfg.dump_states_path = "dump_states_test.jsonl";
  const EnsembleResult r = run_ensemble(cfg);
  const std::string text = slurp(cfg.dump_states_path);
  CHECK(std::count(text.begin(), text.end(), '\n') == 3);
  CHECK(text.find("\"energies\"") != std::string::npos);
  CHECK(text.find("\"x\"") != std::string::npos);
  std::remove(cfg.dump_states_path.c_str());
  CHECK(r.records.size() == 3);
}

TEST_CASE("invalid configurations are rejected") {
  EnsembleConfig cfg = base_config();
  cfg.m = 5;
  CHECK_THROWS_AS(run_ensemble(cfg), InvariantError);
  cfg = base_config();
  cfg.total_energy = 2.0;
  CHECK_THROWS_AS(run_ensemble(cfg), InvariantError);
  cfg = base_config();
  cfg.samples = 0;
  CHECK_THROWS_AS(run_ensemble(cfg), InvariantError);
}
