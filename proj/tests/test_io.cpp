// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cstdio>
#include <cstring>
#include <fstream>

#include "core/ensemble.hpp"
#include "core/haar.hpp"
#include "core/io.hpp"
#include "core/rng.hpp"

using namespace gaussens;

TEST_CASE("covariance-matrix JSON round trip is bit stable") {
  RngStream rng(81, 0);
  Eigen::VectorXd e(3);
  e << 2.7, 5.1, 11.0;
  const CovarianceMatrix cm = assemble_pure_cm(e, ortho_symplectic(sample_haar_unitary(3, rng)));

  const std::string text = cm_to_json(cm);
  const CovarianceMatrix back = cm_from_json(text);
  REQUIRE(back.modes() == cm.modes());
  CHECK(std::memcmp(back.matrix().data(), cm.matrix().data(),
                    sizeof(double) * cm.matrix().size()) == 0);
  // and the serialised text itself is reproducible
  CHECK(cm_to_json(back) == text);

  write_cm_json(cm, "cm_roundtrip.json");
  const CovarianceMatrix from_file = read_cm_json("cm_roundtrip.json");
  CHECK(std::memcmp(from_file.matrix().data(), cm.matrix().data(),
                    sizeof(double) * cm.matrix().size()) == 0);
  std::remove("cm_roundtrip.json");

  CHECK_THROWS(cm_from_json("{\"n\": 2, \"ordering\": \"xpxp\", \"data\": []}"));
}

TEST_CASE("samples CSV carries every record at full precision") {
  EnsembleConfig cfg;
  cfg.n = 3;
  cfg.m = 2;
  cfg.total_energy = 15.0;
  cfg.samples = 32;
  cfg.seed = 5;
  const EnsembleResult r = run_ensemble(cfg);
  write_samples_csv(r, "samples_test.csv");

  std::ifstream in("samples_test.csv");
  std::string header;
  std::getline(in, header);
  CHECK(header == "sample,total_energy,inv_purity,entropy,nu_1,nu_2,delta_1,delta_2");

  const std::vector<double> entropies = read_csv_column("samples_test.csv", "entropy");
  REQUIRE(entropies.size() == r.records.size());
  for (size_t i = 0; i < entropies.size(); ++i) {
    CHECK(entropies[i] == r.records[i].entropy);  // exact through %.17g
  }
  std::remove("samples_test.csv");
}

TEST_CASE("identical configurations produce byte-identical outputs") {
  EnsembleConfig cfg;
  cfg.n = 4;
  cfg.m = 1;
  cfg.total_energy = 20.0;
  cfg.samples = 64;
  cfg.seed = 99;
  cfg.threads = 1;
  const EnsembleResult a = run_ensemble(cfg);
  cfg.threads = 2;
  const EnsembleResult b = run_ensemble(cfg);

  write_samples_csv(a, "repro_a.csv");
  write_samples_csv(b, "repro_b.csv");
  write_summary_json(a, "repro_a.json");
  write_summary_json(b, "repro_b.json");
  const auto slurp = [](const char* p) {
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  CHECK(slurp("repro_a.csv") == slurp("repro_b.csv"));
  CHECK(slurp("repro_a.json") == slurp("repro_b.json"));
  for (const char* p : {"repro_a.csv", "repro_b.csv", "repro_a.json", "repro_b.json"}) {
    std::remove(p);
  }
}

TEST_CASE("summary sidecar names the configuration, seed and version") {
  EnsembleConfig cfg;
  cfg.measure = Measure::canonical;
  cfg.n = 2;
  cfg.m = 1;
  cfg.temperature = 1.5;
  cfg.samples = 10;
  cfg.seed = 1234;
  cfg.log_base = LogBase::natural;
  const std::string text = summary_to_json(run_ensemble(cfg));
  CHECK(text.find("\"version\"") != std::string::npos);
  CHECK(text.find("\"0.1.0\"") != std::string::npos);
  CHECK(text.find("\"seed\": 1234") != std::string::npos);
  CHECK(text.find("\"canonical\"") != std::string::npos);
  CHECK(text.find("\"temperature\": 1.5") != std::string::npos);
  CHECK(text.find("\"log_base\": \"e\"") != std::string::npos);
}

TEST_CASE("histogram CSV") {
  Histogram h = make_histogram({0.1, 0.2, 0.6, 0.9}, 2, 0.0, 1.0);
  write_histogram_csv(h, "hist_test.csv");
  const std::vector<double> counts = read_csv_column("hist_test.csv", "count");
  REQUIRE(counts.size() == 2);
  CHECK(counts[0] == 2.0);
  CHECK(counts[1] == 2.0);
  std::remove("hist_test.csv");
}

TEST_CASE("bounds JSON names the bin count and both active sets") {
  BoundResult r;
  r.lower = 0.5;
  r.upper = 0.75;
  r.feasible = true;
  r.active_lower = {1, 2};
  r.active_upper = {3};
  const std::string text = bounds_to_json(r, 100, LogBase::base2);
  CHECK(text.find("\"M\": 100") != std::string::npos);
  CHECK(text.find("\"lower\": 0.5") != std::string::npos);
  CHECK(text.find("\"active_bins\"") != std::string::npos);
}
