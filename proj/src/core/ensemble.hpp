// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/measures.hpp"
#include "core/stats.hpp"
#include "core/symplectic.hpp"

namespace gaussens {

enum class Measure { microcanonical, canonical };

inline const char* measure_name(Measure m) {
  return m == Measure::microcanonical ? "microcanonical" : "canonical";
}

struct EnsembleConfig {
  Measure measure = Measure::microcanonical;
  int n = 1;                  // total modes
  int m = 1;                  // modes kept by the reduction (the first m)
  double total_energy = 2.0;  // micro-canonical E
  double temperature = 1.0;   // canonical T
  long long samples = 1;
  std::uint64_t seed = 0;
  LogBase log_base = LogBase::base2;
  int threads = 0;            // 0: hardware concurrency
  bool check_all = false;     // verify structural invariants on every sample
  double check_fraction = 0.01;
  std::string dump_states_path;  // when set, write per-sample (E, X, Y) JSON lines

  void validate() const;
};

/// One drawn state, described through its m-mode reduction.
struct SampleRecord {
  long long index = 0;
  double total_energy = 0.0;          // sum of the drawn per-mode energies
  double inv_purity = 1.0;            // a = mu^{-2} = det(gamma)
  double entropy = 0.0;
  std::vector<double> nus;            // symplectic spectrum, descending
  std::vector<double> invariants;     // Delta_1..Delta_m
};

struct EnsembleSummary {
  long long samples = 0;
  double mean_entropy = 0.0, std_entropy = 0.0, se_entropy = 0.0;
  double mean_inv_purity = 0.0, std_inv_purity = 0.0, se_inv_purity = 0.0;
  double entropy_max = 0.0;             // NaN when the measure has no energy cap
  double max_distance_sd = 0.0;         // (entropy_max - mean)/std
  double max_distance_sd_se = 0.0;      // delete-one jackknife
};

struct EnsembleResult {
  EnsembleConfig config;
  std::vector<SampleRecord> records;
  EnsembleSummary summary;

  std::vector<double> entropies() const;
};

/// Draw `samples` states, reduce each to its first m modes and record the
/// spectrum, a = mu^{-2}, entropy and invariants. Sample i is a pure function
/// of (seed, i), so results do not depend on the thread count and runs with
/// equal configurations are bit-identical. Structural invariants are verified
/// on a fraction of the samples (all of them with check_all); a violation
/// aborts with InvariantError naming the sample.
EnsembleResult run_ensemble(const EnsembleConfig& cfg);

/// Variance-to-mean ratio of the reduced entropy across a grid of system
/// sizes, with a power-law fit of ratio against n.
struct ConcentrationPoint {
  int n = 0;
  long long samples = 0;
  double mean_entropy = 0.0;
  double var_entropy = 0.0;
  double ratio = 0.0;     // var / mean
  double ratio_se = 0.0;  // delete-one jackknife
};

struct ConcentrationScan {
  std::vector<ConcentrationPoint> points;
  LineFit fit;  // log(ratio) against log(n)
};

/// `parameter` is the maximal energy per mode (micro-canonical) or the
/// temperature (canonical); each grid point runs its own ensemble on a
/// deterministically derived sub-seed.
ConcentrationScan concentration_scan(const std::vector<int>& ns, Measure measure,
                                     double parameter, int m, long long samples,
                                     std::uint64_t seed, LogBase base, int threads = 0);

/// Mean and spread of the reduced entropy against the reduction size m.
struct MdepPoint {
  int n = 0;
  int m = 0;
  double mean_entropy = 0.0;
  double std_entropy = 0.0;
  double se_entropy = 0.0;
};

std::vector<MdepPoint> mdep_scan(const std::vector<int>& ns, int m_max, double energy_per_mode,
                                 long long samples, std::uint64_t seed, LogBase base,
                                 int threads = 0);

/// Largest reduced entropy an ensemble configuration admits; NaN for the
/// canonical measure (no energy cap).
double ensemble_entropy_max(const EnsembleConfig& cfg);

}  // namespace gaussens
