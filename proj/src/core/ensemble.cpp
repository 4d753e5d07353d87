// SPDX-License-Identifier: Apache-2.0
#include "core/ensemble.hpp"

#include <atomic>
#include <cmath>
#include <fstream>
#include <limits>
#include <mutex>
#include <thread>

#include "core/analytics.hpp"
#include "core/haar.hpp"
#include "core/io.hpp"
#include "core/rng.hpp"

namespace gaussens {

void EnsembleConfig::validate() const {
  if (n < 1) throw InvariantError("mode count must be positive");
  if (m < 1 || m > n) throw InvariantError("need 1 <= m <= n");
  if (samples < 1) throw InvariantError("sample count must be positive");
  if (!(check_fraction >= 0.0 && check_fraction <= 1.0)) {
    throw InvariantError("check fraction must lie in [0, 1]");
  }
  if (measure == Measure::microcanonical) {
    MicrocanonicalConfig{n, total_energy}.validate();
  } else {
    CanonicalConfig{n, temperature}.validate();
  }
}

namespace {

Eigen::VectorXd draw_energies(const EnsembleConfig& cfg, RngStream& rng) {
  if (cfg.measure == Measure::microcanonical) {
    return sample_mc_energies({cfg.n, cfg.total_energy}, rng);
  }
  return sample_can_energies({cfg.n, cfg.temperature}, rng);
}

SampleRecord compute_record(const EnsembleConfig& cfg, long long index) {
  RngStream rng(cfg.seed, static_cast<std::uint64_t>(index));
  const Eigen::VectorXd energies = draw_energies(cfg, rng);
  const Eigen::MatrixXcd u_cols = sample_haar_columns(cfg.n, cfg.m, rng);
  const CovarianceMatrix gamma = reduced_pure_cm(energies, u_cols);
  const Eigen::VectorXd nu = symplectic_eigenvalues(gamma);

  SampleRecord rec;
  rec.index = index;
  rec.total_energy = energies.sum();
  rec.nus.assign(nu.data(), nu.data() + nu.size());
  double a = 1.0;
  double s = 0.0;
  for (int j = 0; j < nu.size(); ++j) {
    a *= nu[j] * nu[j];
    s += entropic_h(nu[j], cfg.log_base);
  }
  rec.inv_purity = a;
  rec.entropy = s;
  const Eigen::VectorXd delta = elementary_symmetric(nu.array().square().matrix());
  rec.invariants.assign(delta.data(), delta.data() + delta.size());
  return rec;
}

// Re-derives the sample through the full 2n x 2n route and verifies every
// structural invariant at the documented tolerances.
void check_sample(const EnsembleConfig& cfg, const SampleRecord& rec) {
  RngStream rng(cfg.seed, static_cast<std::uint64_t>(rec.index));
  const Eigen::VectorXd energies = draw_energies(cfg, rng);
  const HaarUnitary u = sample_haar_unitary(cfg.n, rng);
  const Eigen::MatrixXd o = ortho_symplectic(u);
  const auto fail = [](const std::string& what) { throw InvariantError(what); };

  if (ortho_symplectic_defect(o) > 1e-9) fail("transformation not orthogonal symplectic");
  if (cfg.measure == Measure::microcanonical) {
    if (energies.sum() > cfg.total_energy) fail("energies exceed the configured total");
  }
  if (energies.minCoeff() < 2.0) fail("per-mode energy below the vacuum");

  const CovarianceMatrix sigma = assemble_pure_cm(energies, o);  // checks symmetry + PD
  const double sum_e = energies.sum();
  if (std::abs(energy(sigma) - sum_e) > 1e-10 * std::max(1.0, sum_e)) {
    fail("trace does not match the drawn energy");
  }
  if (std::abs(purity(sigma) - 1.0) > kPurityTol) fail("global state not pure");

  std::vector<int> modes(cfg.m);
  for (int j = 0; j < cfg.m; ++j) modes[j] = j;
  const CovarianceMatrix gamma = reduce(sigma, modes);
  const Eigen::VectorXd nu = symplectic_eigenvalues(gamma);  // enforces nu >= 1 - tol
  for (int j = 0; j < cfg.m; ++j) {
    const double scale = std::max(1.0, std::abs(rec.nus[j]));
    if (std::abs(nu[j] - rec.nus[j]) > 1e-8 * scale) {
      fail("reduced spectrum differs between the direct and full routes");
    }
  }
}

void maybe_dump_states(const EnsembleConfig& cfg) {
  if (cfg.dump_states_path.empty()) return;
  std::ofstream out(cfg.dump_states_path);
  if (!out) throw std::runtime_error("cannot open " + cfg.dump_states_path);
  for (long long i = 0; i < cfg.samples; ++i) {
    RngStream rng(cfg.seed, static_cast<std::uint64_t>(i));
    const Eigen::VectorXd energies = draw_energies(cfg, rng);
    const HaarUnitary u = sample_haar_unitary(cfg.n, rng);
    out << sample_state_json(i, energies, u) << '\n';
  }
}

}  // namespace

double ensemble_entropy_max(const EnsembleConfig& cfg) {
  if (cfg.measure == Measure::canonical) {
    return std::numeric_limits<double>::quiet_NaN();
  }
  if (cfg.m == cfg.n) return 0.0;  // the whole state is pure
  // entanglement is symmetric between a reduction and its complement
  const int m_eff = std::min(cfg.m, cfg.n - cfg.m);
  return max_entropy(m_eff, cfg.n - m_eff, cfg.total_energy, cfg.log_base);
}

std::vector<double> EnsembleResult::entropies() const {
  std::vector<double> out(records.size());
  for (size_t i = 0; i < records.size(); ++i) out[i] = records[i].entropy;
  return out;
}

EnsembleResult run_ensemble(const EnsembleConfig& cfg) {
  cfg.validate();
  EnsembleResult result;
  result.config = cfg;
  result.records.resize(static_cast<size_t>(cfg.samples));

  const long long check_every =
      cfg.check_all ? 1
                    : (cfg.check_fraction > 0.0
                           ? std::max<long long>(1, std::llround(1.0 / cfg.check_fraction))
                           : 0);

  int threads = cfg.threads > 0 ? cfg.threads
                                : static_cast<int>(std::thread::hardware_concurrency());
  if (threads < 1) threads = 1;
  threads = static_cast<int>(std::min<long long>(threads, cfg.samples));

  std::atomic<long long> next{0};
  std::mutex error_mutex;
  std::string error_message;
  std::atomic<bool> failed{false};

  auto worker = [&]() {
    for (;;) {
      const long long i = next.fetch_add(1);
      if (i >= cfg.samples || failed.load()) break;
      try {
        result.records[static_cast<size_t>(i)] = compute_record(cfg, i);
        if (check_every > 0 && i % check_every == 0) {
          check_sample(cfg, result.records[static_cast<size_t>(i)]);
        }
      } catch (const std::exception& e) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!failed.exchange(true)) {
          error_message = "sample " + std::to_string(i) + ": " + e.what();
        }
        break;
      }
    }
  };

  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failed.load()) throw InvariantError(error_message);

  maybe_dump_states(cfg);

  // summary over the records in index order (association-independent anyway)
  MomentAccumulator acc_s, acc_a;
  for (const SampleRecord& r : result.records) {
    acc_s.add(r.entropy);
    acc_a.add(r.inv_purity);
  }
  EnsembleSummary& sum = result.summary;
  sum.samples = cfg.samples;
  sum.mean_entropy = acc_s.mean;
  sum.std_entropy = acc_s.stddev();
  sum.se_entropy = acc_s.std_error();
  sum.mean_inv_purity = acc_a.mean;
  sum.std_inv_purity = acc_a.stddev();
  sum.se_inv_purity = acc_a.std_error();
  sum.entropy_max = ensemble_entropy_max(cfg);
  if (std::isfinite(sum.entropy_max) && sum.std_entropy > 0.0 && cfg.samples >= 3) {
    sum.max_distance_sd = (sum.entropy_max - sum.mean_entropy) / sum.std_entropy;
    sum.max_distance_sd_se =
        jackknife_se_distance_to_ref(result.entropies(), sum.entropy_max);
  } else {
    sum.max_distance_sd = std::numeric_limits<double>::quiet_NaN();
    sum.max_distance_sd_se = std::numeric_limits<double>::quiet_NaN();
  }
  return result;
}

ConcentrationScan concentration_scan(const std::vector<int>& ns, Measure measure,
                                     double parameter, int m, long long samples,
                                     std::uint64_t seed, LogBase base, int threads) {
  if (ns.empty()) throw InvariantError("scan needs at least one system size");
  ConcentrationScan scan;
  std::vector<double> log_n, log_ratio;
  for (size_t i = 0; i < ns.size(); ++i) {
    EnsembleConfig cfg;
    cfg.measure = measure;
    cfg.n = ns[i];
    cfg.m = m;
    if (measure == Measure::microcanonical) {
      cfg.total_energy = parameter * ns[i];
    } else {
      cfg.temperature = parameter;
    }
    cfg.samples = samples;
    cfg.seed = derive_seed(seed, 0xc0ccu, static_cast<std::uint64_t>(ns[i]));
    cfg.log_base = base;
    cfg.threads = threads;
    const EnsembleResult r = run_ensemble(cfg);

    ConcentrationPoint p;
    p.n = ns[i];
    p.samples = samples;
    p.mean_entropy = r.summary.mean_entropy;
    p.var_entropy = r.summary.std_entropy * r.summary.std_entropy;
    p.ratio = p.var_entropy / p.mean_entropy;
    p.ratio_se = jackknife_se_var_over_mean(r.entropies());
    scan.points.push_back(p);
    if (p.ratio > 0.0) {
      log_n.push_back(std::log(static_cast<double>(p.n)));
      log_ratio.push_back(std::log(p.ratio));
    }
  }
  if (log_n.size() >= 3) scan.fit = fit_line(log_n, log_ratio);
  return scan;
}

std::vector<MdepPoint> mdep_scan(const std::vector<int>& ns, int m_max, double energy_per_mode,
                                 long long samples, std::uint64_t seed, LogBase base,
                                 int threads) {
  if (ns.empty() || m_max < 1) throw InvariantError("scan grid is empty");
  std::vector<MdepPoint> out;
  for (int n : ns) {
    for (int m = 1; m <= std::min(m_max, n); ++m) {
      EnsembleConfig cfg;
      cfg.measure = Measure::microcanonical;
      cfg.n = n;
      cfg.m = m;
      cfg.total_energy = energy_per_mode * n;
      cfg.samples = samples;
      cfg.seed = derive_seed(seed, static_cast<std::uint64_t>(m),
                             static_cast<std::uint64_t>(n));
      cfg.log_base = base;
      cfg.threads = threads;
      const EnsembleResult r = run_ensemble(cfg);
      out.push_back({n, m, r.summary.mean_entropy, r.summary.std_entropy,
                     r.summary.se_entropy});
    }
  }
  return out;
}

}  // namespace gaussens
