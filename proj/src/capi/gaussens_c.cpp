// SPDX-License-Identifier: Apache-2.0
#include "gaussens.h"

#include <algorithm>
#include <cstring>
#include <memory>
#include <string>

#include "core/analytics.hpp"
#include "core/ensemble.hpp"
#include "core/errors.hpp"
#include "core/io.hpp"
#include "core/lp_bounds.hpp"
#include "core/measures.hpp"
#include "core/stats.hpp"
#include "core/symplectic.hpp"

namespace {

thread_local std::string g_last_error;

gaussens_status fail(gaussens_status code, const char* what) {
  g_last_error = what;
  return code;
}

// Runs `fn`, translating exceptions into status codes.
template <typename Fn>
gaussens_status guarded(Fn&& fn) {
  try {
    fn();
    return GAUSSENS_OK;
  } catch (const gaussens::InfeasibleError& e) {
    return fail(GAUSSENS_ERR_INFEASIBLE, e.what());
  } catch (const gaussens::InvariantError& e) {
    return fail(GAUSSENS_ERR_INVARIANT, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(GAUSSENS_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::runtime_error& e) {
    return fail(GAUSSENS_ERR_IO, e.what());
  } catch (const std::exception& e) {
    return fail(GAUSSENS_ERR_INTERNAL, e.what());
  }
}

gaussens::LogBase to_base(gaussens_log_base base) {
  return base == GAUSSENS_LOG_BASE_E ? gaussens::LogBase::natural : gaussens::LogBase::base2;
}

gaussens::CovarianceMatrix cm_from_buffer(const double* cm, int n) {
  if (cm == nullptr || n < 1) throw std::invalid_argument("null matrix or bad mode count");
  Eigen::MatrixXd m(2 * n, 2 * n);
  for (int i = 0; i < 2 * n; ++i) {
    for (int j = 0; j < 2 * n; ++j) m(i, j) = cm[i * 2 * n + j];
  }
  return gaussens::CovarianceMatrix(std::move(m));
}

void fill_bounds(const gaussens::BoundResult& r, int bins, gaussens_bounds_result* out) {
  std::memset(out, 0, sizeof(*out));
  out->lower = r.lower;
  out->upper = r.upper;
  out->feasible = r.feasible ? 1 : 0;
  out->bins = bins;
  out->duality_gap = r.duality_gap;
  out->n_active_lower = static_cast<int>(std::min<size_t>(r.active_lower.size(), 8));
  for (int i = 0; i < out->n_active_lower; ++i) out->active_lower[i] = r.active_lower[i];
  out->n_active_upper = static_cast<int>(std::min<size_t>(r.active_upper.size(), 8));
  for (int i = 0; i < out->n_active_upper; ++i) out->active_upper[i] = r.active_upper[i];
}

gaussens::EnsembleConfig to_config(const gaussens_ensemble_config* c) {
  if (c == nullptr) throw std::invalid_argument("null config");
  gaussens::EnsembleConfig cfg;
  cfg.measure = c->measure == GAUSSENS_MEASURE_CANONICAL ? gaussens::Measure::canonical
                                                         : gaussens::Measure::microcanonical;
  cfg.n = c->n;
  cfg.m = c->m;
  cfg.total_energy = c->total_energy;
  cfg.temperature = c->temperature;
  cfg.samples = c->samples;
  cfg.seed = c->seed;
  cfg.log_base = to_base(c->log_base);
  cfg.threads = c->threads;
  cfg.check_all = c->check_all != 0;
  if (c->dump_states_path != nullptr) cfg.dump_states_path = c->dump_states_path;
  return cfg;
}

}  // namespace

struct gaussens_ensemble {
  gaussens::EnsembleResult result;
};

struct gaussens_scan {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  bool has_fit = false;
  gaussens::LineFit fit;
  // keeps the original objects for the CSV writers
  gaussens::ConcentrationScan concentration;
  std::vector<gaussens::MdepPoint> mdep;
  bool is_concentration = false;
};

extern "C" {

const char* gaussens_version(void) { return gaussens::kVersion; }

const char* gaussens_status_name(gaussens_status status) {
  switch (status) {
    case GAUSSENS_OK: return "ok";
    case GAUSSENS_ERR_INVALID_ARGUMENT: return "invalid argument";
    case GAUSSENS_ERR_INVARIANT: return "invariant violation";
    case GAUSSENS_ERR_INFEASIBLE: return "infeasible";
    case GAUSSENS_ERR_IO: return "io error";
    case GAUSSENS_ERR_INTERNAL: return "internal error";
  }
  return "unknown";
}

const char* gaussens_last_error(void) { return g_last_error.c_str(); }

gaussens_status gaussens_symplectic_eigenvalues(const double* cm, int n, double* nu_out) {
  return guarded([&] {
    if (nu_out == nullptr) throw std::invalid_argument("null output");
    const Eigen::VectorXd nu = gaussens::symplectic_eigenvalues(cm_from_buffer(cm, n));
    for (int j = 0; j < n; ++j) nu_out[j] = nu[j];
  });
}

gaussens_status gaussens_purity(const double* cm, int n, double* out) {
  return guarded([&] {
    if (out == nullptr) throw std::invalid_argument("null output");
    *out = gaussens::purity(cm_from_buffer(cm, n));
  });
}

gaussens_status gaussens_von_neumann_entropy(const double* cm, int n, gaussens_log_base base,
                                             double* out) {
  return guarded([&] {
    if (out == nullptr) throw std::invalid_argument("null output");
    *out = gaussens::von_neumann_entropy(cm_from_buffer(cm, n), to_base(base));
  });
}

gaussens_status gaussens_symplectic_invariants(const double* cm, int n, double* delta_out) {
  return guarded([&] {
    if (delta_out == nullptr) throw std::invalid_argument("null output");
    const Eigen::VectorXd d = gaussens::symplectic_invariants(cm_from_buffer(cm, n));
    for (int j = 0; j < n; ++j) delta_out[j] = d[j];
  });
}

gaussens_status gaussens_entropic_h(double x, gaussens_log_base base, double* out) {
  return guarded([&] {
    if (out == nullptr) throw std::invalid_argument("null output");
    *out = gaussens::entropic_h(x, to_base(base));
  });
}

gaussens_status gaussens_cm_write_json(const double* cm, int n, const char* path) {
  return guarded([&] {
    if (path == nullptr) throw std::invalid_argument("null path");
    gaussens::write_cm_json(cm_from_buffer(cm, n), path);
  });
}

gaussens_status gaussens_cm_read_json(const char* path, double* cm_out, int max_modes,
                                      int* n_out) {
  return guarded([&] {
    if (path == nullptr || cm_out == nullptr || n_out == nullptr) {
      throw std::invalid_argument("null argument");
    }
    const gaussens::CovarianceMatrix cm = gaussens::read_cm_json(path);
    if (cm.modes() > max_modes) throw std::invalid_argument("output buffer too small");
    *n_out = cm.modes();
    const int dim = 2 * cm.modes();
    for (int i = 0; i < dim; ++i) {
      for (int j = 0; j < dim; ++j) cm_out[i * dim + j] = cm.matrix()(i, j);
    }
  });
}

gaussens_status gaussens_page_entropy(int m, int n, double* out) {
  return guarded([&] {
    if (out == nullptr) throw std::invalid_argument("null output");
    *out = gaussens::page_entropy(m, n);
  });
}

gaussens_status gaussens_canonical_moments(int n, double temperature, double* mean_out,
                                           double* second_out, double* std_out) {
  return guarded([&] {
    if (mean_out == nullptr || second_out == nullptr) {
      throw std::invalid_argument("null output");
    }
    const gaussens::MomentPair mp =
        gaussens::canonical_invpurity_moments({n, temperature});
    *mean_out = mp.mean_a;
    *second_out = mp.mean_a2;
    if (std_out != nullptr) *std_out = mp.stddev();
  });
}

gaussens_status gaussens_microcanonical_moments(int n, double total_energy, double* mean_out,
                                                double* second_out, double* std_out) {
  return guarded([&] {
    if (mean_out == nullptr || second_out == nullptr) {
      throw std::invalid_argument("null output");
    }
    const gaussens::MomentPair mp =
        gaussens::microcanonical_invpurity_moments({n, total_energy});
    *mean_out = mp.mean_a;
    *second_out = mp.mean_a2;
    if (std_out != nullptr) *std_out = mp.stddev();
  });
}

gaussens_status gaussens_haar_moments(const double* energies, int n, double* mean_out,
                                      double* second_out, double* std_out) {
  return guarded([&] {
    if (energies == nullptr || mean_out == nullptr || second_out == nullptr) {
      throw std::invalid_argument("null argument");
    }
    Eigen::VectorXd e(n);
    for (int j = 0; j < n; ++j) e[j] = energies[j];
    const gaussens::MomentPair mp = gaussens::haar_invpurity_moments(e);
    *mean_out = mp.mean_a;
    *second_out = mp.mean_a2;
    if (std_out != nullptr) *std_out = mp.stddev();
  });
}

gaussens_status gaussens_max_inv_purity(double reduced_energy, double* out) {
  return guarded([&] {
    if (out == nullptr) throw std::invalid_argument("null output");
    *out = gaussens::max_inv_purity(reduced_energy);
  });
}

gaussens_status gaussens_max_entropy(int m, int n, double total_energy, gaussens_log_base base,
                                     double* out) {
  return guarded([&] {
    if (out == nullptr) throw std::invalid_argument("null output");
    *out = gaussens::max_entropy(m, n, total_energy, to_base(base));
  });
}

gaussens_status gaussens_asymptotic_entropy(int m, double temperature, gaussens_log_base base,
                                            double* out) {
  return guarded([&] {
    if (out == nullptr) throw std::invalid_argument("null output");
    *out = gaussens::asymptotic_entropy(m, temperature, to_base(base));
  });
}

gaussens_status gaussens_asymptotic_invariant(int d, int m, double temperature, double* out) {
  return guarded([&] {
    if (out == nullptr) throw std::invalid_argument("null output");
    *out = gaussens::asymptotic_invariant(d, m, temperature);
  });
}

gaussens_status gaussens_entropy_from_purity(double mu, gaussens_log_base base, double* out) {
  return guarded([&] {
    if (out == nullptr) throw std::invalid_argument("null output");
    *out = gaussens::entropy_from_purity(mu, to_base(base));
  });
}

gaussens_status gaussens_mc_marginal_density(double e, int n, double total_energy, double* out) {
  return guarded([&] {
    if (out == nullptr) throw std::invalid_argument("null output");
    *out = gaussens::mc_marginal_density(e, {n, total_energy});
  });
}

gaussens_status gaussens_entropy_bounds(int n, double total_energy, int bins,
                                        gaussens_log_base base, gaussens_bounds_result* out) {
  return guarded([&] {
    if (out == nullptr) throw std::invalid_argument("null output");
    const gaussens::BoundResult r =
        gaussens::solve_entropy_bounds({n, total_energy}, bins, to_base(base));
    fill_bounds(r, bins, out);
    if (!r.feasible) throw gaussens::InfeasibleError("entropy bounds: no feasible distribution");
  });
}

gaussens_status gaussens_entropy_bounds_moments(double mean_a, double mean_a2, double a_min,
                                                double a_max, int bins, gaussens_log_base base,
                                                gaussens_bounds_result* out) {
  return guarded([&] {
    if (out == nullptr) throw std::invalid_argument("null output");
    gaussens::Discretization disc;
    disc.bins = bins;
    disc.a_min = a_min;
    disc.a_max = a_max;
    const gaussens::BoundResult r =
        gaussens::solve_entropy_bounds({mean_a, mean_a2}, disc, to_base(base));
    fill_bounds(r, bins, out);
    if (!r.feasible) throw gaussens::InfeasibleError("entropy bounds: no feasible distribution");
  });
}

gaussens_status gaussens_ensemble_run(const gaussens_ensemble_config* config,
                                      gaussens_ensemble** out) {
  return guarded([&] {
    if (out == nullptr) throw std::invalid_argument("null output");
    auto handle = std::make_unique<gaussens_ensemble>();
    handle->result = gaussens::run_ensemble(to_config(config));
    *out = handle.release();
  });
}

void gaussens_ensemble_free(gaussens_ensemble* ensemble) { delete ensemble; }

gaussens_status gaussens_ensemble_summary_get(const gaussens_ensemble* ensemble,
                                              gaussens_ensemble_summary* out) {
  return guarded([&] {
    if (ensemble == nullptr || out == nullptr) throw std::invalid_argument("null argument");
    const gaussens::EnsembleSummary& s = ensemble->result.summary;
    out->samples = s.samples;
    out->mean_entropy = s.mean_entropy;
    out->std_entropy = s.std_entropy;
    out->se_entropy = s.se_entropy;
    out->mean_inv_purity = s.mean_inv_purity;
    out->std_inv_purity = s.std_inv_purity;
    out->se_inv_purity = s.se_inv_purity;
    out->entropy_max = s.entropy_max;
    out->max_distance_sd = s.max_distance_sd;
    out->max_distance_sd_se = s.max_distance_sd_se;
  });
}

gaussens_status gaussens_ensemble_entropies(const gaussens_ensemble* ensemble, double* out,
                                            long long cap, long long* n_out) {
  return guarded([&] {
    if (ensemble == nullptr || n_out == nullptr) throw std::invalid_argument("null argument");
    const auto& records = ensemble->result.records;
    const long long total = static_cast<long long>(records.size());
    if (out == nullptr) {
      *n_out = total;
      return;
    }
    const long long count = std::min(cap, total);
    for (long long i = 0; i < count; ++i) out[i] = records[static_cast<size_t>(i)].entropy;
    *n_out = count;
  });
}

gaussens_status gaussens_ensemble_write_samples_csv(const gaussens_ensemble* ensemble,
                                                    const char* path) {
  return guarded([&] {
    if (ensemble == nullptr || path == nullptr) throw std::invalid_argument("null argument");
    gaussens::write_samples_csv(ensemble->result, path);
  });
}

gaussens_status gaussens_ensemble_write_summary_json(const gaussens_ensemble* ensemble,
                                                     const char* path) {
  return guarded([&] {
    if (ensemble == nullptr || path == nullptr) throw std::invalid_argument("null argument");
    gaussens::write_summary_json(ensemble->result, path);
  });
}

gaussens_status gaussens_ensemble_write_json(const gaussens_ensemble* ensemble,
                                             const char* path) {
  return guarded([&] {
    if (ensemble == nullptr || path == nullptr) throw std::invalid_argument("null argument");
    gaussens::write_ensemble_json(ensemble->result, path);
  });
}

gaussens_status gaussens_ensemble_histogram(const gaussens_ensemble* ensemble, int bins,
                                            double lo, double hi, double* edges_out,
                                            long long* counts_out) {
  return guarded([&] {
    if (ensemble == nullptr || edges_out == nullptr || counts_out == nullptr) {
      throw std::invalid_argument("null argument");
    }
    const gaussens::Histogram h =
        gaussens::make_histogram(ensemble->result.entropies(), bins, lo, hi);
    for (int k = 0; k <= bins; ++k) edges_out[k] = h.edges[k];
    for (int k = 0; k < bins; ++k) counts_out[k] = h.counts[k];
  });
}

gaussens_status gaussens_histogram_csv(const char* samples_csv, int bins, double lo, double hi,
                                       const char* out_csv) {
  return guarded([&] {
    if (samples_csv == nullptr || out_csv == nullptr) throw std::invalid_argument("null path");
    const std::vector<double> values = gaussens::read_csv_column(samples_csv, "entropy");
    if (values.empty()) throw std::runtime_error("no samples in input");
    double top = hi;
    if (!(top > lo)) {
      top = *std::max_element(values.begin(), values.end());
      if (!(top > lo)) top = lo + 1.0;
    }
    gaussens::write_histogram_csv(gaussens::make_histogram(values, bins, lo, top), out_csv);
  });
}

gaussens_status gaussens_concentration_scan(const int* ns, int n_count, gaussens_measure measure,
                                            double parameter, int m, long long samples,
                                            uint64_t seed, gaussens_log_base base, int threads,
                                            gaussens_scan** out) {
  return guarded([&] {
    if (ns == nullptr || n_count < 1 || out == nullptr) {
      throw std::invalid_argument("bad scan grid");
    }
    auto handle = std::make_unique<gaussens_scan>();
    handle->concentration = gaussens::concentration_scan(
        std::vector<int>(ns, ns + n_count),
        measure == GAUSSENS_MEASURE_CANONICAL ? gaussens::Measure::canonical
                                              : gaussens::Measure::microcanonical,
        parameter, m, samples, seed, to_base(base), threads);
    handle->is_concentration = true;
    handle->columns = {"n", "samples", "mean_entropy", "var_entropy", "var_over_mean",
                       "var_over_mean_se"};
    for (const auto& p : handle->concentration.points) {
      handle->rows.push_back({static_cast<double>(p.n), static_cast<double>(p.samples),
                              p.mean_entropy, p.var_entropy, p.ratio, p.ratio_se});
    }
    handle->has_fit = handle->concentration.points.size() >= 3;
    handle->fit = handle->concentration.fit;
    *out = handle.release();
  });
}

gaussens_status gaussens_mdep_scan(const int* ns, int n_count, int m_max, double energy_per_mode,
                                   long long samples, uint64_t seed, gaussens_log_base base,
                                   int threads, gaussens_scan** out) {
  return guarded([&] {
    if (ns == nullptr || n_count < 1 || out == nullptr) {
      throw std::invalid_argument("bad scan grid");
    }
    auto handle = std::make_unique<gaussens_scan>();
    handle->mdep = gaussens::mdep_scan(std::vector<int>(ns, ns + n_count), m_max,
                                       energy_per_mode, samples, seed, to_base(base), threads);
    handle->columns = {"n", "m", "mean_entropy", "std_entropy", "se_entropy"};
    for (const auto& p : handle->mdep) {
      handle->rows.push_back({static_cast<double>(p.n), static_cast<double>(p.m),
                              p.mean_entropy, p.std_entropy, p.se_entropy});
    }
    *out = handle.release();
  });
}

void gaussens_scan_free(gaussens_scan* scan) { delete scan; }

int gaussens_scan_rows(const gaussens_scan* scan) {
  return scan == nullptr ? 0 : static_cast<int>(scan->rows.size());
}

int gaussens_scan_cols(const gaussens_scan* scan) {
  return scan == nullptr ? 0 : static_cast<int>(scan->columns.size());
}

const char* gaussens_scan_column_name(const gaussens_scan* scan, int col) {
  if (scan == nullptr || col < 0 || col >= static_cast<int>(scan->columns.size())) return "";
  return scan->columns[col].c_str();
}

gaussens_status gaussens_scan_cell(const gaussens_scan* scan, int row, int col, double* out) {
  return guarded([&] {
    if (scan == nullptr || out == nullptr) throw std::invalid_argument("null argument");
    if (row < 0 || row >= static_cast<int>(scan->rows.size()) || col < 0 ||
        col >= static_cast<int>(scan->columns.size())) {
      throw std::invalid_argument("scan index out of range");
    }
    *out = scan->rows[row][col];
  });
}

gaussens_status gaussens_scan_write_csv(const gaussens_scan* scan, const char* path) {
  return guarded([&] {
    if (scan == nullptr || path == nullptr) throw std::invalid_argument("null argument");
    if (scan->is_concentration) {
      gaussens::write_concentration_csv(scan->concentration, path);
    } else {
      gaussens::write_mdep_csv(scan->mdep, path);
    }
  });
}

gaussens_status gaussens_scan_fit(const gaussens_scan* scan, double* slope, double* slope_se,
                                  double* intercept, double* intercept_se) {
  return guarded([&] {
    if (scan == nullptr || slope == nullptr || slope_se == nullptr || intercept == nullptr ||
        intercept_se == nullptr) {
      throw std::invalid_argument("null argument");
    }
    if (!scan->has_fit) throw std::invalid_argument("scan carries no fit");
    *slope = scan->fit.slope;
    *slope_se = scan->fit.slope_se;
    *intercept = scan->fit.intercept;
    *intercept_se = scan->fit.intercept_se;
  });
}

}  // extern "C"
