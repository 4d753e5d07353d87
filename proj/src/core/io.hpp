// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "core/ensemble.hpp"
#include "core/haar.hpp"
#include "core/lp_bounds.hpp"
#include "core/stats.hpp"
#include "core/symplectic.hpp"

namespace gaussens {

inline constexpr const char* kVersion = "0.1.0";

/// Shortest decimal that round-trips the double exactly (17 significant
/// digits); used for every number we persist.
std::string format_double(double v);

/// Covariance-matrix JSON: {"n": .., "ordering": "xxpp", "data": [..]} with
/// the 2n x 2n entries row-major. Round-trips bit-stably.
std::string cm_to_json(const CovarianceMatrix& cm);
CovarianceMatrix cm_from_json(const std::string& text);
void write_cm_json(const CovarianceMatrix& cm, const std::string& path);
CovarianceMatrix read_cm_json(const std::string& path);

/// One CSV row per sample: index, total energy, a, entropy, spectrum,
/// invariants. Header row first; RFC 4180 quoting where needed.
void write_samples_csv(const EnsembleResult& result, const std::string& path);

/// Sidecar with configuration, seed, code version and summary statistics.
std::string summary_to_json(const EnsembleResult& result);
void write_summary_json(const EnsembleResult& result, const std::string& path);

/// Whole ensemble (summary + records) as one JSON document.
void write_ensemble_json(const EnsembleResult& result, const std::string& path);

void write_concentration_csv(const ConcentrationScan& scan, const std::string& path);
void write_mdep_csv(const std::vector<MdepPoint>& points, const std::string& path);
void write_histogram_csv(const Histogram& hist, const std::string& path);

/// Values of one named column of a CSV file written by this library.
std::vector<double> read_csv_column(const std::string& path, const std::string& column);

/// Bounds result as JSON {lower, upper, M, active_bins, ...}.
std::string bounds_to_json(const BoundResult& result, int bins, LogBase base);

/// Audit line for one drawn state: {"sample": i, "energies": [...],
/// "x": [...], "y": [...]} with X, Y row-major.
std::string sample_state_json(long long index, const Eigen::VectorXd& energies,
                              const HaarUnitary& u);

}  // namespace gaussens
