// SPDX-License-Identifier: Apache-2.0
#include "core/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace gaussens {

namespace {

using nlohmann::json;

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json config_json(const EnsembleConfig& cfg) {
  json j;
  j["measure"] = measure_name(cfg.measure);
  j["n"] = cfg.n;
  j["m"] = cfg.m;
  if (cfg.measure == Measure::microcanonical) {
    j["energy"] = cfg.total_energy;
  } else {
    j["temperature"] = cfg.temperature;
  }
  j["samples"] = cfg.samples;
  j["seed"] = cfg.seed;
  j["log_base"] = log_base_name(cfg.log_base);
  return j;
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string cm_to_json(const CovarianceMatrix& cm) {
  std::ostringstream out;
  out << "{\"n\": " << cm.modes() << ", \"ordering\": \"xxpp\", \"data\": [";
  const Eigen::MatrixXd& m = cm.matrix();
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (i != 0 || j != 0) out << ", ";
      out << format_double(m(i, j));
    }
  }
  out << "]}";
  return out.str();
}

CovarianceMatrix cm_from_json(const std::string& text) {
  const json j = json::parse(text);
  const int n = j.at("n").get<int>();
  if (j.at("ordering").get<std::string>() != "xxpp") {
    throw InvariantError("unsupported ordering; expected xxpp");
  }
  const auto& data = j.at("data");
  if (n < 1 || static_cast<int>(data.size()) != 4 * n * n) {
    throw InvariantError("data length does not match 4n^2");
  }
  Eigen::MatrixXd m(2 * n, 2 * n);
  int k = 0;
  for (int i = 0; i < 2 * n; ++i) {
    for (int jj = 0; jj < 2 * n; ++jj) m(i, jj) = data[k++].get<double>();
  }
  return CovarianceMatrix(std::move(m));
}

void write_cm_json(const CovarianceMatrix& cm, const std::string& path) {
  open_out(path) << cm_to_json(cm) << '\n';
}

CovarianceMatrix read_cm_json(const std::string& path) { return cm_from_json(read_file(path)); }

void write_samples_csv(const EnsembleResult& result, const std::string& path) {
  std::ofstream out = open_out(path);
  const int m = result.config.m;
  out << "sample,total_energy,inv_purity,entropy";
  for (int j = 1; j <= m; ++j) out << ",nu_" << j;
  for (int j = 1; j <= m; ++j) out << ",delta_" << j;
  out << "\n";
  for (const SampleRecord& r : result.records) {
    out << r.index << ',' << format_double(r.total_energy) << ','
        << format_double(r.inv_purity) << ',' << format_double(r.entropy);
    for (double v : r.nus) out << ',' << format_double(v);
    for (double v : r.invariants) out << ',' << format_double(v);
    out << '\n';
  }
}

std::string summary_to_json(const EnsembleResult& result) {
  json j;
  j["version"] = kVersion;
  j["config"] = config_json(result.config);
  const EnsembleSummary& s = result.summary;
  json sj;
  sj["samples"] = s.samples;
  sj["mean_entropy"] = s.mean_entropy;
  sj["std_entropy"] = s.std_entropy;
  sj["se_entropy"] = s.se_entropy;
  sj["mean_inv_purity"] = s.mean_inv_purity;
  sj["std_inv_purity"] = s.std_inv_purity;
  sj["se_inv_purity"] = s.se_inv_purity;
  if (std::isfinite(s.entropy_max)) {
    sj["entropy_max"] = s.entropy_max;
    sj["max_distance_sd"] = s.max_distance_sd;
    sj["max_distance_sd_se"] = s.max_distance_sd_se;
  }
  j["summary"] = sj;
  return j.dump(2);
}

void write_summary_json(const EnsembleResult& result, const std::string& path) {
  open_out(path) << summary_to_json(result) << '\n';
}

void write_ensemble_json(const EnsembleResult& result, const std::string& path) {
  json j = json::parse(summary_to_json(result));
  json records = json::array();
  for (const SampleRecord& r : result.records) {
    json rj;
    rj["sample"] = r.index;
    rj["total_energy"] = r.total_energy;
    rj["inv_purity"] = r.inv_purity;
    rj["entropy"] = r.entropy;
    rj["nu"] = r.nus;
    rj["delta"] = r.invariants;
    records.push_back(std::move(rj));
  }
  j["records"] = std::move(records);
  open_out(path) << j.dump(2) << '\n';
}

void write_concentration_csv(const ConcentrationScan& scan, const std::string& path) {
  std::ofstream out = open_out(path);
  out << "n,samples,mean_entropy,var_entropy,var_over_mean,var_over_mean_se\n";
  for (const ConcentrationPoint& p : scan.points) {
    out << p.n << ',' << p.samples << ',' << format_double(p.mean_entropy) << ','
        << format_double(p.var_entropy) << ',' << format_double(p.ratio) << ','
        << format_double(p.ratio_se) << '\n';
  }
}

void write_mdep_csv(const std::vector<MdepPoint>& points, const std::string& path) {
  std::ofstream out = open_out(path);
  out << "n,m,mean_entropy,std_entropy,se_entropy\n";
  for (const MdepPoint& p : points) {
    out << p.n << ',' << p.m << ',' << format_double(p.mean_entropy) << ','
        << format_double(p.std_entropy) << ',' << format_double(p.se_entropy) << '\n';
  }
}

void write_histogram_csv(const Histogram& hist, const std::string& path) {
  std::ofstream out = open_out(path);
  out << "bin_lo,bin_hi,count,density\n";
  for (size_t k = 0; k < hist.counts.size(); ++k) {
    out << format_double(hist.edges[k]) << ',' << format_double(hist.edges[k + 1]) << ','
        << hist.counts[k] << ',' << format_double(hist.density[k]) << '\n';
  }
}

std::vector<double> read_csv_column(const std::string& path, const std::string& column) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("empty CSV: " + path);
  int target = -1;
  {
    std::istringstream header(line);
    std::string field;
    for (int idx = 0; std::getline(header, field, ','); ++idx) {
      if (field == column) {
        target = idx;
        break;
      }
    }
  }
  if (target < 0) throw std::runtime_error("column not found: " + column);
  std::vector<double> values;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string field;
    for (int idx = 0; std::getline(row, field, ','); ++idx) {
      if (idx == target) {
        values.push_back(std::stod(field));
        break;
      }
    }
  }
  return values;
}

std::string bounds_to_json(const BoundResult& result, int bins, LogBase base) {
  json j;
  j["lower"] = result.lower;
  j["upper"] = result.upper;
  j["M"] = bins;
  j["feasible"] = result.feasible;
  j["log_base"] = log_base_name(base);
  j["active_bins"] = {{"lower", result.active_lower}, {"upper", result.active_upper}};
  j["duality_gap"] = result.duality_gap;
  return j.dump(2);
}

std::string sample_state_json(long long index, const Eigen::VectorXd& energies,
                              const HaarUnitary& u) {
  std::ostringstream out;
  out << "{\"sample\": " << index << ", \"energies\": [";
  for (int j = 0; j < energies.size(); ++j) {
    if (j) out << ", ";
    out << format_double(energies[j]);
  }
  out << "], \"x\": [";
  const int n = u.n();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i || j) out << ", ";
      out << format_double(u.x(i, j));
    }
  }
  out << "], \"y\": [";
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i || j) out << ", ";
      out << format_double(u.y(i, j));
    }
  }
  out << "]}";
  return out.str();
}

}  // namespace gaussens
