// SPDX-License-Identifier: Apache-2.0
//
// Command-line harness over the gaussens shared library. Everything here
// goes through the C API in gaussens.h.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gaussens.h"

namespace {

using nlohmann::json;

int exit_code(gaussens_status status) {
  switch (status) {
    case GAUSSENS_OK: return 0;
    case GAUSSENS_ERR_INVARIANT: return 2;
    case GAUSSENS_ERR_INFEASIBLE: return 3;
    default: return 1;
  }
}

[[noreturn]] void die(gaussens_status status) {
  std::cerr << "error (" << gaussens_status_name(status) << "): " << gaussens_last_error()
            << "\n";
  std::exit(exit_code(status));
}

void check(gaussens_status status) {
  if (status != GAUSSENS_OK) die(status);
}

gaussens_log_base parse_base(const std::string& s) {
  if (s == "2") return GAUSSENS_LOG_BASE_2;
  if (s == "e") return GAUSSENS_LOG_BASE_E;
  std::cerr << "error: --log-base must be 2 or e\n";
  std::exit(1);
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) out.push_back(std::stoi(tok));
  }
  if (out.empty()) {
    std::cerr << "error: empty integer list\n";
    std::exit(1);
  }
  return out;
}

std::string sidecar_path(const std::string& out) {
  const std::string suffix = ".csv";
  if (out.size() > suffix.size() && out.compare(out.size() - suffix.size(), suffix.size(), suffix) == 0) {
    return out.substr(0, out.size() - suffix.size()) + ".summary.json";
  }
  return out + ".summary.json";
}

json summary_json(const gaussens_ensemble* ens) {
  gaussens_ensemble_summary s{};
  check(gaussens_ensemble_summary_get(ens, &s));
  json j;
  j["samples"] = s.samples;
  j["mean_entropy"] = s.mean_entropy;
  j["std_entropy"] = s.std_entropy;
  j["se_entropy"] = s.se_entropy;
  j["mean_inv_purity"] = s.mean_inv_purity;
  j["std_inv_purity"] = s.std_inv_purity;
  j["se_inv_purity"] = s.se_inv_purity;
  if (std::isfinite(s.entropy_max)) {
    j["entropy_max"] = s.entropy_max;
    j["max_distance_sd"] = s.max_distance_sd;
    j["max_distance_sd_se"] = s.max_distance_sd_se;
  }
  return j;
}

double run_max_entropy_for(int m, int n, double energy, gaussens_log_base base) {
  if (m >= n) return 0.0;
  const int m_eff = std::min(m, n - m);
  double smax = 0.0;
  check(gaussens_max_entropy(m_eff, n - m_eff, energy, base, &smax));
  return smax;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monte Carlo and closed-form statistics of pure Gaussian bosonic states"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(gaussens_version()));

  // --- sample ---------------------------------------------------------
  auto* sample = app.add_subcommand("sample", "draw an ensemble and record each reduction");
  std::string measure = "microcanonical";
  int n = 4, m = 1, threads = 0;
  double energy = -1.0, temperature = -1.0;
  long long samples = 1000;
  std::uint64_t seed = 0;
  std::string log_base = "2", out, format = "csv", dump_states, config_path;
  bool check_all = false;
  sample->add_option("--measure", measure, "microcanonical|canonical");
  sample->add_option("--n", n, "total modes");
  sample->add_option("--m", m, "modes kept by the reduction");
  sample->add_option("--energy", energy, "total energy cap E (microcanonical)");
  sample->add_option("--temperature", temperature, "temperature T (canonical)");
  sample->add_option("--samples", samples, "number of states to draw");
  sample->add_option("--seed", seed, "RNG seed");
  sample->add_option("--log-base", log_base, "entropy log base: 2|e");
  sample->add_option("--out", out, "output path (CSV records or JSON document)");
  sample->add_option("--format", format, "csv|json");
  sample->add_option("--threads", threads, "worker threads (0: all cores)");
  sample->add_flag("--check-all", check_all, "verify invariants on every sample");
  sample->add_option("--dump-states", dump_states, "write per-sample (E, X, Y) JSON lines");
  sample->add_option("--config", config_path,
                     "JSON config {measure, n, E or T, seed, [m], [samples]}");

  // --- bounds ---------------------------------------------------------
  auto* bounds = app.add_subcommand("bounds", "certified bracket of the mean entropy");
  int b_n = 8, b_bins = 10000;
  double b_energy = 32.0, b_mean_a = -1.0, b_mean_a2 = -1.0;
  std::string b_base = "2", b_out;
  bounds->add_option("--n", b_n, "total modes (> 2)")->required();
  bounds->add_option("--energy", b_energy, "total energy cap E")->required();
  bounds->add_option("--bins", b_bins, "discretisation cells M");
  bounds->add_option("--log-base", b_base, "entropy log base: 2|e");
  bounds->add_option("--out", b_out, "also write the JSON result here");
  bounds->add_option("--mean-a", b_mean_a, "override the mean of a (expert)");
  bounds->add_option("--mean-a2", b_mean_a2, "override the second moment of a (expert)");

  // --- scan-concentration ----------------------------------------------
  auto* conc = app.add_subcommand("scan-concentration",
                                  "variance/mean of the entropy against system size");
  std::string c_nlist = "4,8,16,32", c_measure = "microcanonical", c_base = "2", c_out;
  double c_epm = -1.0, c_temperature = -1.0;
  int c_m = 1, c_threads = 0;
  long long c_samples = 1500;
  std::uint64_t c_seed = 0;
  conc->add_option("--n-list", c_nlist, "comma-separated system sizes");
  conc->add_option("--measure", c_measure, "microcanonical|canonical");
  conc->add_option("--energy-per-mode", c_epm, "E/n (microcanonical)");
  conc->add_option("--temperature", c_temperature, "T (canonical)");
  conc->add_option("--m", c_m, "reduction size");
  conc->add_option("--samples", c_samples, "samples per grid point");
  conc->add_option("--seed", c_seed, "RNG seed");
  conc->add_option("--log-base", c_base, "2|e");
  conc->add_option("--threads", c_threads, "worker threads");
  conc->add_option("--out", c_out, "CSV output path");

  // --- scan-mdep --------------------------------------------------------
  auto* mdep = app.add_subcommand("scan-mdep", "entropy against the reduction size m");
  std::string d_nlist = "10,20,30", d_base = "2", d_out;
  double d_epm = 10.0;
  int d_mmax = 5, d_threads = 0;
  long long d_samples = 5000;
  std::uint64_t d_seed = 0;
  mdep->add_option("--n-list", d_nlist, "comma-separated system sizes");
  mdep->add_option("--m-max", d_mmax, "scan m = 1..m-max");
  mdep->add_option("--energy-per-mode", d_epm, "E/n (microcanonical)");
  mdep->add_option("--samples", d_samples, "samples per grid point");
  mdep->add_option("--seed", d_seed, "RNG seed");
  mdep->add_option("--log-base", d_base, "2|e");
  mdep->add_option("--threads", d_threads, "worker threads");
  mdep->add_option("--out", d_out, "CSV output path");

  // --- histogram ---------------------------------------------------------
  auto* hist = app.add_subcommand("histogram", "bin the entropies of a samples CSV");
  std::string h_in, h_out, h_base = "2";
  int h_bins = 50, h_n = 0, h_m = 1;
  double h_energy = -1.0, h_max = -1.0;
  hist->add_option("--in", h_in, "samples CSV written by `sample`")->required();
  hist->add_option("--bins", h_bins, "bin count");
  hist->add_option("--out", h_out, "histogram CSV path")->required();
  hist->add_option("--max", h_max, "upper edge (default: largest attainable entropy)");
  hist->add_option("--n", h_n, "total modes of the run (to place the upper edge)");
  hist->add_option("--m", h_m, "reduction size of the run");
  hist->add_option("--energy", h_energy, "total energy cap of the run");
  hist->add_option("--log-base", h_base, "2|e");

  // --- analytics -----------------------------------------------------------
  auto* ana = app.add_subcommand("analytics", "evaluate one closed-form expression");
  std::string a_formula, a_base = "2", a_energies;
  int a_m = 1, a_n = 1, a_d = 1;
  double a_energy = -1.0, a_temperature = -1.0, a_mu = 1.0, a_x = 1.0, a_et = 0.0;
  ana->add_option("--formula", a_formula,
                  "page|canonical-moments|microcanonical-moments|haar-moments|"
                  "max-inv-purity|max-entropy|asymptotic-entropy|asymptotic-invariant|"
                  "entropy-from-purity|entropic-h|mc-marginal")
      ->required();
  ana->add_option("--m", a_m, "subsystem modes");
  ana->add_option("--n", a_n, "modes");
  ana->add_option("--d", a_d, "invariant order");
  ana->add_option("--energy", a_energy, "total energy E");
  ana->add_option("--reduced-energy", a_et, "energy above the vacuum, E - 2n");
  ana->add_option("--temperature", a_temperature, "temperature T");
  ana->add_option("--mu", a_mu, "purity");
  ana->add_option("--x", a_x, "argument of the entropy kernel");
  ana->add_option("--energies", a_energies, "comma-separated per-mode energies");
  ana->add_option("--log-base", a_base, "2|e");

  CLI11_PARSE(app, argc, argv);

  if (sample->parsed()) {
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) {
        std::cerr << "error: cannot read " << config_path << "\n";
        return 1;
      }
      json cfg = json::parse(in, nullptr, false);
      if (cfg.is_discarded()) {
        std::cerr << "error: invalid JSON in " << config_path << "\n";
        return 1;
      }
      if (cfg.contains("measure") && sample->count("--measure") == 0)
        measure = cfg["measure"].get<std::string>();
      if (cfg.contains("n") && sample->count("--n") == 0) n = cfg["n"].get<int>();
      if (cfg.contains("m") && sample->count("--m") == 0) m = cfg["m"].get<int>();
      if (cfg.contains("E") && sample->count("--energy") == 0) energy = cfg["E"].get<double>();
      if (cfg.contains("energy") && sample->count("--energy") == 0)
        energy = cfg["energy"].get<double>();
      if (cfg.contains("T") && sample->count("--temperature") == 0)
        temperature = cfg["T"].get<double>();
      if (cfg.contains("temperature") && sample->count("--temperature") == 0)
        temperature = cfg["temperature"].get<double>();
      if (cfg.contains("seed") && sample->count("--seed") == 0)
        seed = cfg["seed"].get<std::uint64_t>();
      if (cfg.contains("samples") && sample->count("--samples") == 0)
        samples = cfg["samples"].get<long long>();
    }
    gaussens_ensemble_config cfg{};
    cfg.measure = measure == "canonical" ? GAUSSENS_MEASURE_CANONICAL
                                         : GAUSSENS_MEASURE_MICROCANONICAL;
    if (measure != "canonical" && measure != "microcanonical") {
      std::cerr << "error: --measure must be microcanonical or canonical\n";
      return 1;
    }
    cfg.n = n;
    cfg.m = m;
    cfg.total_energy = energy;
    cfg.temperature = temperature;
    if (cfg.measure == GAUSSENS_MEASURE_MICROCANONICAL && energy < 0.0) {
      std::cerr << "error: microcanonical runs need --energy\n";
      return 1;
    }
    if (cfg.measure == GAUSSENS_MEASURE_CANONICAL && temperature < 0.0) {
      std::cerr << "error: canonical runs need --temperature\n";
      return 1;
    }
    cfg.samples = samples;
    cfg.seed = seed;
    cfg.log_base = parse_base(log_base);
    cfg.threads = threads;
    cfg.check_all = check_all ? 1 : 0;
    cfg.dump_states_path = dump_states.empty() ? nullptr : dump_states.c_str();

    gaussens_ensemble* ens = nullptr;
    check(gaussens_ensemble_run(&cfg, &ens));
    if (!out.empty()) {
      if (format == "json") {
        check(gaussens_ensemble_write_json(ens, out.c_str()));
      } else {
        check(gaussens_ensemble_write_samples_csv(ens, out.c_str()));
        check(gaussens_ensemble_write_summary_json(ens, sidecar_path(out).c_str()));
      }
    }
    std::cout << summary_json(ens).dump(2) << "\n";
    gaussens_ensemble_free(ens);
    return 0;
  }

  if (bounds->parsed()) {
    gaussens_bounds_result r{};
    gaussens_status st;
    if (b_mean_a > 0.0 || b_mean_a2 > 0.0) {
      double a_max = 0.0;
      check(gaussens_max_inv_purity(b_energy - 2.0 * b_n, &a_max));
      st = gaussens_entropy_bounds_moments(b_mean_a, b_mean_a2, 1.0, a_max, b_bins,
                                           parse_base(b_base), &r);
    } else {
      st = gaussens_entropy_bounds(b_n, b_energy, b_bins, parse_base(b_base), &r);
    }
    if (st != GAUSSENS_OK && st != GAUSSENS_ERR_INFEASIBLE) die(st);
    json j;
    j["lower"] = r.lower;
    j["upper"] = r.upper;
    j["M"] = r.bins;
    j["feasible"] = r.feasible != 0;
    j["log_base"] = b_base;
    j["duality_gap"] = r.duality_gap;
    j["active_bins"]["lower"] = std::vector<int>(r.active_lower, r.active_lower + r.n_active_lower);
    j["active_bins"]["upper"] = std::vector<int>(r.active_upper, r.active_upper + r.n_active_upper);
    std::cout << j.dump(2) << "\n";
    if (!b_out.empty()) {
      std::ofstream f(b_out);
      f << j.dump(2) << "\n";
    }
    if (st != GAUSSENS_OK) die(st);
    return 0;
  }

  if (conc->parsed()) {
    const std::vector<int> ns = parse_int_list(c_nlist);
    const bool canonical = c_measure == "canonical";
    const double parameter = canonical ? c_temperature : c_epm;
    if (parameter < 0.0) {
      std::cerr << "error: give --energy-per-mode (microcanonical) or --temperature\n";
      return 1;
    }
    gaussens_scan* scan = nullptr;
    check(gaussens_concentration_scan(
        ns.data(), static_cast<int>(ns.size()),
        canonical ? GAUSSENS_MEASURE_CANONICAL : GAUSSENS_MEASURE_MICROCANONICAL, parameter,
        c_m, c_samples, c_seed, parse_base(c_base), c_threads, &scan));
    if (!c_out.empty()) check(gaussens_scan_write_csv(scan, c_out.c_str()));
    json j;
    double slope, slope_se, intercept, intercept_se;
    if (gaussens_scan_fit(scan, &slope, &slope_se, &intercept, &intercept_se) == GAUSSENS_OK) {
      j["fit"] = {{"slope", slope},
                  {"slope_se", slope_se},
                  {"intercept", intercept},
                  {"intercept_se", intercept_se}};
    }
    json rows = json::array();
    for (int r = 0; r < gaussens_scan_rows(scan); ++r) {
      json row;
      for (int c = 0; c < gaussens_scan_cols(scan); ++c) {
        double v;
        check(gaussens_scan_cell(scan, r, c, &v));
        row[gaussens_scan_column_name(scan, c)] = v;
      }
      rows.push_back(row);
    }
    j["points"] = rows;
    std::cout << j.dump(2) << "\n";
    gaussens_scan_free(scan);
    return 0;
  }

  if (mdep->parsed()) {
    const std::vector<int> ns = parse_int_list(d_nlist);
    gaussens_scan* scan = nullptr;
    check(gaussens_mdep_scan(ns.data(), static_cast<int>(ns.size()), d_mmax, d_epm, d_samples,
                             d_seed, parse_base(d_base), d_threads, &scan));
    if (!d_out.empty()) check(gaussens_scan_write_csv(scan, d_out.c_str()));
    json rows = json::array();
    for (int r = 0; r < gaussens_scan_rows(scan); ++r) {
      json row;
      for (int c = 0; c < gaussens_scan_cols(scan); ++c) {
        double v;
        check(gaussens_scan_cell(scan, r, c, &v));
        row[gaussens_scan_column_name(scan, c)] = v;
      }
      rows.push_back(row);
    }
    std::cout << rows.dump(2) << "\n";
    gaussens_scan_free(scan);
    return 0;
  }

  if (hist->parsed()) {
    double hi = h_max;
    if (hi <= 0.0 && h_n > 0 && h_energy > 0.0) {
      hi = run_max_entropy_for(h_m, h_n, h_energy, parse_base(h_base));
    }
    check(gaussens_histogram_csv(h_in.c_str(), h_bins, 0.0, hi, h_out.c_str()));
    std::cout << "{\"written\": \"" << h_out << "\", \"bins\": " << h_bins << "}\n";
    return 0;
  }

  if (ana->parsed()) {
    const gaussens_log_base base = parse_base(a_base);
    json j;
    j["formula"] = a_formula;
    json inputs;
    std::string units = a_base == "2" ? "bits" : "nats";
    if (a_formula == "page") {
      double v;
      check(gaussens_page_entropy(a_m, a_n, &v));
      inputs = {{"m", a_m}, {"n", a_n}};
      j["value"] = v;
      units = "nats";
    } else if (a_formula == "canonical-moments") {
      double mean, second, sd;
      check(gaussens_canonical_moments(a_n, a_temperature, &mean, &second, &sd));
      inputs = {{"n", a_n}, {"T", a_temperature}};
      j["value"] = {{"mean_a", mean}, {"mean_a2", second}, {"std", sd}};
      units = "dimensionless";
    } else if (a_formula == "microcanonical-moments") {
      double mean, second, sd;
      check(gaussens_microcanonical_moments(a_n, a_energy, &mean, &second, &sd));
      inputs = {{"n", a_n}, {"E", a_energy}};
      j["value"] = {{"mean_a", mean}, {"mean_a2", second}, {"std", sd}};
      units = "dimensionless";
    } else if (a_formula == "haar-moments") {
      std::vector<double> es;
      std::stringstream ss(a_energies);
      std::string tok;
      while (std::getline(ss, tok, ',')) {
        if (!tok.empty()) es.push_back(std::stod(tok));
      }
      if (es.empty()) {
        std::cerr << "error: --energies required\n";
        return 1;
      }
      double mean, second, sd;
      check(gaussens_haar_moments(es.data(), static_cast<int>(es.size()), &mean, &second, &sd));
      inputs = {{"energies", es}};
      j["value"] = {{"mean_a", mean}, {"mean_a2", second}, {"std", sd}};
      units = "dimensionless";
    } else if (a_formula == "max-inv-purity") {
      double v;
      check(gaussens_max_inv_purity(a_et, &v));
      inputs = {{"reduced_energy", a_et}};
      j["value"] = v;
      units = "dimensionless";
    } else if (a_formula == "max-entropy") {
      double v;
      check(gaussens_max_entropy(a_m, a_n, a_energy, base, &v));
      inputs = {{"m", a_m}, {"n", a_n}, {"E", a_energy}};
      j["value"] = v;
    } else if (a_formula == "asymptotic-entropy") {
      double v;
      check(gaussens_asymptotic_entropy(a_m, a_temperature, base, &v));
      inputs = {{"m", a_m}, {"T", a_temperature}};
      j["value"] = v;
    } else if (a_formula == "asymptotic-invariant") {
      double v;
      check(gaussens_asymptotic_invariant(a_d, a_m, a_temperature, &v));
      inputs = {{"d", a_d}, {"m", a_m}, {"T", a_temperature}};
      j["value"] = v;
      units = "dimensionless";
    } else if (a_formula == "entropy-from-purity") {
      double v;
      check(gaussens_entropy_from_purity(a_mu, base, &v));
      inputs = {{"mu", a_mu}};
      j["value"] = v;
    } else if (a_formula == "entropic-h") {
      double v;
      check(gaussens_entropic_h(a_x, base, &v));
      inputs = {{"x", a_x}};
      j["value"] = v;
    } else if (a_formula == "mc-marginal") {
      double v;
      check(gaussens_mc_marginal_density(a_x, a_n, a_energy, &v));
      inputs = {{"e", a_x}, {"n", a_n}, {"E", a_energy}};
      j["value"] = v;
      units = "probability density";
    } else {
      std::cerr << "error: unknown formula " << a_formula << "\n";
      return 1;
    }
    j["inputs"] = inputs;
    j["units"] = units;
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  return 0;
}
