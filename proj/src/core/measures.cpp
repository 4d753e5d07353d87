// SPDX-License-Identifier: Apache-2.0
#include "core/measures.hpp"

#include <cmath>

namespace gaussens {

void MicrocanonicalConfig::validate() const {
  if (n < 1) throw InvariantError("mode count must be positive");
  if (total_energy < 2.0 * n) {
    throw InvariantError("total energy below the vacuum energy 2n");
  }
}

void CanonicalConfig::validate() const {
  if (n < 1) throw InvariantError("mode count must be positive");
  if (!(temperature > 0.0)) throw InvariantError("temperature must be positive");
}

Eigen::VectorXd sample_mc_energies(const MicrocanonicalConfig& cfg, RngStream& rng) {
  cfg.validate();
  const int n = cfg.n;
  const double spare = cfg.reduced_energy();
  Eigen::VectorXd g(n + 1);
  for (int j = 0; j <= n; ++j) g[j] = rng.exponential();
  const double total = g.sum();
  // shifted energies x_j = E_j - 2; the dropped (n+1)-th coordinate projects
  // the uniform boundary simplex onto the solid one
  Eigen::VectorXd x = spare * g.head(n) / total;
  double sum_x = x.sum();
  if (sum_x > spare && sum_x > 0.0) {
    x *= spare / sum_x;  // roundoff guard; keeps sum E_j <= E exact
  }
  return x.array() + 2.0;
}

Eigen::VectorXd sample_can_energies(const CanonicalConfig& cfg, RngStream& rng) {
  cfg.validate();
  Eigen::VectorXd e(cfg.n);
  for (int j = 0; j < cfg.n; ++j) e[j] = 2.0 + cfg.temperature * rng.exponential();
  return e;
}

double mc_marginal_density(double e, const MicrocanonicalConfig& cfg) {
  cfg.validate();
  if (e < 2.0) throw InvariantError("per-mode energy below the vacuum value 2");
  const double spare = cfg.reduced_energy();
  if (spare <= 0.0) throw InvariantError("degenerate measure: no energy above the vacuum");
  const double u = 1.0 - (e - 2.0) / spare;
  if (u < 0.0) return 0.0;
  return cfg.n / spare * std::pow(u, cfg.n - 1);
}

double mc_normalization(const MicrocanonicalConfig& cfg) {
  cfg.validate();
  const double spare = cfg.reduced_energy();
  if (spare <= 0.0) {
    throw InvariantError("accessible volume is zero: normalisation diverges");
  }
  double norm = 1.0;
  for (int k = 1; k <= cfg.n; ++k) norm *= k / spare;
  return norm;
}

}  // namespace gaussens
