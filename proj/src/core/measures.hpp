// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>

#include "core/errors.hpp"
#include "core/rng.hpp"

namespace gaussens {

/// Flat measure on per-mode energies inside the region of total energy <= E.
struct MicrocanonicalConfig {
  int n = 1;
  double total_energy = 2.0;  // E, in units where the vacuum mode has energy 2

  /// E - 2n, the energy available above the vacuum.
  double reduced_energy() const { return total_energy - 2.0 * n; }
  void validate() const;
};

/// Independent Boltzmann-distributed per-mode energies at temperature T.
struct CanonicalConfig {
  int n = 1;
  double temperature = 1.0;  // mean per-mode energy is 2 + T

  void validate() const;
};

/// Energies (E_1..E_n), each >= 2, with sum <= E: uniform on the solid
/// simplex via n+1 unit exponentials g, x_j = (E - 2n) g_j / sum(g).
Eigen::VectorXd sample_mc_energies(const MicrocanonicalConfig& cfg, RngStream& rng);

/// Energies E_j = 2 + T * Exp(1), i.i.d.
Eigen::VectorXd sample_can_energies(const CanonicalConfig& cfg, RngStream& rng);

/// Marginal density of a single energy under the micro-canonical measure:
/// (n / (E - 2n)) (1 - (e - 2)/(E - 2n))^{n-1} on [2, E - 2(n-1)], else 0.
double mc_marginal_density(double e, const MicrocanonicalConfig& cfg);

/// Normalisation n! / (E - 2n)^n; its reciprocal is the volume of the
/// accessible energy region. Throws when that volume is zero.
double mc_normalization(const MicrocanonicalConfig& cfg);

}  // namespace gaussens
