// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>

#include "core/measures.hpp"
#include "core/symplectic.hpp"

namespace gaussens {

/// First and second moments of a = mu^{-2} (the reduced-state determinant).
struct MomentPair {
  double mean_a = 1.0;   // <a>
  double mean_a2 = 1.0;  // <a^2>

  double variance() const { return mean_a2 - mean_a * mean_a; }
  double stddev() const;
};

/// Average subsystem entropy (in nats) of a random pure state of Hilbert
/// dimension m*n with a subsystem of dimension m <= n:
/// sum_{k=n+1}^{mn} 1/k - (m-1)/(2n).
double page_entropy(int m, int n);

/// Moments of the single-mode a = mu^{-2} over the compact group alone, for
/// fixed per-mode energies. O(n) via power sums of the energies; n = 1 gives
/// (1, 1).
MomentPair haar_invpurity_moments(const Eigen::VectorXd& energies);

/// Same moments with the energies integrated over the canonical measure.
MomentPair canonical_invpurity_moments(const CanonicalConfig& cfg);

/// Same moments with the energies integrated over the micro-canonical measure.
MomentPair microcanonical_invpurity_moments(const MicrocanonicalConfig& cfg);

/// Largest attainable a = mu^{-2} of one mode at reduced energy Et = E - 2n:
/// (Et + 4)^2 / 16.
double max_inv_purity(double reduced_energy);

/// Largest attainable entropy of an m-mode reduction of a pure state of
/// (m + n) modes (m <= n) with total energy E: m h((E - 2(n - m)) / (4m)).
/// Achieved by a tensor product of m equally entangled two-mode squeezed
/// states. Requires E >= 2(n + m).
double max_entropy(int m, int n, double total_energy, LogBase base = LogBase::base2);

/// Large-system mean entropy of an m-mode reduction at temperature T:
/// m h(1 + T/2).
double asymptotic_entropy(int m, double temperature, LogBase base = LogBase::base2);

/// Large-system mean of the invariant Delta_d of an m-mode reduction:
/// C(m, d) (1 + T/2)^{2d}.
double asymptotic_invariant(int d, int m, double temperature);

/// Single-mode entropy as a function of purity: h(1/mu), with S(1) = 0.
double entropy_from_purity(double mu, LogBase base = LogBase::base2);

/// Binomial coefficient as a double.
double binomial(int n, int k);

}  // namespace gaussens
