// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "core/analytics.hpp"
#include "core/measures.hpp"
#include "core/symplectic.hpp"

namespace gaussens {

/// Uniform partition of [a_min, a_max] into `bins` sub-intervals.
struct Discretization {
  int bins = 10000;
  double a_min = 1.0;
  double a_max = 2.0;

  double edge(int k) const { return a_min + k * (a_max - a_min) / bins; }
  void validate() const;
};

/// Known moments of the unknown single-mode distribution of a = mu^{-2}.
struct MomentConstraints {
  double mean_a = 1.0;
  double mean_a2 = 1.0;
};

/// Certified bracket on the mean single-mode entropy.
struct BoundResult {
  double lower = 0.0;
  double upper = 0.0;
  bool feasible = false;
  std::vector<int> active_lower;  // bins carrying weight at the lower optimum
  std::vector<int> active_upper;
  double duality_gap = 0.0;       // worse of the two programs
  int iterations = 0;
};

/// Bounds on E[S] over every distribution on [a_min, a_max] matching the
/// moments, after discretisation into `disc.bins` cells. The upper program
/// scores each cell at its right edge and the lower one at its left edge, so
/// the bracket is valid for any finite bin count. Moments are rounded
/// outward before entering the constraints so floating point cannot cut off
/// the true distribution.
BoundResult solve_entropy_bounds(const MomentConstraints& moments, const Discretization& disc,
                                 LogBase base = LogBase::base2);

/// Convenience entry: moments and a_max from a micro-canonical configuration
/// (requires n > 2, where a_min = 1 holds), discretised into `bins` cells.
BoundResult solve_entropy_bounds(const MicrocanonicalConfig& cfg, int bins,
                                 LogBase base = LogBase::base2);

}  // namespace gaussens
