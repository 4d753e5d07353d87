// SPDX-License-Identifier: Apache-2.0
#include "core/lp_bounds.hpp"

#include <cmath>

#include "core/simplex.hpp"

namespace gaussens {

namespace {

double nudge_down(double v) {
  for (int i = 0; i < 4; ++i) v = std::nextafter(v, -1e308);
  return v;
}

double nudge_up(double v) {
  for (int i = 0; i < 4; ++i) v = std::nextafter(v, 1e308);
  return v;
}

double entropy_of_a(double a, LogBase base) {
  return a <= 1.0 ? 0.0 : entropic_h(std::sqrt(a), base);
}

std::vector<int> active_bins(const Eigen::VectorXd& x) {
  std::vector<int> idx;
  for (int k = 0; k < x.size(); ++k) {
    if (x[k] > 1e-12) idx.push_back(k);
  }
  return idx;
}

}  // namespace

void Discretization::validate() const {
  if (bins < 2) throw InvariantError("discretisation needs at least 2 bins");
  if (!(a_max > a_min)) throw InvariantError("discretisation interval is empty");
}

BoundResult solve_entropy_bounds(const MomentConstraints& moments, const Discretization& disc,
                                 LogBase base) {
  disc.validate();
  if (moments.mean_a < disc.a_min || moments.mean_a > disc.a_max) {
    throw InfeasibleError("mean of a lies outside the discretised interval");
  }
  const int m = disc.bins;

  LinearProgram prog;
  prog.a.resize(5, m);
  prog.c.resize(m);
  Eigen::VectorXd score_left(m);
  for (int k = 0; k < m; ++k) {
    const double left = disc.edge(k);
    const double right = disc.edge(k + 1);
    prog.a(0, k) = right;          // sum l(k+1) v_k >= mean_a
    prog.a(1, k) = left;           // sum l(k)   v_k <= mean_a
    prog.a(2, k) = right * right;  // sum l(k+1)^2 v_k >= mean_a2
    prog.a(3, k) = left * left;    // sum l(k)^2   v_k <= mean_a2
    prog.a(4, k) = 1.0;
    prog.c[k] = entropy_of_a(right, base);
    score_left[k] = entropy_of_a(left, base);
  }
  prog.rel = {Relation::ge, Relation::le, Relation::ge, Relation::le, Relation::eq};
  prog.b.resize(5);
  prog.b[0] = nudge_down(moments.mean_a);
  prog.b[1] = nudge_up(moments.mean_a);
  prog.b[2] = nudge_down(moments.mean_a2);
  prog.b[3] = nudge_up(moments.mean_a2);
  prog.b[4] = 1.0;

  BoundResult out;
  const SimplexResult up = solve_lp(prog, /*maximize=*/true);
  if (up.status != SimplexResult::Status::optimal) {
    out.feasible = false;
    out.iterations = up.iterations;
    return out;
  }
  LinearProgram prog_lo = prog;
  prog_lo.c = score_left;
  const SimplexResult lo = solve_lp(prog_lo, /*maximize=*/false);
  if (lo.status != SimplexResult::Status::optimal) {
    out.feasible = false;
    out.iterations = up.iterations + lo.iterations;
    return out;
  }

  out.feasible = true;
  out.upper = up.objective;
  out.lower = std::max(0.0, lo.objective);
  out.active_upper = active_bins(up.x);
  out.active_lower = active_bins(lo.x);
  out.duality_gap = std::max(up.duality_gap, lo.duality_gap);
  out.iterations = up.iterations + lo.iterations;
  return out;
}

BoundResult solve_entropy_bounds(const MicrocanonicalConfig& cfg, int bins, LogBase base) {
  cfg.validate();
  if (cfg.n <= 2) {
    throw InvariantError("bounds assume n > 2, where a single mode can fully decouple");
  }
  const MomentPair mp = microcanonical_invpurity_moments(cfg);
  Discretization disc;
  disc.bins = bins;
  disc.a_min = 1.0;
  disc.a_max = max_inv_purity(cfg.reduced_energy());
  return solve_entropy_bounds({mp.mean_a, mp.mean_a2}, disc, base);
}

}  // namespace gaussens
