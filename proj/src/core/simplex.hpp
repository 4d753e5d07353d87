// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <vector>

namespace gaussens {

/// Row relation in a linear program.
enum class Relation { le, eq, ge };

/// Dense linear program: optimise c'x subject to A x (rel) b, x >= 0.
/// Intended for problems with few rows and many columns; the working set of
/// the solver is one basis matrix of size rows x rows.
struct LinearProgram {
  Eigen::MatrixXd a;          // rows x cols
  Eigen::VectorXd b;          // rows
  Eigen::VectorXd c;          // cols
  std::vector<Relation> rel;  // one per row
};

struct SimplexResult {
  enum class Status { optimal, infeasible, unbounded, iteration_limit };

  Status status = Status::infeasible;
  double objective = 0.0;
  Eigen::VectorXd x;              // primal solution (original columns only)
  Eigen::VectorXd dual;           // row multipliers from the final basis
  double duality_gap = 0.0;       // |c'x - y'b| at the reported solution
  double dual_infeasibility = 0.0;  // max positive reduced cost at optimum
  int iterations = 0;
};

/// Two-phase revised simplex. `maximize` false solves the minimisation by
/// negating the objective. Pricing is most-negative-first, switching to
/// Bland's rule permanently once the objective stalls, which precludes
/// cycling.
SimplexResult solve_lp(const LinearProgram& prog, bool maximize);

}  // namespace gaussens
