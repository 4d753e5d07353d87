// SPDX-License-Identifier: Apache-2.0
#include "core/simplex.hpp"

#include <cmath>
#include <limits>

#include "core/errors.hpp"

namespace gaussens {

namespace {

constexpr double kPivotTol = 1e-10;
constexpr double kCostTol = 1e-9;
constexpr int kStallLimit = 60;

// Equality-form tableau data: columns = original | slack/surplus | artificial.
struct Standardized {
  Eigen::MatrixXd a;
  Eigen::VectorXd b;
  int n_orig = 0;
  int n_slack = 0;
};

Standardized standardize(const LinearProgram& prog) {
  const int rows = static_cast<int>(prog.b.size());
  const int n = static_cast<int>(prog.c.size());
  int n_slack = 0;
  for (Relation r : prog.rel) {
    if (r != Relation::eq) ++n_slack;
  }
  Standardized s;
  s.n_orig = n;
  s.n_slack = n_slack;
  s.a = Eigen::MatrixXd::Zero(rows, n + n_slack + rows);
  s.a.leftCols(n) = prog.a;
  s.b = prog.b;
  int slack = n;
  for (int i = 0; i < rows; ++i) {
    if (prog.rel[i] == Relation::le) {
      s.a(i, slack++) = 1.0;
    } else if (prog.rel[i] == Relation::ge) {
      s.a(i, slack++) = -1.0;
    }
  }
  // flip rows so b >= 0, then the artificial basis is feasible
  for (int i = 0; i < rows; ++i) {
    if (s.b[i] < 0.0) {
      s.a.row(i) *= -1.0;
      s.b[i] *= -1.0;
    }
    s.a(i, n + n_slack + i) = 1.0;
  }
  return s;
}

class RevisedSimplex {
 public:
  RevisedSimplex(const Eigen::MatrixXd& a, const Eigen::VectorXd& b)
      : a_(a), b_(b), rows_(static_cast<int>(b.size())) {}

  // Runs phases with the given objective over all columns; `allowed` columns
  // beyond this size cannot enter the basis.
  SimplexResult::Status iterate(const Eigen::VectorXd& cost, int enterable_cols, int max_iter,
                                int& total_iters) {
    double last_objective = -std::numeric_limits<double>::infinity();
    int stall = 0;
    bool bland = false;
    for (int it = 0; it < max_iter; ++it, ++total_iters) {
      factorize();
      const Eigen::VectorXd xb = lu_.solve(b_);
      const Eigen::VectorXd cb = select(cost, basis_);
      const Eigen::VectorXd y = lu_.transpose().solve(cb);

      // pricing
      int entering = -1;
      double best = kCostTol;
      for (int j = 0; j < enterable_cols; ++j) {
        if (in_basis_[j]) continue;
        const double reduced = cost[j] - y.dot(a_.col(j));
        if (reduced > kCostTol) {
          if (bland) {
            entering = j;
            break;
          }
          if (reduced > best) {
            best = reduced;
            entering = j;
          }
        }
      }
      if (entering < 0) return SimplexResult::Status::optimal;

      const Eigen::VectorXd d = lu_.solve(a_.col(entering));
      int leaving = -1;
      double best_ratio = std::numeric_limits<double>::infinity();
      for (int i = 0; i < rows_; ++i) {
        if (d[i] > kPivotTol) {
          const double ratio = std::max(xb[i], 0.0) / d[i];
          if (ratio < best_ratio - 1e-12 ||
              (ratio < best_ratio + 1e-12 &&
               (leaving < 0 || basis_[i] < basis_[leaving]))) {
            best_ratio = ratio;
            leaving = i;
          }
        }
      }
      if (leaving < 0) return SimplexResult::Status::unbounded;

      in_basis_[basis_[leaving]] = false;
      in_basis_[entering] = true;
      basis_[leaving] = entering;

      const double objective = cb.dot(xb);
      if (objective <= last_objective + 1e-13) {
        if (++stall >= kStallLimit) bland = true;
      } else {
        stall = 0;
        last_objective = objective;
      }
    }
    return SimplexResult::Status::iteration_limit;
  }

  std::vector<int> basis_;
  std::vector<bool> in_basis_;

  // Degenerate pivots that replace parked artificials with real columns, so
  // phase 2 cannot push an artificial positive again. Rows whose artificial
  // cannot be replaced are redundant and keep it at zero.
  void drive_out(int n_real) {
    factorize();
    for (int r = 0; r < rows_; ++r) {
      if (basis_[r] < n_real) continue;
      for (int j = 0; j < n_real; ++j) {
        if (in_basis_[j]) continue;
        const Eigen::VectorXd d = lu_.solve(a_.col(j));
        if (std::abs(d[r]) > 1e-7) {
          in_basis_[basis_[r]] = false;
          in_basis_[j] = true;
          basis_[r] = j;
          factorize();
          break;
        }
      }
    }
  }

  Eigen::VectorXd basic_solution() {
    factorize();
    return lu_.solve(b_);
  }

  Eigen::VectorXd duals(const Eigen::VectorXd& cost) {
    factorize();
    return lu_.transpose().solve(select(cost, basis_));
  }

 private:
  void factorize() {
    Eigen::MatrixXd bmat(rows_, rows_);
    for (int i = 0; i < rows_; ++i) bmat.col(i) = a_.col(basis_[i]);
    lu_.compute(bmat);
  }

  static Eigen::VectorXd select(const Eigen::VectorXd& v, const std::vector<int>& idx) {
    Eigen::VectorXd out(idx.size());
    for (size_t i = 0; i < idx.size(); ++i) out[i] = v[idx[i]];
    return out;
  }

  const Eigen::MatrixXd& a_;
  const Eigen::VectorXd& b_;
  int rows_;
  Eigen::FullPivLU<Eigen::MatrixXd> lu_;
};

}  // namespace

SimplexResult solve_lp(const LinearProgram& prog, bool maximize) {
  const int rows = static_cast<int>(prog.b.size());
  const int n = static_cast<int>(prog.c.size());
  if (prog.a.rows() != rows || prog.a.cols() != n ||
      static_cast<int>(prog.rel.size()) != rows) {
    throw InvariantError("inconsistent linear program dimensions");
  }

  Standardized s = standardize(prog);
  const int n_real = s.n_orig + s.n_slack;
  const int n_total = n_real + rows;

  RevisedSimplex engine(s.a, s.b);
  engine.basis_.resize(rows);
  engine.in_basis_.assign(n_total, false);
  for (int i = 0; i < rows; ++i) {
    engine.basis_[i] = n_real + i;
    engine.in_basis_[n_real + i] = true;
  }

  SimplexResult result;
  int iters = 0;
  const int max_iter = 50000;

  // phase 1: drive the artificial variables to zero
  Eigen::VectorXd phase1 = Eigen::VectorXd::Zero(n_total);
  phase1.tail(rows).setConstant(-1.0);
  auto status = engine.iterate(phase1, n_total, max_iter, iters);
  if (status != SimplexResult::Status::optimal) {
    result.status = status;
    result.iterations = iters;
    return result;
  }
  {
    const Eigen::VectorXd xb = engine.basic_solution();
    double artificial_mass = 0.0;
    for (int i = 0; i < rows; ++i) {
      if (engine.basis_[i] >= n_real) artificial_mass += std::abs(xb[i]);
    }
    if (artificial_mass > 1e-9) {
      result.status = SimplexResult::Status::infeasible;
      result.iterations = iters;
      return result;
    }
  }
  engine.drive_out(n_real);

  // phase 2 on the real columns; artificials stay out (or parked at zero)
  Eigen::VectorXd cost = Eigen::VectorXd::Zero(n_total);
  if (maximize) {
    cost.head(s.n_orig) = prog.c;
  } else {
    cost.head(s.n_orig) = -prog.c;
  }
  status = engine.iterate(cost, n_real, max_iter, iters);
  result.status = status;
  result.iterations = iters;
  if (status != SimplexResult::Status::optimal) return result;

  const Eigen::VectorXd xb = engine.basic_solution();
  for (int i = 0; i < rows; ++i) {
    // a parked artificial must have stayed at zero through phase 2
    if (engine.basis_[i] >= n_real && std::abs(xb[i]) > 1e-9) {
      result.status = SimplexResult::Status::infeasible;
      return result;
    }
  }
  Eigen::VectorXd x_full = Eigen::VectorXd::Zero(n_total);
  for (int i = 0; i < rows; ++i) x_full[engine.basis_[i]] = xb[i];
  result.x = x_full.head(s.n_orig);

  const Eigen::VectorXd y = engine.duals(cost);
  // duals are reported for the sign convention of `standardize` (rows flipped
  // to b >= 0); recover multipliers for the caller's rows
  result.dual = y;
  for (int i = 0; i < rows; ++i) {
    if (prog.b[i] < 0.0) result.dual[i] *= -1.0;
  }

  const double primal_obj = cost.head(s.n_orig).dot(result.x);
  const double dual_obj = y.dot(s.b);
  result.duality_gap = std::abs(primal_obj - dual_obj);
  double worst = 0.0;
  for (int j = 0; j < n_real; ++j) {
    if (engine.in_basis_[j]) continue;
    worst = std::max(worst, cost[j] - y.dot(s.a.col(j)));
  }
  result.dual_infeasibility = worst;
  result.objective = maximize ? primal_obj : -primal_obj;
  return result;
}

}  // namespace gaussens
