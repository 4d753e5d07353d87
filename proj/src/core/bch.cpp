// SPDX-License-Identifier: Apache-2.0
#include "core/bch.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include "core/symplectic.hpp"

namespace gaussens {

namespace {

void check_symmetric_even(const Eigen::MatrixXd& a) {
  if (a.rows() != a.cols() || a.rows() < 2 || a.rows() % 2 != 0) {
    throw InvariantError("matrix must be square with even dimension");
  }
  if ((a - a.transpose()).cwiseAbs().maxCoeff() > 1e-9 * std::max(1.0, a.cwiseAbs().maxCoeff())) {
    throw InvariantError("matrix must be symmetric");
  }
}

}  // namespace

Eigen::MatrixXd bch_displacement_matrix(const Eigen::MatrixXd& a) {
  check_symmetric_even(a);
  const int n = static_cast<int>(a.rows()) / 2;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd s = svd.singularValues();
  if (s[s.size() - 1] <= 0.0 || s[0] / s[s.size() - 1] > 1e12) {
    throw SingularMatrixError(
        "matrix is singular or near-singular; use bch_displacement_quadrature");
  }
  const Eigen::MatrixXd omega = symplectic_form(n);
  const Eigen::MatrixXd exp_a_omega = (4.0 * a * omega).exp();
  const Eigen::MatrixXd a_inv = svd.solve(Eigen::MatrixXd::Identity(2 * n, 2 * n));
  return 0.25 * omega * a_inv * (Eigen::MatrixXd::Identity(2 * n, 2 * n) - exp_a_omega);
}

Eigen::MatrixXd bch_displacement_quadrature(const Eigen::MatrixXd& a, int panels) {
  check_symmetric_even(a);
  if (panels < 2) throw InvariantError("quadrature needs at least 2 panels");
  if (panels % 2 != 0) ++panels;  // composite Simpson needs an even count
  const int n = static_cast<int>(a.rows()) / 2;
  const int dim = 2 * n;
  const Eigen::MatrixXd omega = symplectic_form(n);
  const double h = 1.0 / panels;
  // nodes are powers of one step matrix: f(t_k) = step^k with step = e^{4 h A Omega}
  const Eigen::MatrixXd step = (4.0 * h * a * omega).exp();
  Eigen::MatrixXd node = Eigen::MatrixXd::Identity(dim, dim);
  Eigen::MatrixXd acc = node;  // endpoint t = 0, weight 1
  for (int k = 1; k < panels; ++k) {
    node = node * step;
    acc += (k % 2 == 1 ? 4.0 : 2.0) * node;
  }
  node = node * step;  // endpoint t = 1, weight 1
  acc += node;
  return (h / 3.0) * acc;
}

}  // namespace gaussens
