// SPDX-License-Identifier: Apache-2.0
#include "core/haar.hpp"

#include <cmath>

namespace gaussens {

namespace {

Eigen::MatrixXcd ginibre(int rows, int cols, RngStream& rng) {
  Eigen::MatrixXcd g(rows, cols);
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i) g(i, j) = rng.complex_normal();
  }
  return g;
}

Eigen::MatrixXcd qr_phase_fixed(const Eigen::MatrixXcd& a, int keep_cols) {
  const Eigen::HouseholderQR<Eigen::MatrixXcd> qr(a);
  Eigen::MatrixXcd q = qr.householderQ() *
                       Eigen::MatrixXcd::Identity(a.rows(), keep_cols);
  const Eigen::MatrixXcd& r = qr.matrixQR();
  for (int j = 0; j < keep_cols; ++j) {
    const std::complex<double> d = r(j, j);
    q.col(j) /= d / std::abs(d);
  }
  return q;
}

}  // namespace

Eigen::MatrixXcd HaarUnitary::complex() const {
  return x + std::complex<double>(0, 1) * y;
}

HaarUnitary sample_haar_unitary(int n, RngStream& rng) {
  if (n < 1) throw InvariantError("mode count must be positive");
  const Eigen::MatrixXcd u = qr_phase_fixed(ginibre(n, n, rng), n);
  return HaarUnitary{u.real(), u.imag()};
}

Eigen::MatrixXcd sample_haar_columns(int n, int m, RngStream& rng) {
  if (n < 1 || m < 1 || m > n) throw InvariantError("need 1 <= m <= n");
  return qr_phase_fixed(ginibre(n, m, rng), m);
}

Eigen::MatrixXd ortho_symplectic(const HaarUnitary& u) {
  const int n = u.n();
  Eigen::MatrixXd o(2 * n, 2 * n);
  o.topLeftCorner(n, n) = u.x;
  o.topRightCorner(n, n) = u.y;
  o.bottomLeftCorner(n, n) = -u.y;
  o.bottomRightCorner(n, n) = u.x;
  return o;
}

double squeezing_from_energy(double e) {
  return std::sqrt(squared_squeezing_from_energy(e));
}

double squared_squeezing_from_energy(double e) {
  if (e < 2.0) throw InvariantError("per-mode energy below the vacuum value 2");
  return 0.5 * (e + std::sqrt(e * e - 4.0));
}

CovarianceMatrix assemble_pure_cm(const Eigen::VectorXd& energies, const Eigen::MatrixXd& o) {
  const int n = static_cast<int>(energies.size());
  if (o.rows() != 2 * n || o.cols() != 2 * n) {
    throw InvariantError("energy vector and transformation dimensions differ");
  }
  Eigen::VectorXd z2(2 * n);
  for (int j = 0; j < n; ++j) {
    z2[j] = squared_squeezing_from_energy(energies[j]);
    z2[j + n] = 1.0 / z2[j];
  }
  return CovarianceMatrix(o.transpose() * z2.asDiagonal() * o);
}

CovarianceMatrix reduced_pure_cm(const Eigen::VectorXd& energies, const Eigen::MatrixXcd& u_cols) {
  const int n = static_cast<int>(energies.size());
  const int m = static_cast<int>(u_cols.cols());
  if (u_cols.rows() != n || m < 1 || m > n) {
    throw InvariantError("column block incompatible with the energy vector");
  }
  Eigen::VectorXd d(n), d_inv(n);
  for (int j = 0; j < n; ++j) {
    d[j] = squared_squeezing_from_energy(energies[j]);
    d_inv[j] = 1.0 / d[j];
  }
  const Eigen::MatrixXd x = u_cols.real();
  const Eigen::MatrixXd y = u_cols.imag();
  const Eigen::MatrixXd xd = d.asDiagonal() * x;
  const Eigen::MatrixXd yd = d.asDiagonal() * y;
  const Eigen::MatrixXd xdi = d_inv.asDiagonal() * x;
  const Eigen::MatrixXd ydi = d_inv.asDiagonal() * y;
  // blocks of O^T Z^2 O restricted to the first m modes
  Eigen::MatrixXd gamma(2 * m, 2 * m);
  gamma.topLeftCorner(m, m) = x.transpose() * xd + y.transpose() * ydi;
  gamma.topRightCorner(m, m) = x.transpose() * yd - y.transpose() * xdi;
  gamma.bottomLeftCorner(m, m) = gamma.topRightCorner(m, m).transpose();
  gamma.bottomRightCorner(m, m) = y.transpose() * yd + x.transpose() * xdi;
  return CovarianceMatrix(std::move(gamma));
}

double ortho_symplectic_defect(const Eigen::MatrixXd& o) {
  const int n = static_cast<int>(o.rows()) / 2;
  const Eigen::MatrixXd omega = symplectic_form(n);
  const double ortho =
      (o.transpose() * o - Eigen::MatrixXd::Identity(o.rows(), o.rows())).cwiseAbs().maxCoeff();
  const double symp = (o.transpose() * omega * o - omega).cwiseAbs().maxCoeff();
  return std::max(ortho, symp);
}

}  // namespace gaussens
