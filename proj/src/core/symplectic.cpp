// SPDX-License-Identifier: Apache-2.0
#include "core/symplectic.hpp"

#include <algorithm>
#include <cmath>

namespace gaussens {

namespace {

long double binom(int n, int k) {
  if (k < 0 || k > n) return 0.0L;
  k = std::min(k, n - k);
  long double c = 1.0L;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

}  // namespace

CovarianceMatrix::CovarianceMatrix(Eigen::MatrixXd m) {
  if (m.rows() != m.cols() || m.rows() < 2 || m.rows() % 2 != 0) {
    throw InvariantError("covariance matrix must be square with even dimension 2n >= 2");
  }
  n_ = static_cast<int>(m.rows()) / 2;
  const double asym = (m - m.transpose()).cwiseAbs().maxCoeff();
  if (asym > kSymmetryTol) {
    throw InvariantError("covariance matrix asymmetric: max |s_ij - s_ji| = " +
                         std::to_string(asym));
  }
  mat_ = 0.5 * (m + m.transpose());
  Eigen::LLT<Eigen::MatrixXd> llt(mat_);
  if (llt.info() != Eigen::Success) {
    throw InvariantError("covariance matrix not positive definite");
  }
}

Eigen::MatrixXd symplectic_form(int n) {
  if (n < 1) throw InvariantError("mode count must be positive");
  Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  omega.topRightCorner(n, n) = Eigen::MatrixXd::Identity(n, n);
  omega.bottomLeftCorner(n, n) = -Eigen::MatrixXd::Identity(n, n);
  return omega;
}

Eigen::VectorXd symplectic_eigenvalues(const CovarianceMatrix& sigma) {
  const int n = sigma.modes();
  Eigen::LLT<Eigen::MatrixXd> llt(sigma.matrix());
  if (llt.info() != Eigen::Success) {
    throw InvariantError("covariance matrix not positive definite");
  }
  const Eigen::MatrixXd l = llt.matrixL();
  // With A = L^T Omega L, the symmetric matrix A^T A is similar to
  // Omega^T Sigma Omega Sigma and carries the eigenvalues {nu_j^2}, each
  // twice. The symmetric solver is used deliberately: BDCSVD(A) miscomputes
  // clustered singular values on some inputs (Eigen 3.4.0).
  Eigen::MatrixXd omega_l(2 * n, 2 * n);
  omega_l.topRows(n) = l.bottomRows(n);
  omega_l.bottomRows(n) = -l.topRows(n);
  const Eigen::MatrixXd a = l.transpose() * omega_l;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a.transpose() * a, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& nu_sq = es.eigenvalues();  // ascending, pairs
  Eigen::VectorXd nu(n);
  for (int j = 0; j < n; ++j) {
    const double pair = 0.5 * (nu_sq[2 * j] + nu_sq[2 * j + 1]);
    // nu and nu^2 agree to first order near the boundary at one
    double value = pair > 0.0 ? std::sqrt(pair) : 0.0;
    if (value < 1.0) {
      if (value < 1.0 - kUncertaintyTol) {
        throw InvariantError("symplectic eigenvalue " + std::to_string(value) +
                             " violates the uncertainty relation");
      }
      value = 1.0;
    }
    nu[n - 1 - j] = value;  // report descending
  }
  return nu;
}

double purity(const CovarianceMatrix& sigma) {
  Eigen::LLT<Eigen::MatrixXd> llt(sigma.matrix());
  if (llt.info() != Eigen::Success) {
    throw InvariantError("covariance matrix not positive definite");
  }
  // purity = det(Sigma)^{-1/2} = exp(-sum log L_ii)
  const Eigen::MatrixXd l = llt.matrixL();
  double log_det_half = 0.0;
  for (int i = 0; i < l.rows(); ++i) log_det_half += std::log(l(i, i));
  double mu = std::exp(-log_det_half);
  if (mu > 1.0) {
    if (mu > 1.0 + kPurityTol) {
      throw InvariantError("det Sigma < 1: purity " + std::to_string(mu) + " is unphysical");
    }
    mu = 1.0;
  }
  return mu;
}

double entropic_h(double x, LogBase base) {
  if (x < 1.0) throw InvariantError("entropic_h requires x >= 1");
  if (x == 1.0) return 0.0;
  const double d = x - 1.0;
  const double t = 0.5 * d;        // (x-1)/2
  const double u = 0.5 * (x + 1);  // (x+1)/2
  double h;
  if (d < 1e-8) {
    // near x = 1 evaluate log(u) as log1p(d/2); the t*log(t) term is the
    // leading one and vanishes continuously (no 0*log 0)
    h = u * std::log1p(0.5 * d) - t * std::log(t);
  } else {
    h = u * std::log(u) - t * std::log(t);
  }
  return base == LogBase::base2 ? h / M_LN2 : h;
}

double von_neumann_entropy(const CovarianceMatrix& gamma, LogBase base) {
  const Eigen::VectorXd nu = symplectic_eigenvalues(gamma);
  double s = 0.0;
  for (int j = 0; j < nu.size(); ++j) s += entropic_h(nu[j], base);
  return s;
}

CovarianceMatrix reduce(const CovarianceMatrix& sigma, const std::vector<int>& modes) {
  const int n = sigma.modes();
  const int m = static_cast<int>(modes.size());
  if (m == 0) throw InvariantError("mode subset must be non-empty");
  std::vector<bool> seen(n, false);
  for (int mode : modes) {
    if (mode < 0 || mode >= n) throw InvariantError("mode index out of range");
    if (seen[mode]) throw InvariantError("mode subset has repeated indices");
    seen[mode] = true;
  }
  Eigen::MatrixXd out(2 * m, 2 * m);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      const int i = modes[a], j = modes[b];
      out(a, b) = sigma.matrix()(i, j);
      out(a, b + m) = sigma.matrix()(i, j + n);
      out(a + m, b) = sigma.matrix()(i + n, j);
      out(a + m, b + m) = sigma.matrix()(i + n, j + n);
    }
  }
  return CovarianceMatrix(std::move(out));
}

double energy(const CovarianceMatrix& sigma) { return sigma.matrix().trace(); }

Eigen::VectorXd elementary_symmetric(const Eigen::VectorXd& values) {
  const int m = static_cast<int>(values.size());
  Eigen::VectorXd e = Eigen::VectorXd::Zero(m + 1);
  e[0] = 1.0;
  for (int k = 0; k < m; ++k) {
    for (int d = std::min(k + 1, m); d >= 1; --d) e[d] += values[k] * e[d - 1];
  }
  return e.tail(m);
}

Eigen::VectorXd symplectic_invariants(const CovarianceMatrix& gamma) {
  const Eigen::VectorXd nu = symplectic_eigenvalues(gamma);
  return elementary_symmetric(nu.array().square().matrix());
}

double entropy_from_invariants(const Eigen::VectorXd& delta, LogBase base) {
  const int m = static_cast<int>(delta.size());
  if (m == 0) throw InvariantError("invariant vector must be non-empty");
  // The squared eigenvalues are the roots of
  //   p(x) = x^m - D1 x^{m-1} + ... + (-1)^m Dm.
  // Work with q(y) = p(1 + y): clusters at the vacuum become root clusters at
  // zero, where the companion matrix is exact instead of eps^(1/m)-fuzzy.
  std::vector<long double> coeff(m + 1);  // of y^k
  for (int k = 0; k <= m; ++k) {
    long double b = 0.0L;
    for (int d = 0; d + k <= m; ++d) {
      const long double c_d = (d == 0) ? 1.0L : (d % 2 == 1 ? -1.0L : 1.0L) * delta[d - 1];
      b += c_d * binom(m - d, k);
    }
    coeff[k] = b;
  }
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(m, m);
  for (int i = 1; i < m; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < m; ++i) companion(i, m - 1) = static_cast<double>(-coeff[i]);
  Eigen::EigenSolver<Eigen::MatrixXd> es(companion);

  double entropy = 0.0;
  for (int j = 0; j < m; ++j) {
    const std::complex<double> y = es.eigenvalues()[j];
    // slack for root-cluster conditioning of repeated eigenvalues on top of
    // the physical window below one
    const double tol = std::max(kUncertaintyTol, 1e-4 * (1.0 + std::abs(y)));
    if (std::abs(y.imag()) > tol) {
      throw InvariantError("inconsistent invariants: complex squared eigenvalue");
    }
    if (y.real() < -tol) {
      throw InvariantError("inconsistent invariants: squared eigenvalue below one");
    }
    const double nu_sq = 1.0 + std::max(y.real(), 0.0);
    entropy += entropic_h(std::sqrt(nu_sq), base);
  }
  return entropy;
}

}  // namespace gaussens
