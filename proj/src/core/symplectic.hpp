// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <vector>

#include "core/errors.hpp"

namespace gaussens {

/// Logarithm base used for all entropies except where a unit says otherwise.
enum class LogBase { base2, natural };

inline const char* log_base_name(LogBase b) { return b == LogBase::base2 ? "2" : "e"; }

/// Tolerances shared by the covariance-matrix invariants.
inline constexpr double kSymmetryTol = 1e-9;     // max |s_ij - s_ji|
inline constexpr double kUncertaintyTol = 1e-7;  // slack below nu = 1
inline constexpr double kPurityTol = 1e-6;       // slack above purity 1

/// Second-moment matrix of an n-mode Gaussian state.
///
/// Stored as a dense 2n x 2n matrix in xxpp ordering (x_1..x_n, p_1..p_n).
/// Construction enforces symmetry (to kSymmetryTol, then symmetrised exactly)
/// and positive definiteness; the uncertainty relation on the symplectic
/// spectrum is checked wherever the spectrum is computed.
class CovarianceMatrix {
 public:
  explicit CovarianceMatrix(Eigen::MatrixXd m);

  int modes() const { return n_; }
  const Eigen::MatrixXd& matrix() const { return mat_; }

 private:
  Eigen::MatrixXd mat_;
  int n_;
};

/// The 2n x 2n block matrix [[0, I], [-I, 0]].
Eigen::MatrixXd symplectic_form(int n);

/// Symplectic spectrum of a covariance matrix, sorted descending.
///
/// The values nu_j are the moduli of the (purely imaginary) eigenvalues of
/// Omega*Sigma. Computed through a symmetric route: with Sigma = L L^T, the
/// nu_j are the singular values of L^T Omega L (each one twice); no general
/// nonsymmetric eigensolver is involved. Values in [1 - kUncertaintyTol, 1)
/// are clamped to 1; values below that window throw InvariantError.
Eigen::VectorXd symplectic_eigenvalues(const CovarianceMatrix& sigma);

/// 1/sqrt(det Sigma), in (0, 1]. Throws if det Sigma < 1 beyond kPurityTol.
double purity(const CovarianceMatrix& sigma);

/// Entropy kernel h(x) = ((x+1)/2) log((x+1)/2) - ((x-1)/2) log((x-1)/2),
/// with h(1) = 0. Requires x >= 1.
double entropic_h(double x, LogBase base = LogBase::base2);

/// Sum of entropic_h over the symplectic spectrum.
double von_neumann_entropy(const CovarianceMatrix& gamma, LogBase base = LogBase::base2);

/// Principal submatrix on the given modes (0-based), reindexed to xxpp.
CovarianceMatrix reduce(const CovarianceMatrix& sigma, const std::vector<int>& modes);

/// tr(Sigma); first moments are fixed to zero throughout this library.
double energy(const CovarianceMatrix& sigma);

/// Delta_d, d = 1..m: the elementary symmetric polynomials of the squared
/// symplectic eigenvalues. Equal to the even-order characteristic-polynomial
/// coefficients of Omega*gamma.
Eigen::VectorXd symplectic_invariants(const CovarianceMatrix& gamma);

/// Elementary symmetric polynomials e_1..e_m of the given values.
Eigen::VectorXd elementary_symmetric(const Eigen::VectorXd& values);

/// Entropy recovered from the invariant vector alone.
///
/// The squared symplectic eigenvalues are the roots of
///   x^m - Delta_1 x^{m-1} + Delta_2 x^{m-2} - ... + (-1)^m Delta_m;
/// complex roots or roots below 1 - kUncertaintyTol beyond tolerance throw
/// InvariantError ("inconsistent invariants").
double entropy_from_invariants(const Eigen::VectorXd& delta, LogBase base = LogBase::base2);

}  // namespace gaussens
