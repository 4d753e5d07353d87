// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>

#include "core/rng.hpp"
#include "core/symplectic.hpp"

namespace gaussens {

/// Unitary U = X + iY held by its real and imaginary parts.
struct HaarUnitary {
  Eigen::MatrixXd x;
  Eigen::MatrixXd y;

  int n() const { return static_cast<int>(x.rows()); }
  Eigen::MatrixXcd complex() const;
};

/// Haar-distributed unitary: complex Ginibre matrix followed by QR, with each
/// column of Q divided by the phase of the corresponding diagonal entry of R
/// (plain QR alone is not Haar). Deterministic given the stream state.
HaarUnitary sample_haar_unitary(int n, RngStream& rng);

/// First m columns of the unitary that sample_haar_unitary would produce from
/// the same stream: the Ginibre entries are drawn column-major, and a
/// Householder QR of the n x m slice yields exactly those columns.
Eigen::MatrixXcd sample_haar_columns(int n, int m, RngStream& rng);

/// The orthogonal symplectic [[X, Y], [-Y, X]]; a group isomorphism from the
/// n x n unitaries onto the 2n x 2n orthogonal symplectics.
Eigen::MatrixXd ortho_symplectic(const HaarUnitary& u);

/// Positive root z >= 1 of z^2 + z^{-2} = e for a per-mode energy e >= 2.
double squeezing_from_energy(double e);

/// z^2 for a per-mode energy, computed directly (no intermediate square root).
double squared_squeezing_from_energy(double e);

/// sigma = O^T Z^2 O with Z^2 = diag(z_1^2..z_n^2, z_1^-2..z_n^-2) assembled
/// from the energies. O must be 2n x 2n orthogonal symplectic; the result is
/// the covariance matrix of a pure state with tr(sigma) = sum of energies.
/// One compact factor suffices: writing the state as S^T S with S = O' Z O,
/// the leftmost factor drops out of the product, so O' is never sampled.
CovarianceMatrix assemble_pure_cm(const Eigen::VectorXd& energies, const Eigen::MatrixXd& o);

/// Reduced m-mode covariance matrix of the state assemble_pure_cm would give,
/// computed from the first m columns of U alone. Used by the ensemble driver;
/// equal to reduce(assemble_pure_cm(...), {0..m-1}) up to roundoff.
CovarianceMatrix reduced_pure_cm(const Eigen::VectorXd& energies, const Eigen::MatrixXcd& u_cols);

/// Orthogonality and symplecticity defects of a candidate O (max-norm).
double ortho_symplectic_defect(const Eigen::MatrixXd& o);

}  // namespace gaussens
