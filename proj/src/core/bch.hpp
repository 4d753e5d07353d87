// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>

#include "core/errors.hpp"

namespace gaussens {

/// M = (1/4) Omega A^{-1} (I - exp(4 A Omega)) for symmetric invertible A.
///
/// This is the closed form of the integral int_0^1 exp(4 t A Omega) dt, the
/// matrix coupling the linear to the quadratic part when a mixed quadratic
/// exponent is split into a quadratic factor times a displacement. A must be
/// 2n x 2n, symmetric, with condition number below 1e12; otherwise
/// SingularMatrixError is thrown and bch_displacement_quadrature applies.
Eigen::MatrixXd bch_displacement_matrix(const Eigen::MatrixXd& a);

/// Same matrix by composite-Simpson quadrature of exp(4 t A Omega) on [0, 1].
/// Valid for any symmetric A, including singular ones (A = 0 gives I).
Eigen::MatrixXd bch_displacement_quadrature(const Eigen::MatrixXd& a, int panels = 10000);

}  // namespace gaussens
