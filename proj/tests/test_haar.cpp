// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <vector>

#include "core/haar.hpp"
#include "core/measures.hpp"
#include "core/rng.hpp"
#include "core/stats.hpp"
#include "oracles.hpp"

using namespace gaussens;

TEST_CASE("sampled unitaries are unitary") {
  RngStream rng(31, 0);
  for (int n : {1, 2, 5, 12}) {
    const HaarUnitary u = sample_haar_unitary(n, rng);
    const Eigen::MatrixXcd uc = u.complex();
    CHECK((uc.adjoint() * uc - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff() < 1e-9);
    const Eigen::MatrixXd o = ortho_symplectic(u);
    CHECK(ortho_symplectic_defect(o) < 1e-9);
  }
}

TEST_CASE("isomorphism special points and homomorphism") {
  const int n = 3;
  HaarUnitary id{Eigen::MatrixXd::Identity(n, n), Eigen::MatrixXd::Zero(n, n)};
  CHECK((ortho_symplectic(id) - Eigen::MatrixXd::Identity(2 * n, 2 * n)).cwiseAbs().maxCoeff() ==
        0.0);

  // U = iI maps to the symplectic form itself
  HaarUnitary i_id{Eigen::MatrixXd::Zero(n, n), Eigen::MatrixXd::Identity(n, n)};
  CHECK((ortho_symplectic(i_id) - symplectic_form(n)).cwiseAbs().maxCoeff() == 0.0);

  RngStream rng(32, 0);
  for (int trial = 0; trial < 5; ++trial) {
    const HaarUnitary u = sample_haar_unitary(n, rng);
    const HaarUnitary v = sample_haar_unitary(n, rng);
    const Eigen::MatrixXcd uv = u.complex() * v.complex();
    HaarUnitary prod{uv.real(), uv.imag()};
    CHECK((ortho_symplectic(prod) - ortho_symplectic(u) * ortho_symplectic(v))
              .cwiseAbs()
              .maxCoeff() < 1e-9);
  }
}

TEST_CASE("first Haar moment of |U_11|^2") {
  const int n = 4, draws = 100000;
  RngStream rng(33, 0);
  MomentAccumulator acc;
  for (int i = 0; i < draws; ++i) {
    const Eigen::MatrixXcd cols = sample_haar_columns(n, 1, rng);
    acc.add(std::norm(cols(0, 0)));
  }
  CHECK(std::abs(acc.mean - 1.0 / n) < 3.0 * acc.std_error());
}

TEST_CASE("left invariance: U and VU have the same marginals") {
  const int n = 3, draws = 10000;
  RngStream rng(34, 0);
  const Eigen::MatrixXcd v = sample_haar_unitary(n, rng).complex();
  std::vector<double> plain, translated;
  plain.reserve(draws);
  translated.reserve(draws);
  for (int i = 0; i < draws; ++i) {
    const Eigen::MatrixXcd u = sample_haar_unitary(n, rng).complex();
    plain.push_back(u(0, 0).real());
    translated.push_back((v * u)(0, 0).real());
  }
  CHECK(ks_test(plain, translated).p_value > 0.001);
}

TEST_CASE("agrees with the Hermitian-eigenvector sampling route") {
  const int n = 3, draws = 10000;
  RngStream rng(35, 0);
  std::vector<double> qr_route, eig_route;
  for (int i = 0; i < draws; ++i) {
    qr_route.push_back(std::norm(sample_haar_columns(n, 1, rng)(0, 0)));
    eig_route.push_back(std::norm(oracles::gue_unitary(n, rng)(0, 0)));
  }
  CHECK(ks_test(qr_route, eig_route).p_value > 0.001);
}

TEST_CASE("squeezing from energy") {
  CHECK(squeezing_from_energy(2.0) == 1.0);
  CHECK(squeezing_from_energy(17.0 / 4.0) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK_THROWS_AS(squeezing_from_energy(1.99), InvariantError);
  RngStream rng(36, 0);
  for (int i = 0; i < 50; ++i) {
    const double e = 2.0 + 40.0 * rng.uniform();
    const double z = squeezing_from_energy(e);
    CHECK(z >= 1.0);
    CHECK(std::abs(z * z + 1.0 / (z * z) - e) < 1e-10);
  }
}

TEST_CASE("assembled states are pure with the drawn energy") {
  RngStream rng(37, 0);

  // vacuum energies give the identity regardless of the transformation
  const int n = 3;
  const Eigen::MatrixXd o = ortho_symplectic(sample_haar_unitary(n, rng));
  const CovarianceMatrix vac = assemble_pure_cm(Eigen::VectorXd::Constant(n, 2.0), o);
  CHECK((vac.matrix() - Eigen::MatrixXd::Identity(2 * n, 2 * n)).cwiseAbs().maxCoeff() < 1e-12);

  Eigen::VectorXd e1(1);
  e1 << 17.0 / 4.0;
  const CovarianceMatrix sq = assemble_pure_cm(e1, Eigen::MatrixXd::Identity(2, 2));
  CHECK(sq.matrix()(0, 0) == doctest::Approx(4.0).epsilon(1e-14));
  CHECK(sq.matrix()(1, 1) == doctest::Approx(0.25).epsilon(1e-14));

  for (int trial = 0; trial < 10; ++trial) {
    const int nn = 2 + trial % 4;
    Eigen::VectorXd e(nn);
    for (int j = 0; j < nn; ++j) e[j] = 2.0 + 10.0 * rng.uniform();
    const Eigen::MatrixXd oo = ortho_symplectic(sample_haar_unitary(nn, rng));
    const CovarianceMatrix sigma = assemble_pure_cm(e, oo);
    CHECK(std::abs(purity(sigma) - 1.0) <= 1e-6);
    CHECK(std::abs(energy(sigma) - e.sum()) < 1e-10 * e.sum());
    const Eigen::VectorXd nu = symplectic_eigenvalues(sigma);
    CHECK((nu.array() - 1.0).abs().maxCoeff() < 1e-7);
  }

  Eigen::VectorXd wrong(2);
  wrong << 3.0, 3.0;
  CHECK_THROWS_AS(assemble_pure_cm(wrong, Eigen::MatrixXd::Identity(2, 2)), InvariantError);
}

TEST_CASE("column slice matches the full unitary") {
  const int n = 7, m = 3;
  RngStream r1(38, 5), r2(38, 5);
  const Eigen::MatrixXcd cols = sample_haar_columns(n, m, r1);
  const Eigen::MatrixXcd full = sample_haar_unitary(n, r2).complex();
  CHECK((cols - full.leftCols(m)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("reduced covariance from columns equals reduce of the assembled state") {
  const int n = 6, m = 2;
  RngStream r1(39, 1), r2(39, 1);
  MicrocanonicalConfig mc{n, 40.0};
  const Eigen::VectorXd e = sample_mc_energies(mc, r1);
  const Eigen::MatrixXcd cols = sample_haar_columns(n, m, r1);
  const CovarianceMatrix direct = reduced_pure_cm(e, cols);

  const Eigen::VectorXd e2 = sample_mc_energies(mc, r2);
  const HaarUnitary u = sample_haar_unitary(n, r2);
  const CovarianceMatrix full = assemble_pure_cm(e2, ortho_symplectic(u));
  const CovarianceMatrix red = reduce(full, {0, 1});
  CHECK((direct.matrix() - red.matrix()).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("reduced entropy statistics do not depend on which mode is kept") {
  const int n = 4, draws = 10000;
  const double total_energy = 24.0;
  MomentAccumulator first, last;
  for (int i = 0; i < draws; ++i) {
    RngStream rng(40, static_cast<std::uint64_t>(i));
    const Eigen::VectorXd e = sample_mc_energies({n, total_energy}, rng);
    const HaarUnitary u = sample_haar_unitary(n, rng);
    const CovarianceMatrix sigma = assemble_pure_cm(e, ortho_symplectic(u));
    first.add(von_neumann_entropy(reduce(sigma, {0})));
    last.add(von_neumann_entropy(reduce(sigma, {n - 1})));
  }
  const double se = std::hypot(first.std_error(), last.std_error());
  CHECK(std::abs(first.mean - last.mean) < 3.0 * se);
}
