#include <doctest.h>

#include <algorithm>
#include <random>

#include "canderson/errors.hpp"
#include "canderson/hamiltonian.hpp"
#include "canderson/spectral.hpp"
#include "oracles.hpp"
#include "random_states.hpp"

using namespace canderson;

TEST_CASE("identity and Pauli-x") {
  const auto id = eigendecompose(Eigen::MatrixXd(Eigen::MatrixXd::Identity(4, 4)));
  for (int k = 0; k < 4; ++k) CHECK(id.eigenvalues(k) == doctest::Approx(1.0));

  Eigen::MatrixXd x(2, 2);
  x << 0, 1, 1, 0;
  const auto s = eigendecompose(x);
  CHECK(s.eigenvalues(0) == doctest::Approx(-1.0));
  CHECK(s.eigenvalues(1) == doctest::Approx(1.0));
  const double r = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(std::abs(s.eigenvectors(0, 0)) - r) < 1e-14);
  CHECK(std::abs(s.eigenvectors(0, 0) + s.eigenvectors(1, 0)) < 1e-14);
  CHECK(std::abs(s.eigenvectors(0, 1) - s.eigenvectors(1, 1)) < 1e-14);
}

TEST_CASE("random Hermitian: trace, residuals and orthonormality") {
  std::mt19937_64 rng(3);
  const auto h = testing_support::random_hermitian(50, rng);
  const auto s = eigendecompose(h);
  CHECK(std::abs(s.eigenvalues.sum() - h.trace().real()) < 1e-8 * 50);
  CHECK(max_residual(h, s) < 1e-10);
  const Eigen::MatrixXcd gram = s.eigenvectors.adjoint() * s.eigenvectors;
  CHECK((gram - Eigen::MatrixXcd::Identity(50, 50)).cwiseAbs().maxCoeff() < 1e-12);
  for (int k = 1; k < 50; ++k) CHECK(s.eigenvalues(k) >= s.eigenvalues(k - 1));

  const auto ref = oracle::hermitian_eigenvalues(h);
  CHECK((s.eigenvalues - ref).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("real path agrees with the Jacobi oracle") {
  std::mt19937_64 rng(5);
  const Eigen::MatrixXd h = testing_support::random_hermitian(40, rng).real();
  const auto s = eigendecompose(h);
  const auto [w, v] = oracle::jacobi_eigen(h);
  CHECK((s.eigenvalues - w).cwiseAbs().maxCoeff() < 1e-10);
  CHECK(max_residual(h.cast<cplx>(), s) < 1e-10);
}

TEST_CASE("spectrum is invariant under basis permutation") {
  std::mt19937_64 rng(9);
  const auto h = testing_support::random_hermitian(30, rng);
  Eigen::PermutationMatrix<Eigen::Dynamic> p(30);
  p.setIdentity();
  std::shuffle(p.indices().data(), p.indices().data() + 30, rng);
  const Eigen::MatrixXcd hp = p * h * p.transpose();
  CHECK((eigendecompose(h).eigenvalues - eigendecompose(hp).eigenvalues).cwiseAbs().maxCoeff() < 1e-8);
}

TEST_CASE("clean chain closed form") {
  ModelConfig c;
  c.model = Model::anderson1d;
  c.disorder = 0.0;
  c.set_sites(80);
  const auto s = eigendecompose(build_hamiltonian(c, sample_model_disorder(c, 1)));
  const auto e = oracle::clean_chain_energies(80, -1.0);
  for (int k = 0; k < 80; ++k) CHECK(std::abs(s.eigenvalues(k) - e[k]) < 1e-8);
}

TEST_CASE("operator overload picks the complex path for complex entries") {
  OperatorBuilder b(2, 1);
  b.add_pair(0, 1, {0.0, 1.0});
  const auto s = eigendecompose(std::move(b).build());
  CHECK(s.eigenvalues(0) == doctest::Approx(-1.0));
  CHECK(s.eigenvalues(1) == doctest::Approx(1.0));
}

TEST_CASE("non-Hermitian input is rejected") {
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(3, 3);
  a(0, 1) = 1.0;
  CHECK_THROWS_AS(eigendecompose(a), InvalidInput);
  HermitianOperator h(2, 1, {{0, 1, {1.0, 0.0}}});
  CHECK_THROWS_AS(eigendecompose(h), InvalidInput);
  Eigen::MatrixXd r = Eigen::MatrixXd::Zero(2, 2);
  r(1, 0) = 1e-9;
  CHECK_THROWS_AS(eigendecompose(r), InvalidInput);
}
