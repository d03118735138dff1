#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "canderson/errors.hpp"
#include "canderson/hamiltonian.hpp"
#include "canderson/metrics.hpp"
#include "canderson/spectral.hpp"
#include "oracles.hpp"
#include "random_states.hpp"

using namespace canderson;

TEST_CASE("product state has unit purity and rho = psi psi^dag") {
  Eigen::VectorXcd site(3), internal(2);
  site << 0.6, cplx(0, 0.8), 0.0;
  internal << cplx(1, 1) / 2.0, cplx(1, -1) / 2.0;
  Eigen::VectorXcd psi(6);
  for (int r = 0; r < 3; ++r)
    for (int n = 0; n < 2; ++n) psi(r * 2 + n) = site(r) * internal(n);
  const BasisLayout layout{3, 2};
  const auto rho = reduced_density_matrix(psi, layout);
  CHECK((rho - site * site.adjoint()).cwiseAbs().maxCoeff() < 1e-15);
  CHECK(purity(rho) == doctest::Approx(1.0));
  CHECK(purity_of_state(psi, layout) == doctest::Approx(1.0));
  CHECK(ipr(rho) == doctest::Approx(0.36 * 0.36 + 0.64 * 0.64));
}

TEST_CASE("maximally entangled state has purity 1/d") {
  for (int d : {2, 3, 5}) {
    const BasisLayout layout{d + 1, d};
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(layout.dimension());
    for (int k = 0; k < d; ++k) psi(k * d + k) = 1.0 / std::sqrt(d);
    CHECK(purity(reduced_density_matrix(psi, layout)) == doctest::Approx(1.0 / d));
    CHECK(purity_of_state(psi, layout) == doctest::Approx(1.0 / d));
    CHECK(ipr_of_state(psi, layout) == doctest::Approx(1.0 / d));
  }
}

TEST_CASE("single-site and uniform states") {
  const BasisLayout layout{10, 1};
  Eigen::VectorXcd one = Eigen::VectorXcd::Zero(10);
  one(4) = cplx(0, 1);
  CHECK(ipr(reduced_density_matrix(one, layout)) == doctest::Approx(1.0));
  const Eigen::VectorXcd flat = Eigen::VectorXcd::Constant(10, 1.0 / std::sqrt(10.0));
  CHECK(ipr_of_state(flat, layout) == doctest::Approx(0.1));
}

TEST_CASE("clean-chain eigenstates have IPR 3 / (2 (N + 1))") {
  for (int n : {10, 50, 99}) {
    const auto [w, v] = oracle::jacobi_eigen([&] {
      Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
      for (int i = 0; i + 1 < n; ++i) h(i, i + 1) = h(i + 1, i) = -1.0;
      return h;
    }());
    for (int k = 1; k <= n; ++k) {
      if (2 * k == n + 1) continue;  // sin^4 sum differs for the band-centre mode
      const auto mode = oracle::clean_chain_mode(n, k);
      double s4 = 0.0;
      for (double a : mode) s4 += std::pow(a, 4);
      CHECK(s4 == doctest::Approx(3.0 / (2.0 * (n + 1))).epsilon(1e-12));
    }
    for (int k = 0; k < n; ++k) {
      if (2 * (k + 1) == n + 1) continue;
      const Eigen::VectorXcd psi = v.col(k).cast<cplx>();
      CHECK(ipr_of_state(psi, {n, 1}) == doctest::Approx(3.0 / (2.0 * (n + 1))).epsilon(1e-10));
    }
  }
}

TEST_CASE("purity two ways and against the brute-force reduced state") {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    const BasisLayout layout{2 + trial % 4, 2 + trial % 3};
    const auto psi = testing_support::random_state(layout.dimension(), rng);
    const auto rho = reduced_density_matrix(psi, layout);
    const auto ref = oracle::reduced_density(psi, layout.sites, layout.internal_dimension);
    CHECK((rho - ref).cwiseAbs().maxCoeff() < 1e-14);

    double diag = 0.0, off = 0.0;
    for (int i = 0; i < layout.sites; ++i)
      for (int j = 0; j < layout.sites; ++j)
        (i == j ? diag : off) += std::norm(rho(i, j));
    CHECK(std::abs(purity(rho) - oracle::trace_square(rho)) < 1e-12);
    CHECK(std::abs(purity(rho) - (ipr(rho) + off)) < 1e-12);
    CHECK(std::abs(ipr(rho) - diag) < 1e-12);
    CHECK(std::abs(purity_of_state(psi, layout) - purity(rho)) < 1e-12);
    CHECK(std::abs(ipr_of_state(psi, layout) - ipr(rho)) < 1e-12);
    CHECK(std::abs(rho.trace() - 1.0) < 1e-12);

    double joint = 0.0;
    for (int i = 0; i < psi.size(); ++i) joint += std::pow(std::abs(psi(i)), 4);
    CHECK(ipr_joint(psi) == doctest::Approx(joint).epsilon(1e-13));
  }
}

TEST_CASE("metrics ignore global phase and internal-state order") {
  std::mt19937_64 rng(2);
  const BasisLayout layout{5, 3};
  ModelConfig c;
  c.model = Model::oscillator1d;
  c.basis = InternalBasis::oscillator(0.3, {0, 2, 4});
  c.set_sites(5);
  const auto hr = translational_operator(c);
  for (int trial = 0; trial < 10; ++trial) {
    const auto psi = testing_support::random_state(15, rng);
    const auto a = state_metrics(psi, 0.0, layout, hr);
    const Eigen::VectorXcd phased = psi * std::polar(1.0, 0.7 + trial);
    Eigen::VectorXcd permuted(15);
    for (int r = 0; r < 5; ++r) {
      permuted(r * 3 + 0) = psi(r * 3 + 2);
      permuted(r * 3 + 1) = psi(r * 3 + 0);
      permuted(r * 3 + 2) = psi(r * 3 + 1);
    }
    for (const auto& other : {phased, permuted}) {
      const auto b = state_metrics(other, 0.0, layout, hr);
      CHECK(std::abs(a.E_R - b.E_R) < 1e-12);
      CHECK(std::abs(a.xi - b.xi) < 1e-12);
      CHECK(std::abs(a.gamma - b.gamma) < 1e-12);
      CHECK(std::abs(a.xi_tilde - b.xi_tilde) < 1e-12);
      CHECK(std::abs(a.delta - b.delta) < 1e-12);
    }
  }
}

TEST_CASE("unnormalized input is rejected") {
  Eigen::VectorXcd psi = Eigen::VectorXcd::Constant(4, 0.6);
  CHECK_THROWS_AS(reduced_density_matrix(psi, {2, 2}), InvalidInput);
}

TEST_CASE("structureless states: gamma = 1 and delta = xi") {
  ModelConfig c;
  c.model = Model::anderson1d;
  c.disorder = 2.0;
  c.set_sites(30);
  const auto h = build_hamiltonian(c, sample_model_disorder(c, 3));
  const auto m = spectrum_metrics(eigendecompose(h), {30, 1}, translational_operator(c));
  for (const auto& s : m) {
    CHECK(s.gamma == 1.0);
    CHECK(s.delta == doctest::Approx(s.xi));
    CHECK(s.xi_tilde == doctest::Approx(s.xi));
  }
}

TEST_CASE("decoupled oscillator eigenstates are product states") {
  ModelConfig c;
  c.model = Model::oscillator1d;
  c.basis = InternalBasis::oscillator(0.37, {0, 2, 4});
  c.disorder = 0.0;
  c.set_sites(20);
  const auto sol = eigendecompose(build_hamiltonian(c, sample_model_disorder(c, 1)));
  const auto m = spectrum_metrics(sol, {20, 3}, translational_operator(c));
  for (std::size_t k = 0; k < m.size(); ++k) {
    const bool isolated = (k == 0 || sol.eigenvalues(k) - sol.eigenvalues(k - 1) > 1e-8) &&
                          (k + 1 == m.size() || sol.eigenvalues(k + 1) - sol.eigenvalues(k) > 1e-8);
    if (isolated) CHECK(m[k].gamma == doctest::Approx(1.0).epsilon(1e-8));
  }
}

TEST_CASE("composite eigenstates satisfy delta <= 1") {
  ModelConfig c;
  c.model = Model::rotor2d;
  c.basis = InternalBasis::rotor(2.0, 0.25, {0, 2, 4});
  c.disorder = 3.0;
  c.set_sites(25);
  const auto m = spectrum_metrics(eigendecompose(build_hamiltonian(c, sample_model_disorder(c, 4))),
                                  {25, 3}, translational_operator(c));
  for (const auto& s : m) {
    CHECK(s.delta <= 1.0 + 1e-10);
    CHECK(check_state_invariants(s, 3).empty());
  }
}

TEST_CASE("invariant checker reports violations") {
  StateMetrics bad;
  bad.xi = 0.5;
  bad.gamma = 0.4;
  bad.xi_tilde = 0.3;
  CHECK_FALSE(check_state_invariants(bad, 3).empty());
  StateMetrics low;
  low.xi = 0.1;
  low.gamma = 0.2;
  low.xi_tilde = 0.05;
  CHECK_FALSE(check_state_invariants(low, 3).empty());
  low.gamma = 0.34;
  CHECK(check_state_invariants(low, 3).empty());
}
