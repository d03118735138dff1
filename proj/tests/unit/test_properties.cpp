// Randomized checks of the per-state inequalities and of the structural
// properties of the composite Hamiltonians.

#include <doctest.h>

#include <random>

#include "canderson/experiments.hpp"
#include "canderson/hamiltonian.hpp"
#include "canderson/metrics.hpp"
#include "canderson/spectral.hpp"
#include "random_states.hpp"

using namespace canderson;

namespace {

ModelConfig random_composite(std::mt19937_64& rng, bool rotor) {
  ModelConfig c;
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<int> pool = rotor ? std::vector<int>{-3, -2, -1, 0, 1, 2, 3, 4}
                                : std::vector<int>{0, 1, 2, 3, 4, 5, 6, 8, 10};
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(2 + rng() % 4);
  if (rotor) {
    c.model = Model::rotor2d;
    c.basis = InternalBasis::rotor(1.0 + 2.0 * u(rng), 0.1 + u(rng), pool);
    c.set_sites(std::vector<int>{9, 16, 25}[rng() % 3]);
  } else {
    c.model = Model::oscillator1d;
    c.basis = InternalBasis::oscillator(0.1 + 1.5 * u(rng), pool);
    c.set_sites(8 + static_cast<int>(rng() % 30));
  }
  c.disorder = 6.0 * u(rng);
  c.boundary = rng() % 2 ? Boundary::periodic : Boundary::open;
  return c;
}

}  // namespace

TEST_CASE("inequalities hold for random normalized states") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const BasisLayout layout{1 + static_cast<int>(rng() % 12), 1 + static_cast<int>(rng() % 6)};
    const auto psi = testing_support::random_state(layout.dimension(), rng);
    const auto rho = reduced_density_matrix(psi, layout);
    const double xi = ipr(rho), gamma = purity(rho), tilde = ipr_joint(psi);
    const double d = layout.entanglement_dimension();
    CHECK(xi <= gamma + 1e-10);
    CHECK(tilde <= xi + 1e-10);
    CHECK(gamma >= 1.0 / d - 1e-10);
    CHECK(gamma <= 1.0 + 1e-10);
    const Eigen::VectorXd eig = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(rho).eigenvalues();
    CHECK(eig.minCoeff() >= -1e-10);
    CHECK(std::abs(eig.sum() - 1.0) <= 1e-10);
  }
}

TEST_CASE("inequalities hold for eigenstates of random composite models") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 16; ++trial) {
    const auto c = random_composite(rng, trial % 2 == 1);
    CAPTURE(trial);
    const auto r = run_single_realization(c, 0, rng());
    for (const auto& s : r.states) {
      CHECK(check_state_invariants(s, std::min(c.sites(), c.internal_dimension())).empty());
      CHECK(s.E_R >= -1e-10);
      CHECK(s.E_R <= 4.0 * c.dimensions() + 1e-10);
    }
  }
}

TEST_CASE("Hamiltonians are Hermitian and split by internal parity") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 16; ++trial) {
    const auto c = random_composite(rng, trial % 2 == 0);
    const auto h = build_hamiltonian(c, sample_model_disorder(c, rng()));
    CHECK(h.hermiticity_defect() == 0.0);
    const int d = c.internal_dimension();
    for (const auto& e : h.entries()) {
      const int n = c.basis.states[e.row % d], m = c.basis.states[e.col % d];
      if ((n - m) % 2 != 0) CHECK(e.value == cplx{});
    }
    const auto sol = eigendecompose(h);
    CHECK(std::abs(sol.eigenvalues.sum() - h.trace()) < 1e-8 * h.dimension());
  }
}
