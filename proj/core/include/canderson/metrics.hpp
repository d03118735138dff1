#pragma once

#include <vector>

#include <Eigen/Dense>

#include "canderson/hamiltonian.hpp"
#include "canderson/spectral.hpp"

namespace canderson {

/// Per-eigenstate localization and entanglement record (energies in |J|).
struct StateMetrics {
  double energy = 0.0;
  double E_R = 0.0;
  double xi = 0.0;
  double gamma = 1.0;
  double xi_tilde = 0.0;
  double delta = 0.0;
};

/// Shape of the composite basis: psi(R, k) lives at R * internal_dimension + k.
struct BasisLayout {
  int sites = 0;
  int internal_dimension = 1;

  int dimension() const { return sites * internal_dimension; }
  int entanglement_dimension() const { return std::min(sites, internal_dimension); }
};

using StateView = Eigen::Ref<const Eigen::VectorXcd>;

/// rho_S(R, R') = sum_n psi(R, n) conj(psi(R', n)). Throws InvalidInput if
/// |psi| deviates from 1 by more than 1e-10.
Eigen::MatrixXcd reduced_density_matrix(StateView psi, const BasisLayout& layout);

/// sum_R rho_S(R, R)^2
double ipr(const Eigen::MatrixXcd& rho);
/// sum_{R,n} |psi(R, n)|^4
double ipr_joint(StateView psi);
/// tr rho_S^2
double purity(const Eigen::MatrixXcd& rho);

/// IPR from the site populations only; equals ipr(reduced_density_matrix(psi)).
double ipr_of_state(StateView psi, const BasisLayout& layout);
/// Purity via the d_E x d_E internal reduced state (tr rho_S^2 = tr rho_E^2),
/// which avoids the d_S x d_S matrix.
double purity_of_state(StateView psi, const BasisLayout& layout);

/// Bundles energy, <E_R> = psi^dag H_R psi, xi, gamma, xi_tilde and xi/gamma.
StateMetrics state_metrics(StateView psi, double energy, const BasisLayout& layout,
                           const HermitianOperator& translational);

/// state_metrics for every eigenpair, in eigenvalue order.
std::vector<StateMetrics> spectrum_metrics(const EigenSolution& solution,
                                           const BasisLayout& layout,
                                           const HermitianOperator& translational);

/// Returns an empty string if xi <= gamma, xi_tilde <= xi and the purity bounds
/// hold (tolerance 1e-10), otherwise a description of the first violation.
std::string check_state_invariants(const StateMetrics& m, int entanglement_dimension);

}  // namespace canderson
