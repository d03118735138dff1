#include "canderson/metrics.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "canderson/errors.hpp"

namespace canderson {

namespace {

constexpr double kNormTolerance = 1e-10;
constexpr double kInvariantTolerance = 1e-10;

void check_state(StateView psi, const BasisLayout& layout) {
  if (psi.size() != layout.dimension())
    throw InvalidInput("state length " + std::to_string(psi.size()) +
                       " does not match basis dimension " + std::to_string(layout.dimension()));
  const double norm = psi.norm();
  if (std::abs(norm - 1.0) > kNormTolerance)
    throw InvalidInput("state is not normalized (norm " + std::to_string(norm) + ")");
}

// psi viewed as a d_E x d_S column-major matrix: column R holds psi(R, .).
auto amplitudes(StateView psi, const BasisLayout& layout) {
  return Eigen::Map<const Eigen::MatrixXcd>(psi.data(), layout.internal_dimension, layout.sites);
}

}  // namespace

Eigen::MatrixXcd reduced_density_matrix(StateView psi, const BasisLayout& layout) {
  check_state(psi, layout);
  const auto a = amplitudes(psi, layout);
  return a.transpose() * a.conjugate();
}

double ipr(const Eigen::MatrixXcd& rho) { return rho.diagonal().real().squaredNorm(); }

double ipr_joint(StateView psi) { return psi.cwiseAbs2().squaredNorm(); }

double purity(const Eigen::MatrixXcd& rho) { return rho.cwiseAbs2().sum(); }

double ipr_of_state(StateView psi, const BasisLayout& layout) {
  check_state(psi, layout);
  return amplitudes(psi, layout).cwiseAbs2().colwise().sum().squaredNorm();
}

double purity_of_state(StateView psi, const BasisLayout& layout) {
  check_state(psi, layout);
  const auto a = amplitudes(psi, layout);
  const Eigen::MatrixXcd rho_e = a * a.adjoint();
  return rho_e.cwiseAbs2().sum();
}

StateMetrics state_metrics(StateView psi, double energy, const BasisLayout& layout,
                           const HermitianOperator& translational) {
  StateMetrics m;
  m.energy = energy;
  const cplx e_r = translational.expectation(psi);
  if (std::abs(e_r.imag()) > kInvariantTolerance)
    throw InvalidInput("translational expectation has imaginary part " +
                       std::to_string(e_r.imag()));
  m.E_R = e_r.real();
  m.xi = ipr_of_state(psi, layout);
  m.gamma = layout.internal_dimension == 1 ? 1.0 : purity_of_state(psi, layout);
  m.xi_tilde = ipr_joint(psi);
  m.delta = m.xi / m.gamma;
  return m;
}

std::vector<StateMetrics> spectrum_metrics(const EigenSolution& solution,
                                           const BasisLayout& layout,
                                           const HermitianOperator& translational) {
  std::vector<StateMetrics> out;
  out.reserve(static_cast<std::size_t>(solution.size()));
  for (Eigen::Index k = 0; k < solution.size(); ++k)
    out.push_back(state_metrics(solution.eigenvectors.col(k), solution.eigenvalues(k), layout,
                                translational));
  return out;
}

std::string check_state_invariants(const StateMetrics& m, int entanglement_dimension) {
  std::ostringstream os;
  os.precision(17);
  const double tol = kInvariantTolerance;
  if (!(m.xi <= m.gamma + tol))
    os << "xi " << m.xi << " exceeds gamma " << m.gamma;
  else if (!(m.xi_tilde <= m.xi + tol))
    os << "xi_tilde " << m.xi_tilde << " exceeds xi " << m.xi;
  else if (!(m.gamma <= 1.0 + tol) || !(m.gamma >= 1.0 / entanglement_dimension - tol))
    os << "gamma " << m.gamma << " outside [1/" << entanglement_dimension << ", 1]";
  return os.str();
}

}  // namespace canderson
