#pragma once

#include <Eigen/Dense>

#include "canderson/hamiltonian.hpp"

namespace canderson {

/// Full eigendecomposition: ascending eigenvalues, eigenvector k in column k.
struct EigenSolution {
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXcd eigenvectors;

  Eigen::Index size() const { return eigenvalues.size(); }
};

/// Dense full-spectrum solve. Real operators go through the real-symmetric
/// LAPACK path. Throws InvalidInput if an entry differs from the conjugate of
/// its transpose partner by more than 1e-12.
EigenSolution eigendecompose(const HermitianOperator& h);

/// Dense overloads take the matrix by value; LAPACK overwrites it.
EigenSolution eigendecompose(Eigen::MatrixXcd h);
EigenSolution eigendecompose(Eigen::MatrixXd h);

/// max_k ||H v_k - E_k v_k||_2.
double max_residual(const Eigen::MatrixXcd& h, const EigenSolution& solution);

/// Pins the BLAS backend to one thread so concurrent solves are bit-reproducible.
void set_blas_threads(int threads);

}  // namespace canderson
