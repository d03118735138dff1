#pragma once

#include <complex>
#include <random>

#include <Eigen/Dense>

namespace testing_support {

inline Eigen::VectorXcd random_state(int dimension, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Eigen::VectorXcd v(dimension);
  for (int i = 0; i < dimension; ++i) v(i) = {g(rng), g(rng)};
  return v / v.norm();
}

inline Eigen::MatrixXcd random_hermitian(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Eigen::MatrixXcd a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = {g(rng), g(rng)};
  return (a + a.adjoint()) / 2.0;
}

}  // namespace testing_support
