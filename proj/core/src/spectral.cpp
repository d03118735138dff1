#include "canderson/spectral.hpp"

#include <lapacke.h>

#include <algorithm>
#include <complex>
#include <string>
#include <vector>

#include "canderson/errors.hpp"

extern "C" void openblas_set_num_threads(int);

namespace canderson {

namespace {

constexpr double kHermitianTolerance = 1e-12;

void check_info(lapack_int info, const char* routine) {
  if (info != 0)
    throw InvalidInput(std::string(routine) + " failed with info = " + std::to_string(info));
}

template <typename Matrix>
double hermitian_defect(const Matrix& m) {
  double worst = 0.0;
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = j; i < m.rows(); ++i)
      worst = std::max(worst, std::abs(m(i, j) - std::conj(m(j, i))));
  return worst;
}

}  // namespace

void set_blas_threads(int threads) { openblas_set_num_threads(threads); }

EigenSolution eigendecompose(Eigen::MatrixXd a) {
  if (a.rows() != a.cols() || a.rows() < 1) throw InvalidInput("matrix must be square, N >= 1");
  const double defect = hermitian_defect(a);
  if (defect > kHermitianTolerance)
    throw InvalidInput("matrix is not symmetric (defect " + std::to_string(defect) + ")");

  const auto n = static_cast<lapack_int>(a.rows());
  EigenSolution out;
  out.eigenvalues.resize(n);
  Eigen::MatrixXd z(n, n);
  std::vector<lapack_int> support(2 * static_cast<std::size_t>(n));
  lapack_int found = 0;
  check_info(LAPACKE_dsyevr(LAPACK_COL_MAJOR, 'V', 'A', 'L', n, a.data(), n, 0.0, 0.0, 0, 0, 0.0,
                            &found, out.eigenvalues.data(), z.data(), n, support.data()),
             "dsyevr");
  if (found != n) throw InvalidInput("dsyevr returned an incomplete spectrum");
  a.resize(0, 0);
  out.eigenvectors = z.cast<std::complex<double>>();
  return out;
}

EigenSolution eigendecompose(Eigen::MatrixXcd a) {
  if (a.rows() != a.cols() || a.rows() < 1) throw InvalidInput("matrix must be square, N >= 1");
  const double defect = hermitian_defect(a);
  if (defect > kHermitianTolerance)
    throw InvalidInput("matrix is not Hermitian (defect " + std::to_string(defect) + ")");

  const auto n = static_cast<lapack_int>(a.rows());
  EigenSolution out;
  out.eigenvalues.resize(n);
  out.eigenvectors.resize(n, n);
  std::vector<lapack_int> support(2 * static_cast<std::size_t>(n));
  lapack_int found = 0;
  check_info(LAPACKE_zheevr(LAPACK_COL_MAJOR, 'V', 'A', 'L', n,
                            reinterpret_cast<lapack_complex_double*>(a.data()), n, 0.0, 0.0, 0, 0,
                            0.0, &found, out.eigenvalues.data(),
                            reinterpret_cast<lapack_complex_double*>(out.eigenvectors.data()), n,
                            support.data()),
             "zheevr");
  if (found != n) throw InvalidInput("zheevr returned an incomplete spectrum");
  return out;
}

EigenSolution eigendecompose(const HermitianOperator& h) {
  const double defect = h.hermiticity_defect();
  if (defect > kHermitianTolerance)
    throw InvalidInput("operator is not Hermitian (defect " + std::to_string(defect) + ")");
  if (h.is_real()) return eigendecompose(h.to_dense_real());
  return eigendecompose(h.to_dense());
}

double max_residual(const Eigen::MatrixXcd& h, const EigenSolution& solution) {
  double worst = 0.0;
  for (Eigen::Index k = 0; k < solution.size(); ++k) {
    const Eigen::VectorXcd v = solution.eigenvectors.col(k);
    worst = std::max(worst, (h * v - solution.eigenvalues(k) * v).norm());
  }
  return worst;
}

}  // namespace canderson
