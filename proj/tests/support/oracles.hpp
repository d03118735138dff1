#pragma once

// Independent reference implementations used only by the tests. Nothing here
// calls into the library's numerical code paths.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using cplx = std::complex<double>;

// Cyclic Jacobi rotations on a real symmetric matrix. Returns eigenvalues
// ascending with eigenvectors in matching columns.
inline std::pair<Eigen::VectorXd, Eigen::MatrixXd> jacobi_eigen(Eigen::MatrixXd a,
                                                                double tol = 1e-14) {
  const Eigen::Index n = a.rows();
  Eigen::MatrixXd v = Eigen::MatrixXd::Identity(n, n);
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (Eigen::Index p = 0; p < n; ++p)
      for (Eigen::Index q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
    if (std::sqrt(off) < tol * std::max(1.0, a.norm())) break;
    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        if (a(p, q) == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
        for (Eigen::Index k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const double vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }
  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  std::sort(order.begin(), order.end(), [&](auto i, auto j) { return a(i, i) < a(j, j); });
  Eigen::VectorXd w(n);
  Eigen::MatrixXd vs(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    w(k) = a(order[k], order[k]);
    vs.col(k) = v.col(order[k]);
  }
  return {w, vs};
}

// Eigenvalues of a Hermitian matrix through its real 2n x 2n embedding
// [[A, -B], [B, A]], which repeats every eigenvalue twice.
inline Eigen::VectorXd hermitian_eigenvalues(const Eigen::MatrixXcd& h) {
  const Eigen::Index n = h.rows();
  Eigen::MatrixXd big(2 * n, 2 * n);
  big << h.real(), -h.imag(), h.imag(), h.real();
  const Eigen::VectorXd w = jacobi_eigen(big).first;
  Eigen::VectorXd out(n);
  for (Eigen::Index k = 0; k < n; ++k) out(k) = w(2 * k);
  return out;
}

// Open chain of n sites with hopping j and band offset -2j:
// E_k = -2j + 2j cos(k pi / (n + 1)), k = 1..n (ascending for j < 0).
inline std::vector<double> clean_chain_energies(int n, double j) {
  std::vector<double> e;
  for (int k = 1; k <= n; ++k) e.push_back(-2.0 * j + 2.0 * j * std::cos(k * std::numbers::pi / (n + 1)));
  std::sort(e.begin(), e.end());
  return e;
}

// psi_k(x) = sqrt(2 / (n + 1)) sin(k pi (x + 1) / (n + 1)), x = 0..n-1.
inline std::vector<double> clean_chain_mode(int n, int k) {
  std::vector<double> psi;
  for (int x = 0; x < n; ++x)
    psi.push_back(std::sqrt(2.0 / (n + 1)) * std::sin(k * std::numbers::pi * (x + 1) / (n + 1)));
  return psi;
}

// Physicists' Hermite polynomial from the explicit finite sum.
inline double hermite_polynomial(int n, double s) {
  double sum = 0.0;
  for (int m = 0; 2 * m <= n; ++m) {
    const double term = std::tgamma(n + 1.0) / (std::tgamma(m + 1.0) * std::tgamma(n - 2.0 * m + 1.0));
    sum += (m % 2 ? -1.0 : 1.0) * term * std::pow(2.0 * s, n - 2 * m);
  }
  return sum;
}

// (omega/pi)^(1/4) / sqrt(2^n n!) H_n(s) exp(-s^2/2), s = sqrt(omega) x.
inline double hermite_function(int n, double omega, double x) {
  const double s = std::sqrt(omega) * x;
  const double norm = std::pow(omega / std::numbers::pi, 0.25) /
                      std::sqrt(std::pow(2.0, n) * std::tgamma(n + 1.0));
  return norm * hermite_polynomial(n, s) * std::exp(-0.5 * s * s);
}

// Trapezoid rule on a uniform grid over [lo, hi].
template <typename F>
double trapezoid(F&& f, double lo, double hi, int intervals) {
  const double h = (hi - lo) / intervals;
  double acc = 0.5 * (f(lo) + f(hi));
  for (int i = 1; i < intervals; ++i) acc += f(lo + i * h);
  return acc * h;
}

// rho_S(R, R') = sum_k psi(R d + k) conj(psi(R' d + k)) by explicit loops.
inline Eigen::MatrixXcd reduced_density(const Eigen::VectorXcd& psi, int sites, int d) {
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(sites, sites);
  for (int r = 0; r < sites; ++r)
    for (int rp = 0; rp < sites; ++rp)
      for (int k = 0; k < d; ++k) rho(r, rp) += psi(r * d + k) * std::conj(psi(rp * d + k));
  return rho;
}

inline double trace_square(const Eigen::MatrixXcd& rho) {
  double t = 0.0;
  for (Eigen::Index i = 0; i < rho.rows(); ++i)
    for (Eigen::Index j = 0; j < rho.cols(); ++j) t += std::norm(rho(i, j));
  return t;
}

// Dense composite oscillator Hamiltonian from the defining sums, with the
// impurity sum running over every l in [l_lo, l_hi] (no window), so it agrees
// with a windowed build only when the window captures all non-negligible terms.
inline Eigen::MatrixXd oscillator_hamiltonian(int sites, double j, double omega,
                                              const std::vector<int>& states,
                                              const std::vector<double>& strengths,
                                              std::int64_t l_lo) {
  const int d = static_cast<int>(states.size());
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(sites * d, sites * d);
  for (int r = 0; r < sites; ++r)
    for (int a = 0; a < d; ++a) {
      const int i = r * d + a;
      h(i, i) += -2.0 * j + 2.0 * omega * (states[a] + 0.5);
      if (r + 1 < sites) h(i, i + d) = h(i + d, i) = j;
      for (int b = 0; b < d; ++b) {
        if ((states[a] - states[b]) % 2 != 0) continue;
        double v = 0.0;
        for (std::size_t idx = 0; idx < strengths.size(); ++idx) {
          const double s = 2.0 * (l_lo + static_cast<std::int64_t>(idx)) - r;
          v += strengths[idx] * (hermite_function(states[a], omega, s) * hermite_function(states[b], omega, s) +
                                 hermite_function(states[a], omega, -s) * hermite_function(states[b], omega, -s));
        }
        h(i, r * d + b) += v;
      }
    }
  return h;
}

}  // namespace oracle
