#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "canderson/disorder.hpp"
#include "canderson/model.hpp"

namespace canderson {

using cplx = std::complex<double>;

struct MatrixEntry {
  int row = 0;
  int col = 0;
  cplx value;
};

/// Sparse operator over the composite basis |R, n>, stored as coordinate
/// entries sorted by (row, col). Basis layout: idx(R, n) = R * d_E + k where
/// k is the position of n in the internal state list.
///
/// Construction does not enforce Hermiticity; the builders below produce
/// Hermitian operators by adding each off-diagonal entry with its conjugate.
class HermitianOperator {
 public:
  HermitianOperator() = default;
  /// Duplicate (row, col) entries are summed.
  HermitianOperator(int dimension, int internal_dimension, std::vector<MatrixEntry> entries);

  int dimension() const { return dimension_; }
  int internal_dimension() const { return internal_dimension_; }
  int sites() const { return internal_dimension_ > 0 ? dimension_ / internal_dimension_ : 0; }
  int index(int site, int internal_position) const {
    return site * internal_dimension_ + internal_position;
  }

  std::span<const MatrixEntry> entries() const { return entries_; }
  cplx at(int row, int col) const;

  bool is_real() const;
  /// max |H_ij - conj(H_ji)| over stored entries (a missing partner counts as 0).
  double hermiticity_defect() const;
  double trace() const;

  Eigen::MatrixXcd to_dense() const;
  Eigen::MatrixXd to_dense_real() const;
  Eigen::VectorXcd apply(const Eigen::Ref<const Eigen::VectorXcd>& v) const;
  cplx expectation(const Eigen::Ref<const Eigen::VectorXcd>& v) const;

  /// Coordinate dump: one `row col re im` line per stored entry, 0-based, %.17g.
  void write_coordinate(std::ostream& os) const;

 private:
  int dimension_ = 0;
  int internal_dimension_ = 1;
  std::vector<MatrixEntry> entries_;
};

/// Accumulates entries; `add_pair` stores (i, j, v) together with (j, i, conj v).
class OperatorBuilder {
 public:
  OperatorBuilder(int dimension, int internal_dimension)
      : dimension_(dimension), internal_dimension_(internal_dimension) {}

  void add_diagonal(int i, double v) { entries_.push_back({i, i, cplx(v, 0.0)}); }
  void add_pair(int i, int j, cplx v);
  HermitianOperator build() &&;

 private:
  int dimension_;
  int internal_dimension_;
  std::vector<MatrixEntry> entries_;
};

/// Impurity index ranges a realization must cover for `config`.
std::array<IndexRange, 2> disorder_ranges(const ModelConfig& config);

/// Samples the realization matching the model: one impurity per site for the
/// structureless models, the impurity lattice l (2l - R window) for the
/// oscillator, (l, l') for the rotor.
DisorderRealization sample_model_disorder(const ModelConfig& config, std::uint64_t seed);

/// d_E x d_E matrix V_nm at lattice site (x, y). Opposite-parity entries are
/// exactly zero.
Eigen::MatrixXcd effective_potential_block(const ModelConfig& config,
                                           const DisorderRealization& realization, int x,
                                           int y = 0);

HermitianOperator build_hamiltonian(const ModelConfig& config,
                                    const DisorderRealization& realization);

/// Nearest-neighbour tight-binding model on the lattice of `config` with
/// diagonal (-2dJ + onsite[R]); one orbital per site.
HermitianOperator build_tight_binding(const ModelConfig& config, std::span<const double> onsite);

/// Translational part H_R: hopping plus the -2dJ band offset, diagonal in n,
/// without E_n (unless `include_internal_energy_in_ER`) and without V.
HermitianOperator translational_operator(const ModelConfig& config);

}  // namespace canderson
