#include "canderson/hamiltonian.hpp"

#include <algorithm>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>

#include "canderson/errors.hpp"

namespace canderson {

HermitianOperator::HermitianOperator(int dimension, int internal_dimension,
                                     std::vector<MatrixEntry> entries)
    : dimension_(dimension), internal_dimension_(internal_dimension) {
  if (dimension < 1 || internal_dimension < 1 || dimension % internal_dimension != 0)
    throw InvalidParameter("operator dimension must be a positive multiple of d_E");
  for (const auto& e : entries)
    if (e.row < 0 || e.col < 0 || e.row >= dimension || e.col >= dimension)
      throw InvalidInput("operator entry index out of range");

  std::sort(entries.begin(), entries.end(), [](const MatrixEntry& a, const MatrixEntry& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  for (const auto& e : entries) {
    if (!entries_.empty() && entries_.back().row == e.row && entries_.back().col == e.col)
      entries_.back().value += e.value;
    else
      entries_.push_back(e);
  }
}

cplx HermitianOperator::at(int row, int col) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), std::pair{row, col},
                             [](const MatrixEntry& e, const std::pair<int, int>& key) {
                               return e.row != key.first ? e.row < key.first : e.col < key.second;
                             });
  if (it != entries_.end() && it->row == row && it->col == col) return it->value;
  return {};
}

bool HermitianOperator::is_real() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const MatrixEntry& e) { return e.value.imag() == 0.0; });
}

double HermitianOperator::hermiticity_defect() const {
  double worst = 0.0;
  for (const auto& e : entries_)
    worst = std::max(worst, std::abs(e.value - std::conj(at(e.col, e.row))));
  return worst;
}

double HermitianOperator::trace() const {
  double t = 0.0;
  for (const auto& e : entries_)
    if (e.row == e.col) t += e.value.real();
  return t;
}

Eigen::MatrixXcd HermitianOperator::to_dense() const {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dimension_, dimension_);
  for (const auto& e : entries_) m(e.row, e.col) = e.value;
  return m;
}

Eigen::MatrixXd HermitianOperator::to_dense_real() const {
  if (!is_real()) throw InvalidInput("operator has complex entries");
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dimension_, dimension_);
  for (const auto& e : entries_) m(e.row, e.col) = e.value.real();
  return m;
}

Eigen::VectorXcd HermitianOperator::apply(const Eigen::Ref<const Eigen::VectorXcd>& v) const {
  if (v.size() != dimension_) throw InvalidInput("vector size does not match operator");
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(dimension_);
  for (const auto& e : entries_) out(e.row) += e.value * v(e.col);
  return out;
}

cplx HermitianOperator::expectation(const Eigen::Ref<const Eigen::VectorXcd>& v) const {
  if (v.size() != dimension_) throw InvalidInput("vector size does not match operator");
  cplx acc{};
  for (const auto& e : entries_) acc += std::conj(v(e.row)) * e.value * v(e.col);
  return acc;
}

void HermitianOperator::write_coordinate(std::ostream& os) const {
  char line[128];
  for (const auto& e : entries_) {
    std::snprintf(line, sizeof line, "%d %d %.17g %.17g\n", e.row, e.col, e.value.real(),
                  e.value.imag());
    os << line;
  }
}

void OperatorBuilder::add_pair(int i, int j, cplx v) {
  if (i == j) {
    entries_.push_back({i, i, cplx(v.real(), 0.0)});
    return;
  }
  entries_.push_back({i, j, v});
  entries_.push_back({j, i, std::conj(v)});
}

HermitianOperator OperatorBuilder::build() && {
  return HermitianOperator(dimension_, internal_dimension_, std::move(entries_));
}

namespace {

std::int64_t floor_div2(std::int64_t v) { return v >= 0 ? v / 2 : -((-v + 1) / 2); }
std::int64_t ceil_div2(std::int64_t v) { return -floor_div2(-v); }

// Nearest-neighbour bonds (site, neighbour) of the lattice, each listed once.
// A periodic wrap is skipped on axes of length <= 2, where it would duplicate
// the existing bond.
std::vector<std::pair<int, int>> lattice_bonds(const ModelConfig& c) {
  std::vector<std::pair<int, int>> bonds;
  const bool wrap = c.boundary == Boundary::periodic;
  for (int y = 0; y < c.length_y; ++y) {
    for (int x = 0; x < c.length_x; ++x) {
      const int s = c.site_index(x, y);
      if (x + 1 < c.length_x)
        bonds.emplace_back(s, c.site_index(x + 1, y));
      else if (wrap && c.length_x > 2)
        bonds.emplace_back(s, c.site_index(0, y));
      if (!c.is_two_dimensional()) continue;
      if (y + 1 < c.length_y)
        bonds.emplace_back(s, c.site_index(x, y + 1));
      else if (wrap && c.length_y > 2)
        bonds.emplace_back(s, c.site_index(x, 0));
    }
  }
  return bonds;
}

double band_offset(const ModelConfig& c) { return -2.0 * c.dimensions() * c.hopping; }

void add_hopping(OperatorBuilder& b, const ModelConfig& c, int d_e) {
  for (auto [s, t] : lattice_bonds(c))
    for (int k = 0; k < d_e; ++k) b.add_pair(s * d_e + k, t * d_e + k, cplx(c.hopping, 0.0));
}

bool same_parity(int n, int m) { return ((n - m) % 2) == 0; }

Eigen::MatrixXcd oscillator_block(const ModelConfig& c, const DisorderRealization& dis, int site) {
  const auto& states = c.basis.states;
  const int d = static_cast<int>(states.size());
  const int nmax = c.basis.max_abs_state();
  const std::int64_t cut = oscillator_cutoff(c);
  Eigen::MatrixXd block = Eigen::MatrixXd::Zero(d, d);

  for (std::int64_t l = ceil_div2(site - cut); l <= floor_div2(site + cut); ++l) {
    const double strength = dis.at(l);
    if (strength == 0.0) continue;
    const double s = static_cast<double>(2 * l - site);
    const auto forward = hermite_functions(nmax, c.basis.omega, s);
    const auto backward = hermite_functions(nmax, c.basis.omega, -s);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        const auto n = static_cast<std::size_t>(states[i]);
        const auto m = static_cast<std::size_t>(states[j]);
        block(i, j) += strength * (forward[n] * forward[m] + backward[n] * backward[m]);
      }
  }
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (!same_parity(states[i], states[j])) block(i, j) = 0.0;
  return block.cast<cplx>();
}

Eigen::MatrixXcd rotor_block(const ModelConfig& c, const DisorderRealization& dis, int x, int y) {
  const auto& states = c.basis.states;
  const int d = static_cast<int>(states.size());
  const double r = c.basis.radius;
  const double norm = 1.0 / (2.0 * std::numbers::pi);
  Eigen::MatrixXcd block = Eigen::MatrixXcd::Zero(d, d);

  const auto l_lo = static_cast<std::int64_t>(std::ceil((x - r) / 2.0));
  const auto l_hi = static_cast<std::int64_t>(std::floor((x + r) / 2.0));
  const auto lp_lo = static_cast<std::int64_t>(std::ceil((y - r) / 2.0));
  const auto lp_hi = static_cast<std::int64_t>(std::floor((y + r) / 2.0));

  for (std::int64_t l = l_lo; l <= l_hi; ++l) {
    for (std::int64_t lp = lp_lo; lp <= lp_hi; ++lp) {
      const std::int64_t dx = 2 * l - x;
      const std::int64_t dy = 2 * lp - y;
      if (dx == 0 && dy == 0) continue;
      const double strength = dis.at(l, lp);
      if (strength == 0.0) continue;
      // arctan of dy/dx on (-pi/2, pi/2]; the second rotor end sits at theta - pi.
      const double theta = dx == 0 ? std::numbers::pi / 2
                                   : std::atan(static_cast<double>(dy) / static_cast<double>(dx));
      const double theta_opp = theta - std::numbers::pi;
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
          const double dm = states[j] - states[i];
          block(i, j) += strength * norm *
                         (std::polar(1.0, dm * theta) + std::polar(1.0, dm * theta_opp));
        }
    }
  }
  for (int i = 0; i < d; ++i) {
    block(i, i) = cplx(block(i, i).real(), 0.0);
    for (int j = 0; j < d; ++j)
      if (!same_parity(states[i], states[j])) block(i, j) = 0.0;
  }
  return block;
}

}  // namespace

std::array<IndexRange, 2> disorder_ranges(const ModelConfig& c) {
  switch (c.model) {
    case Model::anderson1d:
      return {IndexRange{0, c.length_x - 1}, IndexRange{0, 0}};
    case Model::anderson2d:
      return {IndexRange{0, c.length_x - 1}, IndexRange{0, c.length_y - 1}};
    case Model::oscillator1d: {
      const std::int64_t cut = oscillator_cutoff(c);
      return {IndexRange{floor_div2(-cut), ceil_div2(c.length_x - 1 + cut)}, IndexRange{0, 0}};
    }
    case Model::rotor2d: {
      const double r = c.basis.radius;
      auto axis = [r](int length) {
        return IndexRange{static_cast<std::int64_t>(std::floor((0.0 - r) / 2.0)),
                          static_cast<std::int64_t>(std::ceil((length - 1 + r) / 2.0))};
      };
      return {axis(c.length_x), axis(c.length_y)};
    }
  }
  return {};
}

DisorderRealization sample_model_disorder(const ModelConfig& config, std::uint64_t seed) {
  const auto kind = config.is_two_dimensional() ? DisorderKind::grid : DisorderKind::line;
  return sample_disorder(seed, kind, disorder_ranges(config), config.disorder);
}

Eigen::MatrixXcd effective_potential_block(const ModelConfig& config,
                                           const DisorderRealization& realization, int x,
                                           int y) {
  switch (config.model) {
    case Model::oscillator1d:
      if (realization.kind() != DisorderKind::line)
        throw InvalidInput("oscillator1d needs a line realization");
      return oscillator_block(config, realization, x);
    case Model::rotor2d:
      if (realization.kind() != DisorderKind::grid)
        throw InvalidInput("rotor2d needs a grid realization");
      return rotor_block(config, realization, x, y);
    default:
      throw InvalidInput("effective potential is defined for composite models only");
  }
}

HermitianOperator build_tight_binding(const ModelConfig& config, std::span<const double> onsite) {
  if (static_cast<int>(onsite.size()) != config.sites())
    throw InvalidInput("on-site potential length does not match lattice size");
  OperatorBuilder b(config.sites(), 1);
  add_hopping(b, config, 1);
  const double offset = band_offset(config);
  for (int s = 0; s < config.sites(); ++s) b.add_diagonal(s, offset + onsite[s]);
  return std::move(b).build();
}

HermitianOperator build_hamiltonian(const ModelConfig& config,
                                    const DisorderRealization& realization) {
  config.validate();
  if (!config.is_composite()) {
    std::vector<double> onsite(static_cast<std::size_t>(config.sites()));
    for (int y = 0; y < config.length_y; ++y)
      for (int x = 0; x < config.length_x; ++x)
        onsite[config.site_index(x, y)] =
            config.is_two_dimensional() ? realization.at(x, y) : realization.at(x);
    return build_tight_binding(config, onsite);
  }

  const int d_e = config.internal_dimension();
  OperatorBuilder b(config.hilbert_dimension(), d_e);
  add_hopping(b, config, d_e);
  const double offset = band_offset(config);
  for (int y = 0; y < config.length_y; ++y) {
    for (int x = 0; x < config.length_x; ++x) {
      const int site = config.site_index(x, y);
      const auto block = effective_potential_block(config, realization, x, y);
      for (int i = 0; i < d_e; ++i) {
        const double e_n = internal_energy(config.basis, config.basis.states[i]);
        b.add_diagonal(site * d_e + i, offset + e_n + block(i, i).real());
        for (int j = i + 1; j < d_e; ++j)
          if (block(i, j) != cplx{}) b.add_pair(site * d_e + i, site * d_e + j, block(i, j));
      }
    }
  }
  return std::move(b).build();
}

HermitianOperator translational_operator(const ModelConfig& config) {
  const int d_e = config.internal_dimension();
  OperatorBuilder b(config.hilbert_dimension(), d_e);
  add_hopping(b, config, d_e);
  const double offset = band_offset(config);
  for (int s = 0; s < config.sites(); ++s)
    for (int i = 0; i < d_e; ++i) {
      double diag = offset;
      if (config.is_composite() && config.include_internal_energy_in_ER)
        diag += internal_energy(config.basis, config.basis.states[i]);
      b.add_diagonal(s * d_e + i, diag);
    }
  return std::move(b).build();
}

}  // namespace canderson
