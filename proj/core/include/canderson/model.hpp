#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "canderson/internal_basis.hpp"

namespace canderson {

enum class Model { anderson1d, anderson2d, oscillator1d, rotor2d };
enum class Boundary { open, periodic };

std::string_view to_string(Model model);
std::string_view to_string(Boundary boundary);
Model parse_model(std::string_view name);
Boundary parse_boundary(std::string_view name);

struct ModelConfig {
  Model model = Model::oscillator1d;
  int length_x = 200;
  int length_y = 1;
  double hopping = -1.0;
  double spacing = 1.0;
  InternalBasis basis = InternalBasis::oscillator(0.1);
  double disorder = 5.0;
  Boundary boundary = Boundary::open;
  bool include_internal_energy_in_ER = false;
  /// Oscillator impurity sums extend `cutoff_tail / sqrt(omega)` past the
  /// classical turning point of the highest state.
  double cutoff_tail = 8.0;

  bool is_two_dimensional() const { return model == Model::anderson2d || model == Model::rotor2d; }
  bool is_composite() const { return model == Model::oscillator1d || model == Model::rotor2d; }
  int dimensions() const { return is_two_dimensional() ? 2 : 1; }
  int sites() const { return length_x * length_y; }
  int internal_dimension() const { return is_composite() ? basis.dimension() : 1; }
  int hilbert_dimension() const { return sites() * internal_dimension(); }

  /// Site index of lattice coordinate (x, y); x runs fastest.
  int site_index(int x, int y = 0) const { return y * length_x + x; }

  /// Structureless model on the same lattice with the same disorder strength.
  ModelConfig structureless() const;

  /// Sets the lattice to `sites` sites: a chain in 1D, a square L x L in 2D
  /// (throws InvalidParameter if `sites` is not a perfect square there).
  void set_sites(int sites);

  /// Throws InvalidParameter naming the first offending field.
  void validate() const;
};

/// Integer cutoff |2l - R| <= r_cut for oscillator impurity sums.
int oscillator_cutoff(const ModelConfig& config);

}  // namespace canderson
