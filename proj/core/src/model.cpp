#include "canderson/model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "canderson/errors.hpp"

namespace canderson {

std::string_view to_string(Model model) {
  switch (model) {
    case Model::anderson1d: return "anderson1d";
    case Model::anderson2d: return "anderson2d";
    case Model::oscillator1d: return "oscillator1d";
    case Model::rotor2d: return "rotor2d";
  }
  return "unknown";
}

std::string_view to_string(Boundary boundary) {
  return boundary == Boundary::open ? "open" : "periodic";
}

Model parse_model(std::string_view name) {
  for (auto m : {Model::anderson1d, Model::anderson2d, Model::oscillator1d, Model::rotor2d})
    if (to_string(m) == name) return m;
  throw InvalidParameter("model: unknown model '" + std::string(name) + "'");
}

Boundary parse_boundary(std::string_view name) {
  if (name == "open") return Boundary::open;
  if (name == "periodic") return Boundary::periodic;
  throw InvalidParameter("boundary: unknown boundary '" + std::string(name) + "'");
}

ModelConfig ModelConfig::structureless() const {
  ModelConfig out = *this;
  out.model = is_two_dimensional() ? Model::anderson2d : Model::anderson1d;
  return out;
}

void ModelConfig::set_sites(int sites) {
  if (is_two_dimensional()) {
    const int side = static_cast<int>(std::lround(std::sqrt(static_cast<double>(sites))));
    if (side * side != sites)
      throw InvalidParameter("N_R: 2D lattice size " + std::to_string(sites) +
                             " is not a perfect square");
    length_x = length_y = side;
  } else {
    length_x = sites;
    length_y = 1;
  }
}

void ModelConfig::validate() const {
  if (length_x < 1 || length_y < 1 || sites() < 2)
    throw InvalidParameter("N_R: lattice must have at least 2 sites");
  if (!is_two_dimensional() && length_y != 1)
    throw InvalidParameter("L_y: 1D models must have L_y = 1");
  if (hopping == 0.0 || !std::isfinite(hopping)) throw InvalidParameter("J: hopping must be nonzero");
  if (!(spacing > 0.0)) throw InvalidParameter("a: lattice spacing must be > 0");
  if (!(disorder >= 0.0) || !std::isfinite(disorder))
    throw InvalidParameter("lambda: disorder strength must be >= 0");
  if (!(cutoff_tail > 0.0)) throw InvalidParameter("cutoff_tail: must be > 0");
  if (model == Model::oscillator1d && basis.kind != InternalKind::oscillator)
    throw InvalidParameter("states: oscillator1d needs an oscillator basis");
  if (model == Model::rotor2d && basis.kind != InternalKind::rotor)
    throw InvalidParameter("states: rotor2d needs a rotor basis");
  if (is_composite()) basis.validate();
}

int oscillator_cutoff(const ModelConfig& config) {
  const double omega = config.basis.omega;
  const int nmax = config.basis.max_abs_state();
  return static_cast<int>(
      std::ceil(oscillator_amplitude(nmax, omega) + config.cutoff_tail / std::sqrt(omega)));
}

}  // namespace canderson
