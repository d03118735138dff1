#include "canderson/internal_basis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

#include "canderson/errors.hpp"
#include "canderson/model.hpp"

namespace canderson {

InternalBasis InternalBasis::oscillator(double omega, std::vector<int> states) {
  InternalBasis b;
  b.kind = InternalKind::oscillator;
  b.omega = omega;
  b.states = std::move(states);
  return b;
}

InternalBasis InternalBasis::rotor(double radius, double rotational_constant,
                                   std::vector<int> states) {
  InternalBasis b;
  b.kind = InternalKind::rotor;
  b.radius = radius;
  b.rotational_constant = rotational_constant;
  b.states = std::move(states);
  return b;
}

int InternalBasis::max_abs_state() const {
  int m = 0;
  for (int n : states) m = std::max(m, std::abs(n));
  return m;
}

void InternalBasis::validate() const {
  if (states.empty()) throw InvalidParameter("states: internal state list is empty");
  if (std::set<int>(states.begin(), states.end()).size() != states.size())
    throw InvalidParameter("states: internal quantum numbers must be distinct");
  if (kind == InternalKind::oscillator) {
    if (!(omega > 0.0)) throw InvalidParameter("omega: oscillator frequency must be > 0");
    for (int n : states)
      if (n < 0) throw InvalidParameter("states: oscillator quantum numbers must be >= 0");
  } else {
    if (!(radius > 0.0)) throw InvalidParameter("r: rotor radius must be > 0");
    if (!(rotational_constant > 0.0))
      throw InvalidParameter("inv_r2: rotational constant must be > 0");
  }
}

std::vector<double> hermite_functions(int nmax, double omega, double x) {
  if (nmax < 0) throw InvalidParameter("Hermite function order must be >= 0");
  std::vector<double> phi(static_cast<std::size_t>(nmax) + 1);
  const double s = std::sqrt(omega) * x;
  phi[0] = std::pow(omega / std::numbers::pi, 0.25) * std::exp(-0.5 * s * s);
  if (nmax >= 1) phi[1] = std::numbers::sqrt2 * s * phi[0];
  for (int k = 1; k < nmax; ++k) {
    const double kp1 = k + 1.0;
    phi[k + 1] = std::sqrt(2.0 / kp1) * s * phi[k] - std::sqrt(k / kp1) * phi[k - 1];
  }
  return phi;
}

double hermite_function(int n, double omega, double x) {
  return hermite_functions(n, omega, x).back();
}

std::complex<double> basis_value(const InternalBasis& basis, int n, double coordinate) {
  if (basis.kind == InternalKind::oscillator) {
    if (n < 0) throw InvalidParameter("oscillator quantum number must be >= 0");
    return {hermite_function(n, basis.omega, coordinate), 0.0};
  }
  return std::polar(1.0 / std::sqrt(2.0 * std::numbers::pi), n * coordinate);
}

double internal_energy(const InternalBasis& basis, int n) {
  if (basis.kind == InternalKind::oscillator) {
    if (n < 0) throw InvalidParameter("oscillator quantum number must be >= 0");
    return 2.0 * basis.omega * (n + 0.5);
  }
  return static_cast<double>(n) * n * basis.rotational_constant;
}

double oscillator_amplitude(int n, double omega) { return std::sqrt((2.0 * n + 1.0) / omega); }

std::vector<std::string> validate_regime(const ModelConfig& config, double energy_window) {
  std::vector<std::string> warnings;
  const double a = config.spacing;

  if (config.model == Model::oscillator1d) {
    for (int n : config.basis.states) {
      const double scale = 4.0 * oscillator_amplitude(n, config.basis.omega) / (n + 1.0);
      if (!(scale > a)) {
        std::ostringstream os;
        os << "oscillator state n=" << n << ": length scale 4A_n/(n+1) = " << scale
           << " does not exceed lattice spacing a = " << a;
        warnings.push_back(os.str());
      }
    }
  } else if (config.model == Model::rotor2d) {
    for (int n : config.basis.states) {
      if (n == 0) continue;
      const double wavelength = 2.0 * std::numbers::pi * config.basis.radius / std::abs(n);
      if (!(wavelength > a)) {
        std::ostringstream os;
        os << "rotor state n=" << n << ": wavelength 2 pi r/|n| = " << wavelength
           << " does not exceed lattice spacing a = " << a;
        warnings.push_back(os.str());
      }
    }
  }

  // Isotropic wavevector K with E_R = 2 d |J| (1 - cos Ka) must stay below pi/2,
  // i.e. the window must stay below 2 d |J|.
  const double limit = 2.0 * config.dimensions() * std::abs(config.hopping);
  if (energy_window >= limit) {
    std::ostringstream os;
    os << "translational energy window " << energy_window << " |J| implies Ka >= pi/2 (limit "
       << limit << " |J|)";
    warnings.push_back(os.str());
  }
  return warnings;
}

}  // namespace canderson
