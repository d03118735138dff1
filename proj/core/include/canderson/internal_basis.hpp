#pragma once

#include <complex>
#include <string>
#include <vector>

namespace canderson {

struct ModelConfig;

enum class InternalKind { oscillator, rotor };

/// Internal states of the composite particle.
///
/// Oscillator: Hermite functions of the relative coordinate with frequency
/// `omega`; energies 2 omega (n + 1/2).
///
/// Rotor: plane rotor states e^{i n theta} / sqrt(2 pi). `radius` is the bond
/// length in lattice units and sets the impurity window; `rotational_constant`
/// is the 1/r^2 energy scale (units of |J|) entering n^2/r^2. They are kept
/// separate so the energy scale can be swept at fixed geometry.
struct InternalBasis {
  InternalKind kind = InternalKind::oscillator;
  std::vector<int> states;
  double omega = 0.1;
  double radius = 2.0;
  double rotational_constant = 0.25;

  static InternalBasis oscillator(double omega, std::vector<int> states = {0, 2, 4, 6, 8});
  static InternalBasis rotor(double radius, double rotational_constant,
                             std::vector<int> states = {0, 2, 4});

  int dimension() const { return static_cast<int>(states.size()); }
  int max_abs_state() const;

  /// Throws InvalidParameter on an empty, duplicated or out-of-domain state list.
  void validate() const;
};

/// Orthonormal Hermite functions phi_0..phi_nmax at displacement x, from the
/// normalized three-term recurrence (no 2^n n! factors).
std::vector<double> hermite_functions(int nmax, double omega, double x);

/// Single normalized Hermite function phi_n(x).
double hermite_function(int n, double omega, double x);

/// Oscillator: phi_n(coordinate) as a real amplitude. Rotor: e^{i n theta}/sqrt(2 pi).
std::complex<double> basis_value(const InternalBasis& basis, int n, double coordinate);

double internal_energy(const InternalBasis& basis, int n);

/// Oscillator amplitude A_n = sqrt((2n + 1) / omega).
double oscillator_amplitude(int n, double omega);

/// Regime checks for the lattice discretization. `energy_window` is the
/// largest translational energy the run analyses (units of |J|). Warnings
/// never abort a run.
std::vector<std::string> validate_regime(const ModelConfig& config, double energy_window);

}  // namespace canderson
