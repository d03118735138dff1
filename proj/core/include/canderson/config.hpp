#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "canderson/model.hpp"

namespace canderson {

enum class ExperimentKind { spectrum, scaling, phase, validate };

std::string_view to_string(ExperimentKind kind);
ExperimentKind parse_experiment(std::string_view name);

struct OutputFormats {
  bool csv = true;
  bool json = false;
  bool svg = true;
};

/// Parses a comma-separated list such as "csv,json,svg". Throws ConfigError
/// (key "formats") on an unknown entry.
OutputFormats parse_formats(std::string_view list);

/// Everything a CLI run needs. Built only through load_config/parse_config,
/// which validate before any computation.
struct RunConfig {
  ExperimentKind experiment = ExperimentKind::spectrum;
  ModelConfig model;
  std::uint64_t master_seed = 1;
  std::size_t realizations = 20;
  /// Site counts for scaling runs (perfect squares in 2D).
  std::vector<int> sizes;
  /// Disorder strengths for phase scans.
  std::vector<double> lambda_grid;
  /// Internal-parameter values, one scaling/spectrum series each: omega for
  /// the oscillator, 1/r^2 for the rotor. Empty means the single configured value.
  std::vector<double> series;
  /// Also run the structureless model on the same lattice.
  bool baseline = true;
  double bin_width = 0.25;
  /// Bin ceiling for spectra and phase scans, selection threshold for scaling.
  double E_R_max = 1.5;
  std::size_t min_bin_count = 10;
  std::filesystem::path output_dir = "out";
  OutputFormats formats;
  int workers = 1;
  /// Writes the first realization's Hamiltonian in coordinate format.
  bool dump_hamiltonian = false;
};

/// Parses YAML (or JSON, its subset). Unknown keys, wrong types and
/// physically invalid values raise ConfigError naming the key.
/// `experiment` overrides the file's `experiment` key (CLI subcommands).
RunConfig parse_config(const std::string& text,
                       std::optional<ExperimentKind> experiment = std::nullopt);
RunConfig load_config(const std::filesystem::path& path,
                      std::optional<ExperimentKind> experiment = std::nullopt);

/// Worker count from COMPOSITE_ANDERSON_WORKERS, or `fallback` when unset.
int workers_from_environment(int fallback);

}  // namespace canderson
