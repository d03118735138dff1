#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "canderson/metrics.hpp"
#include "canderson/model.hpp"

namespace canderson {

struct RealizationResult {
  std::size_t realization_index = 0;
  std::uint64_t seed = 0;
  std::vector<StateMetrics> states;
};

/// Called after each finished realization with (done, total, sites). Calls are
/// serialized but may come from worker threads.
using ProgressFn = std::function<void(std::size_t, std::size_t, int)>;

struct RunOptions {
  int workers = 1;
  ProgressFn progress;
};

/// seed -> disorder -> H -> eigendecomposition -> metrics for every eigenstate.
/// Re-checks the per-state inequalities and throws InvariantViolation (with
/// the realization index) if one fails.
RealizationResult run_single_realization(const ModelConfig& config,
                                         std::size_t realization_index,
                                         std::uint64_t master_seed);

/// Realizations 0..count-1, returned in index order regardless of `workers`.
std::vector<RealizationResult> run_realizations(const ModelConfig& config, std::size_t count,
                                                std::uint64_t master_seed,
                                                const RunOptions& options = {});

struct SpectrumBin {
  double lo = 0.0;
  double hi = 0.0;
  std::size_t count = 0;
  double mean_xi = 0.0;
  double mean_gamma = 0.0;
  /// False when count < min_count; such bins are kept but flagged.
  bool reported = false;
};

struct BinnedSpectrum {
  double bin_width = 0.25;
  double E_R_max = 1.5;
  std::size_t min_count = 10;
  std::vector<SpectrumBin> bins;
  std::size_t discarded = 0;

  std::size_t retained() const;
};

/// Bins states by <E_R> into [k w, (k+1) w) for k w < E_R_max; states with
/// <E_R> >= E_R_max are discarded.
BinnedSpectrum aggregate_binned(std::span<const RealizationResult> results, double bin_width,
                                double E_R_max, std::size_t min_count = 10);

/// Index of the state with minimal xi among those with <E_R> < threshold;
/// ties within 1e-12 go to the lower index. Throws EmptySelection.
std::size_t most_extended_index(const RealizationResult& result, double E_R_threshold);
StateMetrics select_most_extended(const RealizationResult& result, double E_R_threshold);

struct PooledMean {
  std::size_t count = 0;
  double mean_xi = 0.0;
  double mean_gamma = 0.0;
};

/// Mean xi and gamma over every state with <E_R> < E_R_max across results.
PooledMean pooled_mean(std::span<const RealizationResult> results, double E_R_max);

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
};

/// Ordinary least squares y = slope x + intercept (needs >= 2 distinct x).
LinearFit fit_line(std::span<const double> x, std::span<const double> y);

struct ScalingPoint {
  int sites = 0;
  int hilbert_dimension = 0;
  std::size_t realizations = 0;
  double mean_xi = 0.0;
  double se_xi = 0.0;
  double mean_xi_tilde = 0.0;
  double se_xi_tilde = 0.0;
  double mean_gamma = 0.0;
  double se_gamma = 0.0;
  /// Log-then-average alternatives.
  double mean_log10_xi = 0.0;
  double mean_log10_xi_tilde = 0.0;
  /// Mean gamma over every state below the threshold, not only the selected one.
  double mean_gamma_filtered = 0.0;
};

struct ScalingResult {
  std::string label;
  std::vector<ScalingPoint> points;
  /// Slope of log10(mean xi) vs log10 N_R.
  double slope_xi = 0.0;
  /// Slope of mean(log10 xi) vs log10 N_R.
  double slope_mean_log_xi = 0.0;
  /// Slope of log10(mean xi_tilde) vs log10 N (N = N_R d_E).
  double slope_xi_tilde = 0.0;
  /// Mean purity of the selected states over all sizes and realizations.
  double gamma_bar = 0.0;
  /// Mean purity over every state below the threshold, all sizes.
  double gamma_bar_filtered = 0.0;
};

/// For each size: run realizations, pick the most extended state below the
/// threshold in each, average, then fit. `sizes` are site counts (perfect
/// squares for 2D models), strictly increasing, at least three of them.
ScalingResult scaling_sweep(const ModelConfig& config_template, std::span<const int> sizes,
                            std::size_t n_realizations, std::uint64_t master_seed,
                            double E_R_threshold, const RunOptions& options = {});

struct PhaseGrid {
  std::vector<double> lambdas;
  /// Bin lower edges; the last bin ends at E_R_max.
  std::vector<double> bin_edges;
  double bin_width = 0.25;
  double E_R_max = 3.0;
  /// columns[i] holds the binned spectrum at lambdas[i].
  std::vector<BinnedSpectrum> columns;
};

PhaseGrid phase_scan(const ModelConfig& config_template, std::span<const double> lambda_grid,
                     std::size_t n_realizations, std::uint64_t master_seed, double E_R_max,
                     double bin_width = 0.25, std::size_t min_count = 10,
                     const RunOptions& options = {});

}  // namespace canderson
