#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "canderson/experiments.hpp"

namespace canderson {

enum class TableFormat { csv, json };

// CSV layouts (header row, LF endings, floats as %.12g):
//   states   realization,state_index,energy,E_R,xi,gamma,xi_tilde,delta
//   binned   bin_lo,bin_hi,count,mean_xi,mean_gamma,reported
//   scaling  series,N_R,N,realizations,mean_xi,se_xi,mean_xi_tilde,se_xi_tilde,
//            mean_gamma,se_gamma,log10_N_R,log10_mean_xi,mean_log10_xi,
//            log10_mean_xi_tilde,mean_log10_xi_tilde,mean_gamma_filtered
//   slopes   series,slope_xi,slope_mean_log_xi,slope_xi_tilde,gamma_bar,gamma_bar_filtered
//   phase    lambda,bin_lo,bin_hi,count,mean_xi,mean_gamma,reported
// JSON output mirrors the same field names.

std::string format_states(std::span<const RealizationResult> results, TableFormat format);
std::string format_binned(const BinnedSpectrum& binned, TableFormat format);
std::string format_scaling(std::span<const ScalingResult> series, TableFormat format);
std::string format_slopes(std::span<const ScalingResult> series, TableFormat format);
std::string format_phase(const PhaseGrid& grid, TableFormat format);

/// Writes `text` to `path` byte for byte; IoError names the path on failure.
void write_text_file(const std::filesystem::path& path, const std::string& text);

void write_table(std::span<const RealizationResult> results, TableFormat format,
                 const std::filesystem::path& path);

struct StateRow {
  std::size_t realization = 0;
  std::size_t state_index = 0;
  StateMetrics metrics;
};

/// Parses a per-state CSV written by format_states.
std::vector<StateRow> read_states_csv(const std::filesystem::path& path);

}  // namespace canderson
