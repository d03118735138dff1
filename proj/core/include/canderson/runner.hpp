#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "canderson/config.hpp"

namespace canderson {

struct RunReport {
  std::vector<std::string> warnings;
  std::vector<std::filesystem::path> files;
};

/// Executes one configured experiment end to end and writes its outputs into
/// `config.output_dir`. Progress and warnings go to `log`. All file I/O
/// happens after the computation finishes.
RunReport run_experiment(const RunConfig& config, std::ostream& log);

/// Configuration of series `index` (omega or 1/r^2 replaced by config.series[index]).
ModelConfig series_model(const RunConfig& config, std::size_t index);
std::string series_tag(const RunConfig& config, std::size_t index);

}  // namespace canderson
