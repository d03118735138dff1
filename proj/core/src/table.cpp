#include "canderson/table.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "canderson/errors.hpp"

namespace canderson {

namespace {

using nlohmann::json;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

class CsvWriter {
 public:
  explicit CsvWriter(std::initializer_list<const char*> header) {
    row_begin();
    for (const char* h : header) cell(h);
    row_end();
  }
  void row_begin() { first_ = true; }
  void row_end() { out_ << '\n'; }
  CsvWriter& cell(const std::string& s) {
    if (!first_) out_ << ',';
    out_ << s;
    first_ = false;
    return *this;
  }
  CsvWriter& cell(double v) { return cell(num(v)); }
  CsvWriter& cell(std::size_t v) { return cell(std::to_string(v)); }
  CsvWriter& cell(int v) { return cell(std::to_string(v)); }
  std::string str() const { return out_.str(); }

 private:
  std::ostringstream out_;
  bool first_ = true;
};

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string format_states(std::span<const RealizationResult> results, TableFormat format) {
  if (format == TableFormat::json) {
    json rows = json::array();
    for (const auto& r : results)
      for (std::size_t k = 0; k < r.states.size(); ++k) {
        const auto& s = r.states[k];
        rows.push_back({{"realization", r.realization_index},
                        {"state_index", k},
                        {"energy", s.energy},
                        {"E_R", s.E_R},
                        {"xi", s.xi},
                        {"gamma", s.gamma},
                        {"xi_tilde", s.xi_tilde},
                        {"delta", s.delta}});
      }
    return dump(rows);
  }
  CsvWriter csv{"realization", "state_index", "energy", "E_R", "xi", "gamma", "xi_tilde", "delta"};
  for (const auto& r : results)
    for (std::size_t k = 0; k < r.states.size(); ++k) {
      const auto& s = r.states[k];
      csv.row_begin();
      csv.cell(r.realization_index).cell(k).cell(s.energy).cell(s.E_R).cell(s.xi).cell(s.gamma)
          .cell(s.xi_tilde).cell(s.delta);
      csv.row_end();
    }
  return csv.str();
}

std::string format_binned(const BinnedSpectrum& binned, TableFormat format) {
  if (format == TableFormat::json) {
    json rows = json::array();
    for (const auto& b : binned.bins)
      rows.push_back({{"bin_lo", b.lo}, {"bin_hi", b.hi}, {"count", b.count},
                      {"mean_xi", b.mean_xi}, {"mean_gamma", b.mean_gamma},
                      {"reported", b.reported}});
    return dump({{"bin_width", binned.bin_width}, {"E_R_max", binned.E_R_max},
                 {"min_count", binned.min_count}, {"discarded", binned.discarded},
                 {"bins", rows}});
  }
  CsvWriter csv{"bin_lo", "bin_hi", "count", "mean_xi", "mean_gamma", "reported"};
  for (const auto& b : binned.bins) {
    csv.row_begin();
    csv.cell(b.lo).cell(b.hi).cell(b.count).cell(b.mean_xi).cell(b.mean_gamma)
        .cell(b.reported ? 1 : 0);
    csv.row_end();
  }
  return csv.str();
}

std::string format_scaling(std::span<const ScalingResult> series, TableFormat format) {
  if (format == TableFormat::json) {
    json out = json::array();
    for (const auto& s : series) {
      json points = json::array();
      for (const auto& p : s.points)
        points.push_back({{"N_R", p.sites}, {"N", p.hilbert_dimension},
                          {"realizations", p.realizations}, {"mean_xi", p.mean_xi},
                          {"se_xi", p.se_xi}, {"mean_xi_tilde", p.mean_xi_tilde},
                          {"se_xi_tilde", p.se_xi_tilde}, {"mean_gamma", p.mean_gamma},
                          {"se_gamma", p.se_gamma}, {"mean_log10_xi", p.mean_log10_xi},
                          {"mean_log10_xi_tilde", p.mean_log10_xi_tilde},
                          {"mean_gamma_filtered", p.mean_gamma_filtered}});
      out.push_back({{"series", s.label}, {"slope_xi", s.slope_xi},
                     {"slope_mean_log_xi", s.slope_mean_log_xi},
                     {"slope_xi_tilde", s.slope_xi_tilde}, {"gamma_bar", s.gamma_bar},
                     {"gamma_bar_filtered", s.gamma_bar_filtered}, {"points", points}});
    }
    return dump(out);
  }
  CsvWriter csv{"series", "N_R", "N", "realizations", "mean_xi", "se_xi", "mean_xi_tilde",
                "se_xi_tilde", "mean_gamma", "se_gamma", "log10_N_R", "log10_mean_xi",
                "mean_log10_xi", "log10_mean_xi_tilde", "mean_log10_xi_tilde",
                "mean_gamma_filtered"};
  for (const auto& s : series)
    for (const auto& p : s.points) {
      csv.row_begin();
      csv.cell(s.label).cell(p.sites).cell(p.hilbert_dimension).cell(p.realizations)
          .cell(p.mean_xi).cell(p.se_xi).cell(p.mean_xi_tilde).cell(p.se_xi_tilde)
          .cell(p.mean_gamma).cell(p.se_gamma).cell(std::log10(static_cast<double>(p.sites)))
          .cell(std::log10(p.mean_xi)).cell(p.mean_log10_xi).cell(std::log10(p.mean_xi_tilde))
          .cell(p.mean_log10_xi_tilde).cell(p.mean_gamma_filtered);
      csv.row_end();
    }
  return csv.str();
}

std::string format_slopes(std::span<const ScalingResult> series, TableFormat format) {
  if (format == TableFormat::json) {
    json out = json::array();
    for (const auto& s : series)
      out.push_back({{"series", s.label}, {"slope_xi", s.slope_xi},
                     {"slope_mean_log_xi", s.slope_mean_log_xi},
                     {"slope_xi_tilde", s.slope_xi_tilde}, {"gamma_bar", s.gamma_bar},
                     {"gamma_bar_filtered", s.gamma_bar_filtered}});
    return dump(out);
  }
  CsvWriter csv{"series", "slope_xi", "slope_mean_log_xi", "slope_xi_tilde", "gamma_bar",
                "gamma_bar_filtered"};
  for (const auto& s : series) {
    csv.row_begin();
    csv.cell(s.label).cell(s.slope_xi).cell(s.slope_mean_log_xi).cell(s.slope_xi_tilde)
        .cell(s.gamma_bar).cell(s.gamma_bar_filtered);
    csv.row_end();
  }
  return csv.str();
}

std::string format_phase(const PhaseGrid& grid, TableFormat format) {
  if (format == TableFormat::json) {
    json cells = json::array();
    for (std::size_t i = 0; i < grid.lambdas.size(); ++i)
      for (const auto& b : grid.columns[i].bins)
        cells.push_back({{"lambda", grid.lambdas[i]}, {"bin_lo", b.lo}, {"bin_hi", b.hi},
                         {"count", b.count}, {"mean_xi", b.mean_xi},
                         {"mean_gamma", b.mean_gamma}, {"reported", b.reported}});
    return dump({{"bin_width", grid.bin_width}, {"E_R_max", grid.E_R_max}, {"cells", cells}});
  }
  CsvWriter csv{"lambda", "bin_lo", "bin_hi", "count", "mean_xi", "mean_gamma", "reported"};
  for (std::size_t i = 0; i < grid.lambdas.size(); ++i)
    for (const auto& b : grid.columns[i].bins) {
      csv.row_begin();
      csv.cell(grid.lambdas[i]).cell(b.lo).cell(b.hi).cell(b.count).cell(b.mean_xi)
          .cell(b.mean_gamma).cell(b.reported ? 1 : 0);
      csv.row_end();
    }
  return csv.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw IoError("failed writing " + path.string());
}

void write_table(std::span<const RealizationResult> results, TableFormat format,
                 const std::filesystem::path& path) {
  write_text_file(path, format_states(results, format));
}

std::vector<StateRow> read_states_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::string line;
  if (!std::getline(in, line) ||
      line != "realization,state_index,energy,E_R,xi,gamma,xi_tilde,delta")
    throw IoError(path.string() + ": unexpected per-state CSV header");

  std::vector<StateRow> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    StateRow row;
    auto& m = row.metrics;
    if (std::sscanf(line.c_str(), "%zu,%zu,%lf,%lf,%lf,%lf,%lf,%lf", &row.realization,
                    &row.state_index, &m.energy, &m.E_R, &m.xi, &m.gamma, &m.xi_tilde,
                    &m.delta) != 8)
      throw IoError(path.string() + ":" + std::to_string(line_no) + ": malformed row");
    rows.push_back(row);
  }
  return rows;
}

}  // namespace canderson
