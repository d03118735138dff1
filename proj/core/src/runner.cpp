#include "canderson/runner.hpp"

#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "canderson/errors.hpp"
#include "canderson/experiments.hpp"
#include "canderson/hamiltonian.hpp"
#include "canderson/svg.hpp"
#include "canderson/table.hpp"

namespace canderson {

namespace {

const char* kPalette[] = {"#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

std::string short_num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

class Outputs {
 public:
  Outputs(const RunConfig& config, RunReport& report) : config_(config), report_(report) {
    std::error_code ec;
    std::filesystem::create_directories(config.output_dir, ec);
    if (ec) throw IoError("cannot create output directory " + config.output_dir.string());
  }

  // `format` renders one table in the requested format.
  template <typename Format>
  void table(const std::string& stem, Format&& format) {
    if (config_.formats.csv) write(stem + ".csv", format(TableFormat::csv));
    if (config_.formats.json) write(stem + ".json", format(TableFormat::json));
  }
  void svg(const std::string& stem, const std::string& text) {
    if (config_.formats.svg) write(stem + ".svg", text);
  }
  void write(const std::string& name, const std::string& text) {
    const auto path = config_.output_dir / name;
    write_text_file(path, text);
    report_.files.push_back(path);
  }

 private:
  const RunConfig& config_;
  RunReport& report_;
};

RunOptions options_for(const RunConfig& config, std::ostream& log) {
  RunOptions o;
  o.workers = config.workers;
  o.progress = [&log](std::size_t done, std::size_t total, int sites) {
    log << "realization " << done << '/' << total << " done (size " << sites << ")\n";
    log.flush();
  };
  return o;
}

std::size_t series_count(const RunConfig& config) {
  return config.model.is_composite() ? std::max<std::size_t>(config.series.size(), 1) : 1;
}

PlotSeries binned_series(const BinnedSpectrum& b, std::string label, std::string color) {
  PlotSeries s;
  s.label = std::move(label);
  s.color = std::move(color);
  for (const auto& bin : b.bins)
    if (bin.reported) {
      s.x.push_back(0.5 * (bin.lo + bin.hi));
      s.y.push_back(bin.mean_xi);
    }
  return s;
}

void run_spectrum(const RunConfig& config, std::ostream& log, Outputs& out) {
  std::vector<PlotSeries> plot;
  std::vector<std::pair<std::string, std::vector<RealizationResult>>> runs;
  for (std::size_t k = 0; k < series_count(config); ++k) {
    const auto model = series_model(config, k);
    log << "spectrum: " << series_tag(config, k) << ", " << config.realizations
        << " realizations, N = " << model.hilbert_dimension() << '\n';
    runs.emplace_back(series_tag(config, k),
                      run_realizations(model, config.realizations, config.master_seed,
                                       options_for(config, log)));
  }
  if (config.baseline && config.model.is_composite()) {
    log << "spectrum: structureless baseline\n";
    runs.emplace_back("baseline", run_realizations(config.model.structureless(),
                                                   config.realizations, config.master_seed,
                                                   options_for(config, log)));
  }

  for (std::size_t k = 0; k < runs.size(); ++k) {
    const auto& [tag, results] = runs[k];
    const auto binned =
        aggregate_binned(results, config.bin_width, config.E_R_max, config.min_bin_count);
    out.table(tag + "_states", [&](TableFormat f) { return format_states(results, f); });
    out.table(tag + "_binned", [&](TableFormat f) { return format_binned(binned, f); });
    plot.push_back(binned_series(binned, tag, kPalette[k % std::size(kPalette)]));

    std::vector<StateMetrics> pooled;
    for (const auto& r : results) pooled.insert(pooled.end(), r.states.begin(), r.states.end());
    out.svg(tag + "_xi_gamma", render_xi_gamma_scatter(pooled, tag + ": xi vs gamma"));
  }
  PlotStyle style{"IPR averaged within <E_R> bins", "<E_R> / |J|", "mean xi", false, false};
  out.svg("binned", render_line_plot(plot, style));
}

void run_scaling(const RunConfig& config, std::ostream& log, Outputs& out) {
  std::vector<ScalingResult> series;
  for (std::size_t k = 0; k < series_count(config); ++k) {
    log << "scaling: " << series_tag(config, k) << '\n';
    auto s = scaling_sweep(series_model(config, k), config.sizes, config.realizations,
                           config.master_seed, config.E_R_max, options_for(config, log));
    s.label = series_tag(config, k);
    series.push_back(std::move(s));
  }
  if (config.baseline && config.model.is_composite()) {
    // The baseline's most extended state is taken from its entire spectrum.
    log << "scaling: structureless baseline\n";
    auto s = scaling_sweep(config.model.structureless(), config.sizes, config.realizations,
                           config.master_seed, std::numeric_limits<double>::infinity(),
                           options_for(config, log));
    s.label = "baseline";
    series.push_back(std::move(s));
  }
  for (const auto& s : series)
    log << s.label << ": slope_xi = " << s.slope_xi << ", gamma_bar = " << s.gamma_bar << '\n';

  out.table("scaling", [&](TableFormat f) { return format_scaling(series, f); });
  out.table("slopes", [&](TableFormat f) { return format_slopes(series, f); });

  std::vector<PlotSeries> xi_plot, tilde_plot;
  for (std::size_t k = 0; k < series.size(); ++k) {
    PlotSeries a, b;
    a.label = b.label = series[k].label + " (slope " + short_num(series[k].slope_xi) + ")";
    a.color = b.color = kPalette[k % std::size(kPalette)];
    a.dashed = b.dashed = series[k].label == "baseline";
    b.label = series[k].label;
    for (const auto& p : series[k].points) {
      a.x.push_back(p.sites);
      a.y.push_back(p.mean_xi);
      b.x.push_back(p.hilbert_dimension);
      b.y.push_back(p.mean_xi_tilde);
    }
    xi_plot.push_back(std::move(a));
    tilde_plot.push_back(std::move(b));
  }
  out.svg("scaling", render_line_plot(xi_plot, {"IPR of the most extended state", "N_R",
                                                "mean xi", true, true}));
  out.svg("scaling_xi_tilde",
          render_line_plot(tilde_plot, {"joint IPR of the most extended state", "N = N_R d_E",
                                        "mean xi_tilde", true, true}));
}

void run_phase(const RunConfig& config, std::ostream& log, Outputs& out) {
  log << "phase: " << config.lambda_grid.size() << " disorder strengths\n";
  const auto grid = phase_scan(series_model(config, 0), config.lambda_grid, config.realizations,
                               config.master_seed, config.E_R_max, config.bin_width,
                               config.min_bin_count, options_for(config, log));
  out.table("phase", [&](TableFormat f) { return format_phase(grid, f); });
  out.svg("phase", render_heatmap(phase_heatmap(grid),
                                  {"mean xi over (lambda, <E_R>)", "lambda / |J|", "<E_R> / |J|",
                                   false, false}));
}

}  // namespace

ModelConfig series_model(const RunConfig& config, std::size_t index) {
  ModelConfig m = config.model;
  if (config.series.empty() || !m.is_composite()) return m;
  const double v = config.series.at(index);
  if (m.basis.kind == InternalKind::oscillator)
    m.basis.omega = v;
  else
    m.basis.rotational_constant = v;
  return m;
}

std::string series_tag(const RunConfig& config, std::size_t index) {
  const auto& m = config.model;
  if (!m.is_composite()) return std::string(to_string(m.model));
  if (config.series.empty()) return "composite";
  const std::string name = m.basis.kind == InternalKind::oscillator ? "omega" : "inv_r2";
  return name + short_num(config.series.at(index));
}

RunReport run_experiment(const RunConfig& config, std::ostream& log) {
  RunReport report;
  for (std::size_t k = 0; k < series_count(config); ++k) {
    auto model = series_model(config, k);
    if (config.experiment == ExperimentKind::scaling) model.set_sites(config.sizes.back());
    for (auto& w : validate_regime(model, config.E_R_max)) {
      log << "warning: " << w << '\n';
      report.warnings.push_back(std::move(w));
    }
  }
  Outputs out(config, report);

  if (config.dump_hamiltonian && config.experiment != ExperimentKind::validate) {
    auto model = series_model(config, 0);
    if (config.experiment == ExperimentKind::scaling) model.set_sites(config.sizes.front());
    if (config.experiment == ExperimentKind::phase) model.disorder = config.lambda_grid.front();
    const auto h = build_hamiltonian(
        model, sample_model_disorder(model, derive_seed(config.master_seed, 0)));
    std::ostringstream os;
    h.write_coordinate(os);
    out.write("hamiltonian.coo", os.str());
  }

  switch (config.experiment) {
    case ExperimentKind::spectrum: run_spectrum(config, log, out); break;
    case ExperimentKind::scaling: run_scaling(config, log, out); break;
    case ExperimentKind::phase: run_phase(config, log, out); break;
    case ExperimentKind::validate: break;
  }

  nlohmann::json summary{{"experiment", std::string(to_string(config.experiment))},
                         {"model", std::string(to_string(config.model.model))},
                         {"seed", config.master_seed},
                         {"realizations", config.realizations},
                         {"warnings", report.warnings},
                         {"status", "ok"}};
  out.write("summary.json", summary.dump(2) + "\n");
  return report;
}

}  // namespace canderson
