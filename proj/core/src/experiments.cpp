#include "canderson/experiments.hpp"

#include <cmath>
#include <mutex>
#include <numeric>
#include <string>

#include "canderson/errors.hpp"
#include "canderson/hamiltonian.hpp"
#include "canderson/parallel.hpp"
#include "canderson/spectral.hpp"

namespace canderson {

namespace {

struct Moments {
  double mean = 0.0;
  double standard_error = 0.0;
};

Moments moments(std::span<const double> v) {
  Moments m;
  if (v.empty()) return m;
  const double n = static_cast<double>(v.size());
  m.mean = std::accumulate(v.begin(), v.end(), 0.0) / n;
  if (v.size() > 1) {
    double ss = 0.0;
    for (double x : v) ss += (x - m.mean) * (x - m.mean);
    m.standard_error = std::sqrt(ss / (n - 1.0)) / std::sqrt(n);
  }
  return m;
}

}  // namespace

RealizationResult run_single_realization(const ModelConfig& config,
                                         std::size_t realization_index,
                                         std::uint64_t master_seed) {
  RealizationResult result;
  result.realization_index = realization_index;
  result.seed = derive_seed(master_seed, realization_index);

  const auto context = [&] {
    return " (realization " + std::to_string(realization_index) + ", seed " +
           std::to_string(result.seed) + ", N_R " + std::to_string(config.sites()) + ")";
  };
  try {
    const auto disorder = sample_model_disorder(config, result.seed);
    const auto h = build_hamiltonian(config, disorder);
    const auto solution = eigendecompose(h);
    const BasisLayout layout{config.sites(), config.internal_dimension()};
    result.states = spectrum_metrics(solution, layout, translational_operator(config));

    for (std::size_t k = 0; k < result.states.size(); ++k) {
      const auto problem =
          check_state_invariants(result.states[k], layout.entanglement_dimension());
      if (!problem.empty())
        throw InvariantViolation("state " + std::to_string(k) + ": " + problem);
    }
  } catch (const InvariantViolation& e) {
    throw InvariantViolation(e.what() + context());
  } catch (const CoverageError& e) {
    throw CoverageError(e.what() + context());
  } catch (const InvalidInput& e) {
    throw InvalidInput(e.what() + context());
  } catch (const InvalidParameter& e) {
    throw InvalidParameter(e.what() + context());
  }
  return result;
}

std::vector<RealizationResult> run_realizations(const ModelConfig& config, std::size_t count,
                                                std::uint64_t master_seed,
                                                const RunOptions& options) {
  config.validate();
  // Parallelism lives at the realization level; single-threaded BLAS keeps the
  // output bit-identical for any worker count.
  set_blas_threads(1);
  std::vector<RealizationResult> results(count);
  std::mutex progress_mutex;
  std::size_t done = 0;
  parallel_for(count, options.workers, [&](std::size_t i) {
    results[i] = run_single_realization(config, i, master_seed);
    if (options.progress) {
      std::lock_guard lock(progress_mutex);
      options.progress(++done, count, config.sites());
    }
  });
  return results;
}

std::size_t BinnedSpectrum::retained() const {
  std::size_t n = 0;
  for (const auto& b : bins) n += b.count;
  return n;
}

BinnedSpectrum aggregate_binned(std::span<const RealizationResult> results, double bin_width,
                                double E_R_max, std::size_t min_count) {
  if (!(bin_width > 0.0)) throw InvalidParameter("bin_width must be > 0");
  if (!(E_R_max > 0.0)) throw InvalidParameter("E_R_max must be > 0");

  BinnedSpectrum out;
  out.bin_width = bin_width;
  out.E_R_max = E_R_max;
  out.min_count = min_count;
  const auto nbins = static_cast<std::size_t>(std::ceil(E_R_max / bin_width));
  out.bins.resize(nbins);
  for (std::size_t k = 0; k < nbins; ++k) {
    out.bins[k].lo = static_cast<double>(k) * bin_width;
    out.bins[k].hi = std::min(static_cast<double>(k + 1) * bin_width, E_R_max);
  }

  std::vector<double> sum_xi(nbins, 0.0), sum_gamma(nbins, 0.0);
  for (const auto& r : results) {
    for (const auto& s : r.states) {
      if (!(s.E_R < E_R_max)) {
        ++out.discarded;
        continue;
      }
      // H_R is positive semidefinite; tiny negative round-off lands in bin 0.
      auto k = s.E_R <= 0.0 ? 0 : static_cast<std::size_t>(std::floor(s.E_R / bin_width));
      k = std::min(k, nbins - 1);
      ++out.bins[k].count;
      sum_xi[k] += s.xi;
      sum_gamma[k] += s.gamma;
    }
  }
  for (std::size_t k = 0; k < nbins; ++k) {
    auto& b = out.bins[k];
    if (b.count > 0) {
      b.mean_xi = sum_xi[k] / static_cast<double>(b.count);
      b.mean_gamma = sum_gamma[k] / static_cast<double>(b.count);
    }
    b.reported = b.count >= min_count && b.count > 0;
  }
  return out;
}

std::size_t most_extended_index(const RealizationResult& result, double E_R_threshold) {
  std::size_t best = result.states.size();
  for (std::size_t k = 0; k < result.states.size(); ++k) {
    const auto& s = result.states[k];
    if (!(s.E_R < E_R_threshold)) continue;
    if (best == result.states.size() || s.xi < result.states[best].xi - 1e-12) best = k;
  }
  if (best == result.states.size())
    throw EmptySelection("no eigenstate with <E_R> < " + std::to_string(E_R_threshold) +
                         " in realization " + std::to_string(result.realization_index));
  return best;
}

StateMetrics select_most_extended(const RealizationResult& result, double E_R_threshold) {
  return result.states[most_extended_index(result, E_R_threshold)];
}

PooledMean pooled_mean(std::span<const RealizationResult> results, double E_R_max) {
  PooledMean out;
  for (const auto& r : results)
    for (const auto& s : r.states)
      if (s.E_R < E_R_max) {
        ++out.count;
        out.mean_xi += s.xi;
        out.mean_gamma += s.gamma;
      }
  if (out.count > 0) {
    out.mean_xi /= static_cast<double>(out.count);
    out.mean_gamma /= static_cast<double>(out.count);
  }
  return out;
}

LinearFit fit_line(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2)
    throw InvalidParameter("line fit needs at least two (x, y) pairs");
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx == 0.0) throw InvalidParameter("line fit needs distinct x values");
  LinearFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  return fit;
}

ScalingResult scaling_sweep(const ModelConfig& config_template, std::span<const int> sizes,
                            std::size_t n_realizations, std::uint64_t master_seed,
                            double E_R_threshold, const RunOptions& options) {
  if (sizes.size() < 3) throw InvalidParameter("sizes: scaling needs at least three sizes");
  for (std::size_t i = 1; i < sizes.size(); ++i)
    if (sizes[i] <= sizes[i - 1]) throw InvalidParameter("sizes: must be strictly increasing");
  if (n_realizations < 1) throw InvalidParameter("realizations: must be >= 1");

  ScalingResult out;
  out.label = std::string(to_string(config_template.model));
  double gamma_sum = 0.0, filtered_sum = 0.0;
  std::size_t gamma_count = 0, filtered_count = 0;

  for (int size : sizes) {
    ModelConfig config = config_template;
    config.set_sites(size);
    const auto results = run_realizations(config, n_realizations, master_seed, options);

    std::vector<double> xi, xi_tilde, gamma, log_xi, log_xi_tilde;
    for (const auto& r : results) {
      const auto s = select_most_extended(r, E_R_threshold);
      xi.push_back(s.xi);
      xi_tilde.push_back(s.xi_tilde);
      gamma.push_back(s.gamma);
      log_xi.push_back(std::log10(s.xi));
      log_xi_tilde.push_back(std::log10(s.xi_tilde));
    }
    const auto pooled = pooled_mean(results, E_R_threshold);

    ScalingPoint p;
    p.sites = config.sites();
    p.hilbert_dimension = config.hilbert_dimension();
    p.realizations = n_realizations;
    const auto mx = moments(xi), mxt = moments(xi_tilde), mg = moments(gamma);
    p.mean_xi = mx.mean;
    p.se_xi = mx.standard_error;
    p.mean_xi_tilde = mxt.mean;
    p.se_xi_tilde = mxt.standard_error;
    p.mean_gamma = mg.mean;
    p.se_gamma = mg.standard_error;
    p.mean_log10_xi = moments(log_xi).mean;
    p.mean_log10_xi_tilde = moments(log_xi_tilde).mean;
    p.mean_gamma_filtered = pooled.mean_gamma;
    out.points.push_back(p);

    gamma_sum += std::accumulate(gamma.begin(), gamma.end(), 0.0);
    gamma_count += gamma.size();
    filtered_sum += pooled.mean_gamma * static_cast<double>(pooled.count);
    filtered_count += pooled.count;
  }

  std::vector<double> log_n, log_dim, y_xi, y_log_xi, y_xi_tilde;
  for (const auto& p : out.points) {
    log_n.push_back(std::log10(static_cast<double>(p.sites)));
    log_dim.push_back(std::log10(static_cast<double>(p.hilbert_dimension)));
    y_xi.push_back(std::log10(p.mean_xi));
    y_log_xi.push_back(p.mean_log10_xi);
    y_xi_tilde.push_back(std::log10(p.mean_xi_tilde));
  }
  out.slope_xi = fit_line(log_n, y_xi).slope;
  out.slope_mean_log_xi = fit_line(log_n, y_log_xi).slope;
  out.slope_xi_tilde = fit_line(log_dim, y_xi_tilde).slope;
  out.gamma_bar = gamma_sum / static_cast<double>(gamma_count);
  out.gamma_bar_filtered =
      filtered_count > 0 ? filtered_sum / static_cast<double>(filtered_count) : 0.0;
  return out;
}

PhaseGrid phase_scan(const ModelConfig& config_template, std::span<const double> lambda_grid,
                     std::size_t n_realizations, std::uint64_t master_seed, double E_R_max,
                     double bin_width, std::size_t min_count, const RunOptions& options) {
  if (lambda_grid.empty()) throw InvalidParameter("lambda_grid: must not be empty");
  for (std::size_t i = 1; i < lambda_grid.size(); ++i)
    if (!(lambda_grid[i] > lambda_grid[i - 1]))
      throw InvalidParameter("lambda_grid: must be strictly ascending");

  PhaseGrid grid;
  grid.lambdas.assign(lambda_grid.begin(), lambda_grid.end());
  grid.bin_width = bin_width;
  grid.E_R_max = E_R_max;
  for (double lambda : lambda_grid) {
    ModelConfig config = config_template;
    config.disorder = lambda;
    const auto results = run_realizations(config, n_realizations, master_seed, options);
    grid.columns.push_back(aggregate_binned(results, bin_width, E_R_max, min_count));
  }
  for (const auto& b : grid.columns.front().bins) grid.bin_edges.push_back(b.lo);
  return grid;
}

}  // namespace canderson
