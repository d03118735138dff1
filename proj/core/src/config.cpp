#include "canderson/config.hpp"

#include <yaml-cpp/yaml.h>

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "canderson/errors.hpp"

namespace canderson {

std::string_view to_string(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::spectrum: return "spectrum";
    case ExperimentKind::scaling: return "scaling";
    case ExperimentKind::phase: return "phase";
    case ExperimentKind::validate: return "validate";
  }
  return "unknown";
}

ExperimentKind parse_experiment(std::string_view name) {
  for (auto k : {ExperimentKind::spectrum, ExperimentKind::scaling, ExperimentKind::phase,
                 ExperimentKind::validate})
    if (to_string(k) == name) return k;
  throw ConfigError("experiment", "experiment: unknown kind '" + std::string(name) + "'");
}

OutputFormats parse_formats(std::string_view list) {
  OutputFormats f{false, false, false};
  std::stringstream ss{std::string(list)};
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "csv") f.csv = true;
    else if (item == "json") f.json = true;
    else if (item == "svg") f.svg = true;
    else throw ConfigError("formats", "formats: unknown output format '" + item + "'");
  }
  return f;
}

namespace {

const std::set<std::string> kTopLevelKeys = {
    "experiment", "model",      "N_R",         "L_x",          "L_y",
    "J",          "a",          "omega",       "r",            "inv_r2",
    "lambda",     "states",     "boundary",    "include_internal_energy_in_ER",
    "cutoff_tail", "realizations", "seed",     "sizes",        "lambda_grid",
    "series",     "baseline",   "bin_width",   "E_R_max",      "min_bin_count",
    "output",     "workers",    "dump_hamiltonian"};
const std::set<std::string> kOutputKeys = {"dir", "formats"};

template <typename T>
T get(const YAML::Node& node, const std::string& key) {
  try {
    return node.as<T>();
  } catch (const YAML::Exception&) {
    throw ConfigError(key, key + ": value has the wrong type");
  }
}

void reject_unknown(const YAML::Node& map, const std::set<std::string>& allowed,
                    const std::string& prefix) {
  for (const auto& kv : map) {
    const auto key = kv.first.as<std::string>();
    if (!allowed.contains(key))
      throw ConfigError(prefix + key, prefix + key + ": unknown configuration key");
  }
}

void require(bool ok, const std::string& key, const std::string& message) {
  if (!ok) throw ConfigError(key, key + ": " + message);
}

}  // namespace

RunConfig parse_config(const std::string& text, std::optional<ExperimentKind> experiment) {
  YAML::Node parsed;
  try {
    parsed = YAML::Load(text);
  } catch (const YAML::Exception& e) {
    throw ConfigError("", std::string("config is not valid YAML/JSON: ") + e.what());
  }
  const YAML::Node& root = parsed;
  if (!root.IsMap()) throw ConfigError("", "config must be a key/value map");
  reject_unknown(root, kTopLevelKeys, "");

  RunConfig rc;
  auto& m = rc.model;
  if (root["experiment"])
    rc.experiment = parse_experiment(get<std::string>(root["experiment"], "experiment"));
  if (experiment) rc.experiment = *experiment;

  require(static_cast<bool>(root["model"]), "model", "is required");
  try {
    m.model = parse_model(get<std::string>(root["model"], "model"));
  } catch (const InvalidParameter& e) {
    throw ConfigError("model", e.what());
  }

  if (m.model == Model::rotor2d) m.basis = InternalBasis::rotor(2.0, 0.25);
  if (root["omega"]) m.basis.omega = get<double>(root["omega"], "omega");
  if (root["r"]) m.basis.radius = get<double>(root["r"], "r");
  require(!(m.basis.radius <= 0.0), "r", "rotor radius must be > 0");
  m.basis.rotational_constant = 1.0 / (m.basis.radius * m.basis.radius);
  if (root["inv_r2"]) m.basis.rotational_constant = get<double>(root["inv_r2"], "inv_r2");
  if (root["states"]) m.basis.states = get<std::vector<int>>(root["states"], "states");

  if (root["J"]) m.hopping = get<double>(root["J"], "J");
  if (root["a"]) m.spacing = get<double>(root["a"], "a");
  require(static_cast<bool>(root["lambda"]) || root["lambda_grid"], "lambda", "is required");
  m.disorder = root["lambda"] ? get<double>(root["lambda"], "lambda") : 0.0;
  require(m.disorder >= 0.0, "lambda", "disorder strength must be >= 0");
  if (root["boundary"]) {
    try {
      m.boundary = parse_boundary(get<std::string>(root["boundary"], "boundary"));
    } catch (const InvalidParameter& e) {
      throw ConfigError("boundary", e.what());
    }
  }
  if (root["include_internal_energy_in_ER"])
    m.include_internal_energy_in_ER =
        get<bool>(root["include_internal_energy_in_ER"], "include_internal_energy_in_ER");
  if (root["cutoff_tail"]) m.cutoff_tail = get<double>(root["cutoff_tail"], "cutoff_tail");

  // Lattice: N_R (chain length, or a perfect square in 2D) or explicit L_x/L_y.
  if (root["L_x"] || root["L_y"]) {
    require(m.is_two_dimensional(), "L_x", "only 2D models take L_x/L_y");
    require(root["L_x"] && root["L_y"], "L_y", "L_x and L_y must be given together");
    m.length_x = get<int>(root["L_x"], "L_x");
    m.length_y = get<int>(root["L_y"], "L_y");
    require(m.length_x >= 1 && m.length_y >= 1 && m.sites() >= 2, "L_x",
            "lattice must have at least 2 sites");
  } else if (root["N_R"]) {
    const int n = get<int>(root["N_R"], "N_R");
    require(n >= 2, "N_R", "lattice must have at least 2 sites");
    try {
      m.set_sites(n);
    } catch (const InvalidParameter& e) {
      throw ConfigError("N_R", e.what());
    }
  } else if (!root["sizes"]) {
    throw ConfigError("N_R", "N_R: lattice size is required");
  }

  if (root["realizations"]) {
    const int n = get<int>(root["realizations"], "realizations");
    require(n >= 1, "realizations", "must be >= 1");
    rc.realizations = static_cast<std::size_t>(n);
  }
  if (root["seed"]) rc.master_seed = get<std::uint64_t>(root["seed"], "seed");
  if (root["sizes"]) rc.sizes = get<std::vector<int>>(root["sizes"], "sizes");
  for (int s : rc.sizes) require(s >= 2, "sizes", "every size must be >= 2");
  if (root["lambda_grid"]) rc.lambda_grid = get<std::vector<double>>(root["lambda_grid"], "lambda_grid");
  for (double l : rc.lambda_grid) require(l >= 0.0, "lambda_grid", "values must be >= 0");
  if (root["series"]) rc.series = get<std::vector<double>>(root["series"], "series");
  for (double v : rc.series) require(v > 0.0, "series", "values must be > 0");
  if (root["baseline"]) rc.baseline = get<bool>(root["baseline"], "baseline");
  if (root["bin_width"]) rc.bin_width = get<double>(root["bin_width"], "bin_width");
  require(rc.bin_width > 0.0, "bin_width", "must be > 0");
  rc.E_R_max = m.is_two_dimensional() ? 3.0 : 1.5;
  if (root["E_R_max"]) rc.E_R_max = get<double>(root["E_R_max"], "E_R_max");
  require(rc.E_R_max > 0.0, "E_R_max", "must be > 0");
  if (root["min_bin_count"]) {
    const int n = get<int>(root["min_bin_count"], "min_bin_count");
    require(n >= 1, "min_bin_count", "must be >= 1");
    rc.min_bin_count = static_cast<std::size_t>(n);
  }
  if (root["workers"]) {
    rc.workers = get<int>(root["workers"], "workers");
    require(rc.workers >= 1, "workers", "must be >= 1");
  } else {
    rc.workers = workers_from_environment(1);
  }
  if (root["dump_hamiltonian"]) rc.dump_hamiltonian = get<bool>(root["dump_hamiltonian"], "dump_hamiltonian");

  if (const auto out = root["output"]) {
    require(out.IsMap(), "output", "must be a map with dir/formats");
    reject_unknown(out, kOutputKeys, "output.");
    if (out["dir"]) rc.output_dir = get<std::string>(out["dir"], "output.dir");
    if (out["formats"]) {
      const auto& f = out["formats"];
      if (f.IsSequence()) {
        std::string joined;
        for (const auto& item : f) joined += (joined.empty() ? "" : ",") + get<std::string>(item, "output.formats");
        rc.formats = parse_formats(joined);
      } else {
        rc.formats = parse_formats(get<std::string>(f, "output.formats"));
      }
    }
  }

  if (rc.experiment == ExperimentKind::scaling) {
    require(rc.sizes.size() >= 3, "sizes", "scaling needs at least three sizes");
    for (std::size_t i = 1; i < rc.sizes.size(); ++i)
      require(rc.sizes[i] > rc.sizes[i - 1], "sizes", "must be strictly increasing");
  }
  if (rc.experiment == ExperimentKind::phase) {
    require(!rc.lambda_grid.empty(), "lambda_grid", "phase scans need a lambda grid");
    for (std::size_t i = 1; i < rc.lambda_grid.size(); ++i)
      require(rc.lambda_grid[i] > rc.lambda_grid[i - 1], "lambda_grid",
              "must be strictly ascending");
  }

  try {
    if (rc.experiment == ExperimentKind::scaling) {
      for (int s : rc.sizes) ModelConfig(m).set_sites(s);
      m.set_sites(rc.sizes.front());
    }
    m.validate();
  } catch (const InvalidParameter& e) {
    const std::string what = e.what();
    const auto colon = what.find(':');
    const auto key = colon == std::string::npos ? std::string() : what.substr(0, colon);
    throw ConfigError(key == "N_R" && rc.experiment == ExperimentKind::scaling ? "sizes" : key,
                      what);
  }
  return rc;
}

RunConfig load_config(const std::filesystem::path& path,
                      std::optional<ExperimentKind> experiment) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("", "cannot open config file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str(), experiment);
}

int workers_from_environment(int fallback) {
  const char* env = std::getenv("COMPOSITE_ANDERSON_WORKERS");
  if (env == nullptr || *env == '\0') return fallback;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1)
    throw ConfigError("COMPOSITE_ANDERSON_WORKERS",
                      "COMPOSITE_ANDERSON_WORKERS: must be a positive integer");
  return static_cast<int>(v);
}

}  // namespace canderson
