// Runs the canderson executable end to end.

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "canderson/table.hpp"

namespace fs = std::filesystem;

namespace {

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome run(const std::string& args, const fs::path& dir) {
  const auto out = dir / "stdout.txt", err = dir / "stderr.txt";
  const std::string cmd = std::string(CANDERSON_CLI_PATH) + " " + args + " > " + out.string() +
                          " 2> " + err.string();
  const int raw = std::system(cmd.c_str());
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, slurp(out), slurp(err)};
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("canderson_cli_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

}  // namespace

TEST_CASE("spectrum run writes tables and plots") {
  const auto dir = scratch("spectrum");
  write(dir / "run.yaml",
        "model: oscillator1d\nN_R: 24\nomega: 0.3\nlambda: 3\nstates: [0, 2, 4]\n"
        "realizations: 3\nseed: 5\n");
  const auto r = run("spectrum --config " + (dir / "run.yaml").string() + " --out " +
                         (dir / "out").string() + " --format csv,json,svg",
                     dir);
  CHECK(r.status == 0);
  CHECK(r.out.find("realization 3/3 done (size 24)") != std::string::npos);
  for (const char* f : {"composite_states.csv", "composite_states.json", "composite_binned.csv",
                        "composite_xi_gamma.svg", "baseline_states.csv", "binned.svg",
                        "summary.json"})
    CHECK_MESSAGE(fs::exists(dir / "out" / f), f);
  const auto rows = canderson::read_states_csv(dir / "out" / "composite_states.csv");
  CHECK(rows.size() == 3 * 72);
  const auto summary = nlohmann::json::parse(slurp(dir / "out" / "summary.json"));
  CHECK(summary["status"] == "ok");
  CHECK(summary["seed"] == 5);
  fs::remove_all(dir);
}

TEST_CASE("seed flag overrides the config and output is reproducible") {
  const auto dir = scratch("seed");
  write(dir / "run.yaml", "model: anderson1d\nN_R: 30\nlambda: 2\nrealizations: 4\nseed: 1\n");
  const auto cfg = (dir / "run.yaml").string();
  auto csv = [&](const std::string& extra, const std::string& sub) {
    CHECK(run("spectrum --config " + cfg + " --format csv --out " + (dir / sub).string() + extra, dir).status == 0);
    return slurp(dir / sub / "anderson1d_states.csv");
  };
  const auto a = csv("", "a");
  const auto b = csv(" --workers 3", "b");
  const auto c = csv(" --seed 2", "c");
  CHECK(a == b);
  CHECK(a != c);
  CHECK(a.find("\r") == std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("invalid configs exit nonzero with a JSON report") {
  const auto dir = scratch("invalid");
  write(dir / "bad.yaml", "model: oscillator1d\nN_R: 50\nlambda: -1\n");
  const auto r = run("spectrum --config " + (dir / "bad.yaml").string(), dir);
  CHECK(r.status != 0);
  const auto report = nlohmann::json::parse(r.err);
  CHECK(report["status"] == "error");
  CHECK(report["kind"] == "config");
  CHECK(report["key"] == "lambda");
  CHECK(run("spectrum --config " + (dir / "missing.yaml").string(), dir).status != 0);
  CHECK(run("frobnicate", dir).status != 0);
  fs::remove_all(dir);
}

TEST_CASE("validate reports regime warnings without failing") {
  const auto dir = scratch("validate");
  write(dir / "ok.yaml", "model: rotor2d\nN_R: 900\nlambda: 4\nstates: [0, 2, 4]\n");
  write(dir / "high.yaml", "model: rotor2d\nN_R: 900\nlambda: 4\nstates: [0, 2, 20]\n");
  const auto ok = run("validate --config " + (dir / "ok.yaml").string() + " --out " + (dir / "o1").string(), dir);
  CHECK(ok.status == 0);
  CHECK(ok.out.find("warning") == std::string::npos);
  const auto high = run("validate --config " + (dir / "high.yaml").string() + " --out " + (dir / "o2").string(), dir);
  CHECK(high.status == 0);
  CHECK(high.out.find("warning") != std::string::npos);
  const auto summary = nlohmann::json::parse(slurp(dir / "o2" / "summary.json"));
  CHECK(summary["warnings"].size() == 1);
  fs::remove_all(dir);
}

TEST_CASE("scaling and phase subcommands") {
  const auto dir = scratch("scaling");
  write(dir / "s.yaml",
        "model: oscillator1d\nlambda: 3\nstates: [0, 2]\nrealizations: 2\nsizes: [10, 14, 18]\n"
        "series: [0.3, 1.2]\n");
  const auto s = run("scaling --config " + (dir / "s.yaml").string() + " --out " + (dir / "s").string(), dir);
  CHECK(s.status == 0);
  const auto slopes = slurp(dir / "s" / "slopes.csv");
  CHECK(slopes.find("omega0.3,") != std::string::npos);
  CHECK(slopes.find("omega1.2,") != std::string::npos);
  CHECK(slopes.find("baseline,") != std::string::npos);
  CHECK(fs::exists(dir / "s" / "scaling.svg"));

  write(dir / "p.yaml", "model: rotor2d\nN_R: 16\nlambda_grid: [0.5, 1, 2]\nrealizations: 2\n"
                        "dump_hamiltonian: true\n");
  const auto p = run("phase --config " + (dir / "p.yaml").string() + " --out " + (dir / "p").string(), dir);
  CHECK(p.status == 0);
  CHECK(fs::exists(dir / "p" / "phase.csv"));
  CHECK(fs::exists(dir / "p" / "phase.svg"));
  CHECK(fs::exists(dir / "p" / "hamiltonian.coo"));
  fs::remove_all(dir);
}
