#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "rsphoton/dynamics.hpp"
#include "rsphoton/io.hpp"
#include "rsphoton/qops.hpp"
#include "rsphoton/verify.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

// The coordinator itself is single-threaded; the env var is validated so a
// bad setting fails loudly instead of being silently ignored.
void checkThreadCap() {
  const char* env = std::getenv("RSPHOTON_THREADS");
  if (!env) return;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v < 1)
    throw std::invalid_argument("RSPHOTON_THREADS must be a positive integer");
}

ordered_json loadJson(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config: " + path);
  ordered_json j;
  try {
    in >> j;
  } catch (const ordered_json::exception& e) {
    throw std::invalid_argument("config is not valid JSON: " + std::string(e.what()));
  }
  return j;
}

void writeJson(const fs::path& path, const ordered_json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << j.dump(2) << "\n";
}

rsph::RunConfig makeConfig(const std::string& configPath, const ordered_json** raw,
                           ordered_json& store) {
  if (configPath.empty()) {
    *raw = nullptr;
    return {};
  }
  store = loadJson(configPath);
  *raw = &store;
  return rsph::RunConfig::fromJson(store);
}

int runVerify(const std::string& suite, rsph::RunConfig cfg) {
  const auto results = rsph::runSuites(suite, cfg);
  bool pass = true;
  for (const auto& sr : results)
    for (const auto& c : sr.checks) {
      std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << sr.suite << "/" << c.name
                << " measured=" << c.measured << " tolerance=" << c.tolerance
                << "\n";
      pass = pass && c.pass;
    }

  ordered_json out;
  out["command"] = "verify";
  out["suite"] = suite;
  out["units"] = cfg.units;
  out["grid"] = {{"n", cfg.grid.n}, {"L", cfg.grid.L}};
  out["seed"] = cfg.seed;
  out["pass"] = pass;
  auto& arr = out["suites"] = ordered_json::array();
  for (const auto& sr : results) arr.push_back(sr.toJson());

  fs::create_directories(cfg.outDir);
  writeJson(fs::path(cfg.outDir) / ("verify_" + suite + ".json"), out);
  std::cout << (pass ? "PASS" : "FAIL") << " verify " << suite << "\n";
  return pass ? 0 : 1;
}

int runSimulateModes(const rsph::RunConfig& cfg, const ordered_json* raw) {
  const rsph::PhysicalConstants k = cfg.constants();
  const rsph::GridSpec g = cfg.grid;

  rsph::ModeExpansion exp(g.L);
  if (raw && raw->contains("modes")) {
    ordered_json mj;
    mj["L"] = g.L;
    mj["modes"] = raw->at("modes");
    exp = rsph::modeExpansionFromJson(mj);
  } else {
    exp.add({{1, -2, 2}, +1, +1}, rsph::Complex{1.0});
  }
  if (!exp.fitsGrid(g))
    throw std::invalid_argument("configured modes do not fit the grid");

  double wMin = 1e300;
  for (const auto& [key, a] : exp.amplitudes())
    wMin = std::min(wMin, exp.omega(key, k));
  const double period = 2.0 * 3.14159265358979323846 / wMin;

  // 100 periods of the slowest mode, a snapshot every 5 periods.
  const rsph::EvolutionPlan plan{exp, 0.0, period / 16.0, 1600, 80};
  const auto snaps = rsph::evolve(plan, k);

  const double norm0 = rsph::scalarProductK(exp, exp).real();
  std::vector<std::vector<double>> rows;
  double worstDrift = 0.0, worstResidual = 0.0;
  for (const auto& snap : snaps) {
    const double n = rsph::scalarProductK(snap.amps, snap.amps).real();
    const double drift = std::abs(n - norm0) / norm0;
    const rsph::RSField f = rsph::expandRS(snap.amps, g, 0.0, k);
    const rsph::GradedResidual r = rsph::maxwellResidualRS(f, nullptr, k);
    const double scale = g.dk() * f.E.maxAbs();
    const double res = std::max({r.scalar.maxAbs(), r.vector.maxAbs(),
                                 r.bivec.maxAbs() / k.c, r.trivec.maxAbs() / k.c}) /
                       scale;
    worstDrift = std::max(worstDrift, drift);
    worstResidual = std::max(worstResidual, res);
    rows.push_back({snap.t, n, drift, res});
  }

  fs::create_directories(cfg.outDir);
  rsph::writeCsv((fs::path(cfg.outDir) / "modes_norm.csv").string(),
                 {"t", "norm", "norm_drift", "field_residual"}, rows);
  const bool pass = worstDrift < 1e-12 && worstResidual < 1e-10;
  ordered_json out;
  out["command"] = "simulate";
  out["kind"] = "modes";
  out["seed"] = cfg.seed;
  out["periods"] = 100;
  out["norm_drift"] = worstDrift;
  out["field_residual"] = worstResidual;
  out["pass"] = pass;
  writeJson(fs::path(cfg.outDir) / "modes_result.json", out);
  std::cout << (pass ? "PASS" : "FAIL") << " simulate modes (norm drift "
            << worstDrift << ", residual " << worstResidual << ")\n";
  return pass ? 0 : 1;
}

int runSimulatePulse(const rsph::RunConfig& cfg, const ordered_json* raw) {
  const rsph::PhysicalConstants k = cfg.constants();
  const rsph::GridSpec g = cfg.grid;

  rsph::PulseScenario sc = rsph::PulseScenario::boxDefault(g);
  if (raw && raw->contains("pulse")) {
    const auto& pj = raw->at("pulse");
    if (pj.contains("sigma")) sc.sigma = pj.at("sigma").get<double>();
    if (pj.contains("m0")) {
      const auto& m = pj.at("m0");
      sc.m0 = {m.at(0).get<int>(), m.at(1).get<int>(), m.at(2).get<int>()};
    }
    if (pj.contains("window")) sc.window = pj.at("window").get<double>();
    if (pj.contains("build")) {
      const std::string b = pj.at("build").get<std::string>();
      if (b == "pair")
        sc.build = rsph::PulseScenario::Build::RealConjugatePair;
      else if (b == "positive")
        sc.build = rsph::PulseScenario::Build::PositiveFrequencyOnly;
      else
        throw std::invalid_argument("pulse build must be \"pair\" or \"positive\"");
    }
  }

  const rsph::ModeExpansion pulse = rsph::buildPulse(sc, g, k);
  const double r0 = 5.0 * sc.sigma;
  const double tContact = (g.L / 2.0 - r0) / k.c;

  // Last snapshots sit past cone contact.
  const rsph::EvolutionPlan plan{pulse, 0.0, 1.25 * tContact / 10.0, 10, 1};
  const auto snaps = rsph::evolve(plan, k);
  const rsph::CausalityReport rep =
      rsph::causalityScan(snaps, sc.x0, r0, g, k, 1e-6);

  fs::create_directories(cfg.outDir);
  const rsph::RSField last = rsph::expandRS(snaps.back().amps, g, 0.0, k);
  const auto profile = rsph::radialProfile(last, sc.x0, k);
  std::vector<std::vector<double>> rows;
  for (const auto& [r, frac] : profile) rows.push_back({r, frac});
  rsph::writeCsv((fs::path(cfg.outDir) / "pulse_profile.csv").string(),
                 {"radius", "enclosed_energy_fraction"}, rows);

  ordered_json out = rsph::causalityReportToJson(rep);
  out["command"] = "simulate";
  out["kind"] = "pulse";
  out["build"] = sc.build == rsph::PulseScenario::Build::RealConjugatePair
                     ? "pair"
                     : "positive";
  writeJson(fs::path(cfg.outDir) / "causality_report.json", out);
  std::cout << (rep.pass ? "PASS" : "FAIL") << " simulate pulse ("
            << rep.rows.size() << " snapshots, r0 = " << rep.r0 << ")\n";
  // A positive-frequency-only pulse is expected to show an immediate tail;
  // the report records it without failing the run.
  if (sc.build == rsph::PulseScenario::Build::PositiveFrequencyOnly) return 0;
  return rep.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Paravector electromagnetics verifier and simulator"};
  app.require_subcommand(1);

  std::string verifySuite, verifyConfig, verifyOut;
  unsigned verifySeed = 0;
  bool seedSet = false, outSet = false;
  auto* verify = app.add_subcommand("verify", "Run a named verification suite");
  verify->add_option("suite", verifySuite,
                     "algebra, maxwell, noether, quantum, or all")
      ->required();
  verify->add_option("--config", verifyConfig, "JSON run configuration");
  verify->add_option("--seed", verifySeed, "Override the configured seed")
      ->each([&](const std::string&) { seedSet = true; });
  verify->add_option("--out", verifyOut, "Output directory for JSON results")
      ->each([&](const std::string&) { outSet = true; });

  std::string simKind, simConfig, simOut = ".";
  auto* simulate = app.add_subcommand("simulate", "Run a simulation scenario");
  simulate->add_option("kind", simKind, "modes or pulse")->required();
  simulate->add_option("--config", simConfig, "JSON run configuration");
  simulate->add_option("--out", simOut, "Output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    checkThreadCap();
    ordered_json store;
    const ordered_json* raw = nullptr;
    if (verify->parsed()) {
      rsph::RunConfig cfg = makeConfig(verifyConfig, &raw, store);
      if (seedSet) cfg.seed = verifySeed;
      if (outSet) cfg.outDir = verifyOut;
      return runVerify(verifySuite, cfg);
    }
    rsph::RunConfig cfg = makeConfig(simConfig, &raw, store);
    cfg.outDir = simOut;
    if (simKind == "modes") return runSimulateModes(cfg, raw);
    if (simKind == "pulse") return runSimulatePulse(cfg, raw);
    throw std::invalid_argument("unknown simulation kind: " + simKind);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
