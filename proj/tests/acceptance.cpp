// Acceptance harness: one line per criterion, nonzero exit when any fails.
// argv[1] is the path to the command-line binary (used by the last criterion).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include "rsphoton/dynamics.hpp"
#include "rsphoton/qops.hpp"
#include "rsphoton/verify.hpp"

using namespace rsph;
namespace fs = std::filesystem;

namespace {

int failures = 0;

void report(int n, const std::string& what, bool ok, const std::string& detail = "") {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << n << ": " << what;
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << "\n";
  if (!ok) ++failures;
}

double seconds(const std::chrono::steady_clock::time_point& start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

const CheckResult* find(const SuiteResult& s, const std::string& name) {
  for (const auto& c : s.checks)
    if (c.name == name) return &c;
  return nullptr;
}

bool checkPass(const SuiteResult& s, std::initializer_list<const char*> names,
               std::string* detail) {
  bool ok = true;
  std::ostringstream d;
  for (const char* n : names) {
    const CheckResult* c = find(s, n);
    if (!c) {
      d << n << " missing; ";
      ok = false;
      continue;
    }
    if (!c->pass) {
      d << n << " measured " << c->measured << " > " << c->tolerance << "; ";
      ok = false;
    }
  }
  *detail = d.str();
  return ok;
}

int runCommand(const std::string& cmd) {
  const int status = std::system(cmd.c_str());
  if (status == -1) return -1;
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

double mvDiff(const Multivector& a, const Multivector& b) { return (a - b).maxAbs(); }

}  // namespace

int main(int argc, char** argv) {
  const RunConfig cfg;  // defaults: natural units, 32^3, seed 42
  const PhysicalConstants kc = cfg.constants();
  const GridSpec g = cfg.grid;

  // 1: basis product table, associativity, pseudoscalar identities, < 1 s.
  {
    const auto start = std::chrono::steady_clock::now();
    const SuiteResult s = runSuites("algebra", cfg).front();
    const double dt = seconds(start);
    std::string detail;
    bool ok = checkPass(s, {"basis-products", "associativity"}, &detail);
    const Multivector i = Multivector::trivector();
    ok = ok && (gp(i, i) + Multivector::scalar(1.0)).maxAbs() == 0.0;
    ok = ok && mvDiff(gp(i, Multivector::blade(Blade::E3)),
                      Multivector::blade(Blade::E12)) == 0.0;
    ok = ok && dt < 1.0;
    report(1, "blade algebra", ok, detail);
  }

  // 2: paravector product specialization on 1000 random pairs.
  {
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    double worst = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
      const Paravector u{{d(rng), d(rng)},
                         {{d(rng), d(rng)}, {d(rng), d(rng)}, {d(rng), d(rng)}}};
      const Paravector v{{d(rng), d(rng)},
                         {{d(rng), d(rng)}, {d(rng), d(rng)}, {d(rng), d(rng)}}};
      worst = std::max(worst,
                       mvDiff(paravectorProduct(u, v),
                              gp(Multivector::paravector(u), Multivector::paravector(v))));
    }
    report(2, "paravector product", worst < 1e-15,
           "max deviation " + std::to_string(worst));
  }

  SuiteResult maxwell;
  double maxwellSeconds = 0.0;
  {
    const auto start = std::chrono::steady_clock::now();
    maxwell = runSuites("maxwell", cfg).front();
    maxwellSeconds = seconds(start);
  }

  // 3: graded residual vs classical split; vacuum plane waves; < 30 s.
  {
    std::string detail;
    bool ok = checkPass(
        maxwell, {"graded-matches-classical", "vacuum-plane-wave-residual"}, &detail);
    ok = ok && maxwellSeconds < 30.0;
    report(3, "graded Maxwell split", ok, detail);
  }

  // 4: gauge invariance of E, B, residual; gauge scalar shifts correctly.
  {
    std::string detail;
    report(4, "gauge invariance", checkPass(maxwell, {"gauge-invariance"}, &detail),
           detail);
  }

  // 5: plane-wave identities at 5 random lattice k for all sign pairs.
  {
    std::mt19937_64 rng(cfg.seed + 5);
    std::uniform_int_distribution<int> mi(-5, 5);
    std::uniform_real_distribution<double> d(0.0, g.L);
    double worst = 0.0;
    for (int trial = 0; trial < 5; ++trial) {
      std::array<int, 3> m{};
      do m = {mi(rng), mi(rng), mi(rng)};
      while (!m[0] && !m[1] && !m[2]);
      const Vec3 kv{m[0] * g.dk(), m[1] * g.dk(), m[2] * g.dk()};
      const double kmag = norm(kv);
      const Vec3 x{d(rng), d(rng), d(rng)};
      const double t = d(rng) / kc.c;
      for (int eps : {+1, -1})
        for (int lam : {+1, -1}) {
          const ModeWave w{kv, eps, lam, Complex{0.8, -0.5}};
          const CVec3 E = planeWaveE(w, x, t, kc);
          const CVec3 cB = planeWaveB(w, x, t, kc) * Complex{kc.c};
          const CVec3 wantB = E * (-kJ * double(eps * lam));
          worst = std::max({worst, std::abs(cB.x - wantB.x), std::abs(cB.y - wantB.y),
                            std::abs(cB.z - wantB.z)});
          // F = (1 - i j eps lam) E as a multivector.
          const Multivector F = planeWaveF(w, x, t, kc);
          const Multivector vecE = Multivector::vector(E);
          worst = std::max(
              worst, mvDiff(F, vecE - mulTrivector(vecE) * (kJ * double(eps * lam))));
          // curl F = lam k F (componentwise j k x).
          const CVec3 curlE = cross(kv.complex(), E) * kJ;
          const CVec3 curlcB = cross(kv.complex(), cB) * kJ;
          const Multivector curlF =
              Multivector::vector(curlE) + Multivector::bivector(curlcB);
          worst = std::max(worst, mvDiff(curlF, F * Complex{lam * kmag}));
          // i dct F = curl F.
          const Multivector idctF = mulTrivector(F) * (-kJ * double(eps) * kmag);
          worst = std::max(worst, mvDiff(idctF, curlF));
        }
    }
    report(5, "plane-wave identities", worst < 1e-10,
           "max deviation " + std::to_string(worst));
  }

  // 6: period-averaged Lagrangian gap.
  {
    std::string detail;
    report(6, "Lagrangian four-divergence",
           checkPass(maxwell, {"lagrangian-gap-averages-out"}, &detail), detail);
  }

  // 7: Noether currents and continuity.
  {
    const SuiteResult s = runSuites("noether", cfg).front();
    std::string detail;
    report(7, "currents and continuity",
           checkPass(s,
                     {"number-density-positive", "covariant-matches-standard-density",
                      "continuity-order", "number-conserved"},
                     &detail),
           detail);
  }

  SuiteResult quantum = runSuites("quantum", cfg).front();

  // 8: scalar products.
  {
    std::string detail;
    report(8, "scalar products",
           checkPass(quantum, {"mode-orthonormality", "parseval", "positive-norm"},
                     &detail),
           detail);
  }

  // 9: operator suite.
  {
    std::string detail;
    report(9, "operator algebra",
           checkPass(quantum,
                     {"exact-commutators", "eigenvalue-exactness",
                      "stencil-commutators", "stencil-commutator-order"},
                     &detail),
           detail);
  }

  // 10: dynamics, causality, and the positive-frequency tail; < 2 min.
  {
    const auto start = std::chrono::steady_clock::now();
    bool ok = true;
    std::ostringstream detail;

    ModeExpansion mode(g.L);
    const ModeKey key{{0, 0, 2}, +1, +1};
    mode.add(key, Complex{0.6, 0.8});
    const double period = 2.0 * 3.14159265358979323846 / mode.omega(key, kc);
    const double n0 = scalarProductK(mode, mode).real();
    double drift = 0.0, residual = 0.0;
    for (int p = 10; p <= 100; p += 10) {
      const ModeExpansion at = evolveTo(mode, 0.0, p * period * 1.01, kc);
      drift = std::max(drift, std::abs(scalarProductK(at, at).real() - n0) / n0);
      const RSField f = expandRS(at, g, 0.0, kc);
      const GradedResidual r = maxwellResidualRS(f, nullptr, kc);
      residual = std::max(
          residual, std::max({r.scalar.maxAbs(), r.vector.maxAbs(),
                              r.bivec.maxAbs() / kc.c, r.trivec.maxAbs() / kc.c}) /
                        (g.dk() * f.E.maxAbs()));
    }
    if (drift >= 1e-12) { ok = false; detail << "norm drift " << drift << "; "; }
    if (residual >= 1e-10) { ok = false; detail << "field residual " << residual << "; "; }

    const PulseScenario pairSc = PulseScenario::boxDefault(g);
    PulseScenario posSc = pairSc;
    posSc.build = PulseScenario::Build::PositiveFrequencyOnly;
    const ModeExpansion pair = buildPulse(pairSc, g, kc);
    const ModeExpansion pos = buildPulse(posSc, g, kc);
    const RSField f0 = expandRS(pair, g, 0.0, kc);
    const double realErr =
        std::max(f0.E.maxImag(), kc.c * f0.B.maxImag()) / f0.E.maxAbs();
    if (realErr >= 1e-12) { ok = false; detail << "pulse imaginary part " << realErr << "; "; }

    const double r0 = 5.0 * pairSc.sigma;
    const double tContact = (g.L / 2.0 - r0) / kc.c;
    const auto pairSnaps = evolve({pair, 0.0, tContact / 5.0, 5, 1}, kc);
    const auto posSnaps = evolve({pos, 0.0, tContact / 5.0, 5, 1}, kc);
    const CausalityReport pairRep = causalityScan(pairSnaps, pairSc.x0, r0, g, kc, 1e-6);
    const CausalityReport posRep = causalityScan(posSnaps, posSc.x0, r0, g, kc, 1e-6);
    if (!pairRep.pass) { ok = false; detail << "paired pulse leaks outside the cone; "; }
    for (std::size_t i = 1; i < pairRep.rows.size(); ++i)
      if (posRep.rows[i].exteriorFraction <= pairRep.rows[i].exteriorFraction) {
        ok = false;
        detail << "no tail excess at t=" << posRep.rows[i].t << "; ";
      }

    const double dt = seconds(start);
    if (dt >= 120.0) { ok = false; detail << "runtime " << dt << " s; "; }
    report(10, "dynamics and causality", ok, detail.str());
  }

  // 11: byte-identical JSON across runs; corrupted fixture exits 1 naming the
  // failing check.
  {
    bool ok = true;
    std::ostringstream detail;
    if (argc < 2) {
      ok = false;
      detail << "command binary path not supplied; ";
    } else {
      const std::string cli = argv[1];
      const fs::path dir = fs::temp_directory_path() / "rsph_acceptance";
      fs::remove_all(dir);
      fs::create_directories(dir);
      const fs::path outA = dir / "a", outB = dir / "b", outC = dir / "c";
      const std::string quiet = " > " + (dir / "log.txt").string() + " 2>&1";

      if (runCommand(cli + " verify all --seed 42 --out " + outA.string() + quiet) != 0) {
        ok = false;
        detail << "verify all failed; ";
      }
      if (runCommand(cli + " verify all --seed 42 --out " + outB.string() + quiet) != 0) {
        ok = false;
        detail << "second verify all failed; ";
      }
      if (ok && slurp(outA / "verify_all.json") != slurp(outB / "verify_all.json")) {
        ok = false;
        detail << "JSON differs between runs; ";
      }
      if (ok && slurp(outA / "verify_all.json").empty()) {
        ok = false;
        detail << "no JSON written; ";
      }

      const fs::path cfgPath = dir / "corrupt.json";
      std::ofstream(cfgPath) << "{\"corrupt_fixture\": true}\n";
      const fs::path log = dir / "corrupt_log.txt";
      const int rc = runCommand(cli + " verify maxwell --config " + cfgPath.string() +
                                " --out " + outC.string() + " > " + log.string() +
                                " 2>&1");
      if (rc != 1) {
        ok = false;
        detail << "corrupted fixture exit code " << rc << "; ";
      }
      const std::string logText = slurp(log);
      if (logText.find("[FAIL] maxwell/vacuum-plane-wave-residual") == std::string::npos) {
        ok = false;
        detail << "failing check not named; ";
      }
    }
    report(11, "deterministic command-line results", ok, detail.str());
  }

  if (failures) {
    std::cout << failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
