#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "rsphoton/dynamics.hpp"
#include "rsphoton/qops.hpp"

using namespace rsph;

namespace {

const GridSpec g(32, 2.0 * 3.14159265358979323846);
const PhysicalConstants kc = PhysicalConstants::natural();

}  // namespace

TEST_CASE("free evolution is a pure phase") {
  ModeExpansion exp(g.L);
  const ModeKey key{{0, 0, 2}, +1, +1};
  exp.add(key, Complex{0.6, 0.8});
  const double w = exp.omega(key, kc);
  const ModeExpansion later = evolveTo(exp, 0.0, 1.7, kc);
  const Complex want = Complex{0.6, 0.8} * std::exp(-kJ * (w * 1.7));
  CHECK(std::abs(later.amplitude(key) - want) < 1e-15);
  // Negative frequency sign rotates the other way.
  ModeExpansion neg(g.L);
  neg.add({{0, 0, 2}, -1, +1}, Complex{1.0});
  CHECK(std::abs(evolveTo(neg, 0.0, 1.7, kc).amplitude({{0, 0, 2}, -1, +1}) -
                 std::exp(kJ * (w * 1.7))) < 1e-15);
}

TEST_CASE("norm is conserved over many periods") {
  ModeExpansion exp(g.L);
  exp.add({{1, -2, 2}, +1, +1}, Complex{0.7, 0.3});
  exp.add({{0, 0, 2}, -1, -1}, Complex{0.4, -0.1});
  const double n0 = scalarProductK(exp, exp).real();
  double worst = 0.0;
  for (int p = 1; p <= 100; ++p) {
    const ModeExpansion at = evolveTo(exp, 0.0, p * 2.1, kc);
    worst = std::max(worst, std::abs(scalarProductK(at, at).real() - n0) / n0);
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("evolution plans validate and produce strided snapshots") {
  ModeExpansion exp(g.L);
  exp.add({{1, 0, 0}, +1, +1}, Complex{1.0});
  CHECK_THROWS_AS(evolve({exp, 0.0, -0.1, 10, 1}, kc), std::invalid_argument);
  CHECK_THROWS_AS(evolve({exp, 0.0, 0.1, 0, 1}, kc), std::invalid_argument);
  const auto snaps = evolve({exp, 0.5, 0.1, 10, 5}, kc);
  REQUIRE(snaps.size() == 3);
  CHECK(snaps[0].t == doctest::Approx(0.5));
  CHECK(snaps[2].t == doctest::Approx(1.5));
}

TEST_CASE("evolved snapshots still solve the field equations") {
  ModeExpansion exp(g.L);
  exp.add({{1, 2, 0}, +1, +1}, Complex{0.8, -0.2});
  exp.add({{0, -1, 3}, -1, +1}, Complex{0.1, 0.5});
  const ModeExpansion at = evolveTo(exp, 0.0, 3.3, kc);
  const RSField f = expandRS(at, g, 0.0, kc);
  const GradedResidual r = maxwellResidualRS(f, nullptr, kc);
  const double scale = g.dk() * f.E.maxAbs();
  const double worst = std::max({r.scalar.maxAbs(), r.vector.maxAbs(),
                                 r.bivec.maxAbs() / kc.c, r.trivec.maxAbs() / kc.c});
  CHECK(worst / scale < 1e-10);
}

TEST_CASE("pulse construction rejects unresolvable scenarios") {
  PulseScenario s = PulseScenario::boxDefault(g);
  s.sigma = 1.0 * g.dx();
  CHECK_THROWS_AS(buildPulse(s, g, kc), std::invalid_argument);
  PulseScenario wide = PulseScenario::boxDefault(g);
  wide.m0 = {0, 0, 0};
  CHECK_THROWS_AS(buildPulse(wide, g, kc), std::invalid_argument);
}

TEST_CASE("conjugate-pair pulse is real and stays causal") {
  const PulseScenario sc = PulseScenario::boxDefault(g);
  const ModeExpansion pulse = buildPulse(sc, g, kc);

  const RSField f0 = expandRS(pulse, g, 0.0, kc);
  const double scale = f0.E.maxAbs();
  CHECK(f0.E.maxImag() / scale < 1e-12);
  CHECK(f0.B.maxImag() / scale < 1e-12);

  const double r0 = 5.0 * sc.sigma;
  const double tContact = (g.L / 2.0 - r0) / kc.c;
  const auto snaps = evolve({pulse, 0.0, tContact / 4.0, 4, 1}, kc);
  const CausalityReport rep = causalityScan(snaps, sc.x0, r0, g, kc, 1e-6);
  CHECK(rep.pass);
  REQUIRE(rep.rows.size() == snaps.size());
  for (std::size_t i = 1; i < rep.rows.size(); ++i)
    CHECK(rep.rows[i].radius > rep.rows[i - 1].radius);
  // Reality persists under evolution.
  const RSField f1 = expandRS(snaps.back().amps, g, 0.0, kc);
  CHECK(f1.E.maxImag() / scale < 1e-12);
}

TEST_CASE("positive-frequency pulse grows a tail the paired pulse lacks") {
  PulseScenario pairSc = PulseScenario::boxDefault(g);
  PulseScenario posSc = PulseScenario::boxDefault(g);
  posSc.build = PulseScenario::Build::PositiveFrequencyOnly;
  const ModeExpansion pair = buildPulse(pairSc, g, kc);
  const ModeExpansion pos = buildPulse(posSc, g, kc);
  const double r0 = 5.0 * pairSc.sigma;
  const double tContact = (g.L / 2.0 - r0) / kc.c;
  const auto pairSnaps = evolve({pair, 0.0, tContact / 4.0, 4, 1}, kc);
  const auto posSnaps = evolve({pos, 0.0, tContact / 4.0, 4, 1}, kc);
  const CausalityReport pairRep = causalityScan(pairSnaps, pairSc.x0, r0, g, kc, 1e-6);
  const CausalityReport posRep = causalityScan(posSnaps, posSc.x0, r0, g, kc, 1e-6);
  for (std::size_t i = 1; i < pairRep.rows.size(); ++i)
    CHECK(posRep.rows[i].exteriorFraction > pairRep.rows[i].exteriorFraction);
}

TEST_CASE("radial profile accumulates to the total energy") {
  const ModeExpansion pulse = buildPulse(PulseScenario::boxDefault(g), g, kc);
  const RSField f = expandRS(pulse, g, 0.0, kc);
  const Vec3 x0{g.L / 2.0, g.L / 2.0, g.L / 2.0};
  const auto rows = radialProfile(f, x0, kc, 32);
  REQUIRE(rows.size() == 32);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK(rows[i].second >= rows[i - 1].second);
  }
  CHECK(rows.back().second == doctest::Approx(1.0));
  // Nearly all energy sits well inside the half-box at t = 0.
  CHECK(rows[rows.size() / 2].second > 0.99);
}

TEST_CASE("minimum-image distance respects periodicity") {
  CHECK(minImageDistance({0.1, 0.0, 0.0}, {6.2, 0.0, 0.0}, 2.0 * 3.14159265358979323846) ==
        doctest::Approx(0.1831853).epsilon(1e-5));
  CHECK(minImageDistance({1.0, 2.0, 3.0}, {1.0, 2.0, 3.0}, 10.0) == 0.0);
}
