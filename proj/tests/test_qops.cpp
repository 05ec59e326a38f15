#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "rsphoton/qops.hpp"

using namespace rsph;

namespace {

const GridSpec g(32, 2.0 * 3.14159265358979323846);
const PhysicalConstants kc = PhysicalConstants::natural();

double vdiff(const CVec3& a, const CVec3& b) {
  return std::max({std::abs(a.x - b.x), std::abs(a.y - b.y), std::abs(a.z - b.z)});
}

}  // namespace

TEST_CASE("spin matrices have circular eigenvectors") {
  const double inv = 1.0 / std::sqrt(2.0);
  const CVec3 plus{Complex{inv}, kJ * inv, Complex{}};
  CHECK(vdiff(SpinMatrices::apply(2, plus), plus) < 1e-15);
  const CVec3 minus{Complex{inv}, -kJ * inv, Complex{}};
  CHECK(vdiff(SpinMatrices::apply(2, minus), minus * Complex{-1.0}) < 1e-15);
  const CVec3 zax{Complex{}, Complex{}, Complex{1.0}};
  CHECK(vdiff(SpinMatrices::apply(2, zax), CVec3{}) == 0.0);
}

TEST_CASE("spin commutators close exactly") {
  const CVec3 v{{0.3, -0.7}, {1.1, 0.2}, {-0.4, 0.9}};
  for (int i = 0; i < 3; ++i) {
    const int a = (i + 1) % 3, b = (i + 2) % 3;
    const CVec3 comm = SpinMatrices::apply(a, SpinMatrices::apply(b, v)) -
                       SpinMatrices::apply(b, SpinMatrices::apply(a, v));
    CHECK(vdiff(comm, SpinMatrices::apply(i, v) * kJ) < 1e-15);
  }
  // (a.S) v = j a x v
  const Vec3 a{0.5, -1.0, 2.0};
  CHECK(vdiff(SpinMatrices::applyDot(a, v), cross(a.complex(), v) * kJ) == 0.0);
}

TEST_CASE("k-space product is a plain conjugated sum") {
  KSpaceState s1(g.L), s2(g.L);
  s1.add({{1, 0, 0}, +1, +1}, Complex{0.5, 0.5});
  s1.add({{0, 2, 0}, -1, -1}, Complex{1.0, 0.0});
  s2.add({{1, 0, 0}, +1, +1}, Complex{2.0, 0.0});
  s2.add({{0, 0, 3}, +1, +1}, Complex{9.0, 1.0});
  CHECK(scalarProductK(s1, s2) == std::conj(Complex{0.5, 0.5}) * 2.0);
  KSpaceState other(2.0 * g.L);
  other.add({{1, 0, 0}, +1, +1}, Complex{1.0});
  CHECK_THROWS_AS(scalarProductK(s1, other), std::invalid_argument);
}

TEST_CASE("x-space product gives positive norms for both frequency signs") {
  for (int eps : {+1, -1}) {
    KSpaceState s(g.L);
    s.add({{0, 1, 2}, eps, -1}, Complex{0.3, 0.8});
    const Complex n = scalarProductX(s, s, g, 0.45, kc);
    CHECK(n.real() == doctest::Approx(std::norm(Complex{0.3, 0.8})).epsilon(1e-10));
    CHECK(std::abs(n.imag()) < 1e-12);
  }
}

TEST_CASE("diagonal operators act by their eigenvalues") {
  KSpaceState s(g.L);
  const ModeKey key{{3, 0, -1}, -1, +1};
  const Complex a{0.2, -0.7};
  s.add(key, a);
  const Vec3 kv = s.waveVector(key);
  CHECK(applyHelicity(s).amplitude(key) == a);
  CHECK(applyFrequencySign(s).amplitude(key) == -a);
  CHECK(std::abs(applyMomentum(s, 2, kc).amplitude(key) - a * (kc.hbar * kv.z)) < 1e-15);
  CHECK(std::abs(applyMomentumMagnitude(s, kc).amplitude(key) -
                 a * (kc.hbar * norm(kv))) < 1e-15);
  CHECK(std::abs(applyHamiltonian(s, kc).amplitude(key) +
                 a * (kc.hbar * kc.c * norm(kv))) < 1e-15);
}

TEST_CASE("curl route of the energy operator matches the diagonal route") {
  ModeExpansion exp(g.L);
  exp.add({{1, 2, 0}, +1, +1}, Complex{0.8, -0.2});
  exp.add({{0, -1, 3}, -1, +1}, Complex{0.1, 0.5});
  exp.add({{2, 2, -2}, +1, -1}, Complex{-0.4, 0.3});
  const RSField f = expandRS(exp, g, 0.11, kc);
  const RSField hf = hamiltonianCurl(f, kc);
  const RSField want = expandRS(applyHamiltonian(exp, kc), g, 0.11, kc);
  const double scale = want.E.maxAbs();
  CHECK((hf.E - want.E).maxAbs() / scale < 1e-10);
  CHECK((hf.B - want.B).maxAbs() / scale < 1e-10);
}

TEST_CASE("curl route agrees with the time derivative of the field") {
  // H F = j*hbar*dt(F) on mode superpositions: compare against a central
  // difference and watch it converge at second order.
  ModeExpansion exp(g.L);
  exp.add({{2, 0, 1}, +1, +1}, Complex{1.0, 0.4});
  exp.add({{-1, 1, 0}, -1, -1}, Complex{0.2, -0.6});
  const RSField hf = hamiltonianCurl(expandRS(exp, g, 0.0, kc), kc);
  auto residual = [&](double dt) {
    const RSField lo = expandRS(exp, g, -dt, kc);
    const RSField hi = expandRS(exp, g, dt, kc);
    const Vec3Field dE = (hi.E - lo.E) * (kJ * kc.hbar / (2.0 * dt));
    return (dE - hf.E).maxAbs();
  };
  const double r1 = residual(0.02), r2 = residual(0.01);
  CHECK(std::abs(std::log2(r1 / r2) - 2.0) < 0.1);
}

TEST_CASE("stencil derivative converges and richardson sharpens it") {
  const double s = 1.0;
  const KGrid grid{33, 8.0 * s / 32.0, {s, s, 2.0 * s}};
  const Vec3 center{5.0 * s, 5.0 * s, 6.0 * s};
  const double sigma = 0.8 * s;
  VectorKState psi(grid, +1);
  for (int ix = 0; ix < grid.n; ++ix)
    for (int iy = 0; iy < grid.n; ++iy)
      for (int iz = 0; iz < grid.n; ++iz) {
        const Vec3 d = grid.point(ix, iy, iz) - center;
        psi.comp[0][grid.index(ix, iy, iz)] =
            std::exp(-dot(d, d) / (2.0 * sigma * sigma));
      }
  auto worst = [&](bool richardson) {
    const VectorKState d = kDerivative(psi, 0, richardson);
    double w = 0.0;
    for (int ix = 2; ix < grid.n - 2; ++ix)
      for (int iy = 0; iy < grid.n; ++iy)
        for (int iz = 0; iz < grid.n; ++iz) {
          const std::size_t i = grid.index(ix, iy, iz);
          const Vec3 kv = grid.point(ix, iy, iz);
          const Complex want = psi.comp[0][i] * (-(kv.x - center.x) / (sigma * sigma));
          w = std::max(w, std::abs(d.comp[0][i] - want));
        }
    return w;
  };
  const double plain = worst(false), sharp = worst(true);
  CHECK(plain < 5e-2);
  CHECK(sharp < plain / 5.0);
}

TEST_CASE("helicity operator throws at the k = 0 lattice point") {
  const KGrid grid{5, 1.0, {-2.0, -2.0, -2.0}};  // contains the origin
  VectorKState psi(grid, +1);
  psi.comp[0][0] = 1.0;
  CHECK_THROWS_AS(applyHelicity(psi), std::invalid_argument);
}

TEST_CASE("commutator harness closes the generator algebra") {
  const auto reports = commutatorCheck(kc, 42, 1);
  REQUIRE(!reports.empty());
  for (const auto& r : reports) {
    INFO(r.pair, " residual=", r.residual, " order=", r.order);
    CHECK(r.pass);
    if (r.stencil) {
      CHECK(r.residual < 1e-6);
      CHECK(std::abs(r.order - 2.0) <= 0.3);
    } else if (r.cancellation) {
      CHECK(r.residual < 1e-8);
    } else {
      CHECK(r.residual < 1e-12);
    }
  }
}
