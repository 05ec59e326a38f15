#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "rsphoton/grid.hpp"

using namespace rsph;

namespace {

const GridSpec g(32, 2.0 * 3.14159265358979323846);

ScalarField planeWave(const GridSpec& grid, const Vec3& k, Complex amp) {
  ScalarField f(grid);
  for (int ix = 0; ix < grid.n; ++ix)
    for (int iy = 0; iy < grid.n; ++iy)
      for (int iz = 0; iz < grid.n; ++iz)
        f.at(ix, iy, iz) = amp * std::exp(kJ * dot(k, grid.point(ix, iy, iz)));
  return f;
}

}  // namespace

TEST_CASE("forward and inverse transforms round-trip") {
  ScalarField f = planeWave(g, {2.0, -1.0, 3.0}, {0.4, 0.7});
  auto data = f.v;
  fft3(g, data, true);
  fft3(g, data, false);
  double worst = 0.0;
  for (std::size_t i = 0; i < data.size(); ++i)
    worst = std::max(worst, std::abs(data[i] - f.v[i]));
  CHECK(worst < 1e-12);
}

TEST_CASE("gradient of a constant vanishes") {
  ScalarField f(g);
  for (auto& v : f.v) v = Complex{3.5, -1.25};
  CHECK(spectralGrad(f).maxAbs() == 0.0);
}

TEST_CASE("gradient of a plane wave is j*k times the wave") {
  const Vec3 k{1.0, -2.0, 3.0};
  const ScalarField f = planeWave(g, k, {1.0, 0.5});
  const Vec3Field grad = spectralGrad(f);
  double worst = 0.0;
  for (std::size_t i = 0; i < f.v.size(); ++i) {
    const CVec3 want = k.complex() * (kJ * f.v[i]);
    const CVec3 got = grad.at(i);
    worst = std::max({worst, std::abs(got.x - want.x), std::abs(got.y - want.y),
                      std::abs(got.z - want.z)});
  }
  CHECK(worst < 1e-11);
}

TEST_CASE("curl of a gradient vanishes") {
  ScalarField f(g);
  for (int ix = 0; ix < g.n; ++ix)
    for (int iy = 0; iy < g.n; ++iy)
      for (int iz = 0; iz < g.n; ++iz) {
        const Vec3 x = g.point(ix, iy, iz);
        f.at(ix, iy, iz) = std::sin(2.0 * x.x) * std::cos(x.y) +
                           0.3 * std::cos(3.0 * x.z + 0.4);
      }
  CHECK(spectralCurl(spectralGrad(f)).maxAbs() < 1e-12);
}

TEST_CASE("divergence and curl of a polarized plane wave") {
  const Vec3 k{2.0, 1.0, -1.0};
  Vec3Field v(g);
  const CVec3 amp{{0.3, -0.1}, {0.0, 0.8}, {0.5, 0.0}};
  for (int ix = 0; ix < g.n; ++ix)
    for (int iy = 0; iy < g.n; ++iy)
      for (int iz = 0; iz < g.n; ++iz) {
        const Complex ph = std::exp(kJ * dot(k, g.point(ix, iy, iz)));
        v.set(g.index(ix, iy, iz), amp * ph);
      }
  const ScalarField div = spectralDiv(v);
  const Vec3Field curl = spectralCurl(v);
  double worstDiv = 0.0, worstCurl = 0.0;
  for (std::size_t i = 0; i < div.v.size(); ++i) {
    const Complex base = v.comp[0][i] / amp.x;  // carrier at this point
    worstDiv = std::max(worstDiv, std::abs(div.v[i] - kJ * dot(k.complex(), amp) * base));
    const CVec3 want = cross(k.complex(), amp) * (kJ * base);
    const CVec3 got = curl.at(i);
    worstCurl = std::max({worstCurl, std::abs(got.x - want.x),
                          std::abs(got.y - want.y), std::abs(got.z - want.z)});
  }
  CHECK(worstDiv < 1e-11);
  CHECK(worstCurl < 1e-11);
}

TEST_CASE("laplacian matches -|k|^2") {
  const Vec3 k{3.0, 0.0, -2.0};
  const ScalarField f = planeWave(g, k, {0.9, 0.1});
  const ScalarField lap = spectralLaplacian(f);
  double worst = 0.0;
  for (std::size_t i = 0; i < f.v.size(); ++i)
    worst = std::max(worst, std::abs(lap.v[i] + dot(k, k) * f.v[i]));
  CHECK(worst < 1e-10);
}

TEST_CASE("poisson solve inverts the laplacian on zero-mean sources") {
  const ScalarField src = planeWave(g, {1.0, 2.0, 0.0}, {1.0, -0.3});
  const ScalarField phi = spectralPoisson(src);
  CHECK((spectralLaplacian(phi) - src).maxAbs() < 1e-12);
}

TEST_CASE("odd-order derivatives drop the unpaired Nyquist mode") {
  // A pure Nyquist oscillation is real-valued on the grid; a spectral first
  // derivative cannot represent it and must return zero.
  ScalarField f(g);
  for (int ix = 0; ix < g.n; ++ix)
    for (int iy = 0; iy < g.n; ++iy)
      for (int iz = 0; iz < g.n; ++iz)
        f.at(ix, iy, iz) = (ix % 2 == 0) ? 1.0 : -1.0;
  CHECK(spectralGrad(f).maxAbs() < 1e-12);
}
