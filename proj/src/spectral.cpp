#include "rsphoton/grid.hpp"

#include <fftw3.h>

#include <mutex>

namespace rsph {

namespace {
std::mutex g_fftw_mutex;  // fftw planning is not thread-safe
}

void fft3(const GridSpec& g, std::vector<Complex>& data, bool forward) {
  if (data.size() != g.size()) throw std::invalid_argument("fft3: size mismatch");
  auto* ptr = reinterpret_cast<fftw_complex*>(data.data());
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(g_fftw_mutex);
    plan = fftw_plan_dft_3d(g.n, g.n, g.n, ptr, ptr,
                            forward ? FFTW_FORWARD : FFTW_BACKWARD, FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(g_fftw_mutex);
    fftw_destroy_plan(plan);
  }
  if (!forward) {
    const double scale = 1.0 / static_cast<double>(g.size());
    for (auto& c : data) c *= scale;
  }
}

namespace {

// Per-axis first-derivative multiplier j*k, Nyquist zeroed.
inline Complex dMult(const GridSpec& g, int bin) {
  if (bin == g.n / 2) return {};
  return kJ * (g.fold(bin) * g.dk());
}

template <typename Fn>
void forEachBin(const GridSpec& g, Fn&& fn) {
  for (int ix = 0; ix < g.n; ++ix)
    for (int iy = 0; iy < g.n; ++iy)
      for (int iz = 0; iz < g.n; ++iz) fn(ix, iy, iz, g.index(ix, iy, iz));
}

}  // namespace

Vec3Field spectralGrad(const ScalarField& f) {
  std::vector<Complex> hat = f.v;
  fft3(f.grid, hat, true);
  Vec3Field out(f.grid, f.t);
  out.comp[0] = hat;
  out.comp[1] = hat;
  out.comp[2] = hat;
  forEachBin(f.grid, [&](int ix, int iy, int iz, std::size_t i) {
    out.comp[0][i] *= dMult(f.grid, ix);
    out.comp[1][i] *= dMult(f.grid, iy);
    out.comp[2][i] *= dMult(f.grid, iz);
  });
  for (auto& c : out.comp) fft3(f.grid, c, false);
  return out;
}

ScalarField spectralDiv(const Vec3Field& v) {
  ScalarField out(v.grid, v.t);
  std::array<std::vector<Complex>, 3> hat = v.comp;
  for (auto& c : hat) fft3(v.grid, c, true);
  forEachBin(v.grid, [&](int ix, int iy, int iz, std::size_t i) {
    out.v[i] = dMult(v.grid, ix) * hat[0][i] + dMult(v.grid, iy) * hat[1][i] +
               dMult(v.grid, iz) * hat[2][i];
  });
  fft3(v.grid, out.v, false);
  return out;
}

Vec3Field spectralCurl(const Vec3Field& v) {
  std::array<std::vector<Complex>, 3> hat = v.comp;
  for (auto& c : hat) fft3(v.grid, c, true);
  Vec3Field out(v.grid, v.t);
  forEachBin(v.grid, [&](int ix, int iy, int iz, std::size_t i) {
    const Complex dx = dMult(v.grid, ix);
    const Complex dy = dMult(v.grid, iy);
    const Complex dz = dMult(v.grid, iz);
    out.comp[0][i] = dy * hat[2][i] - dz * hat[1][i];
    out.comp[1][i] = dz * hat[0][i] - dx * hat[2][i];
    out.comp[2][i] = dx * hat[1][i] - dy * hat[0][i];
  });
  for (auto& c : out.comp) fft3(v.grid, c, false);
  return out;
}

ScalarField spectralLaplacian(const ScalarField& f) {
  std::vector<Complex> hat = f.v;
  fft3(f.grid, hat, true);
  ScalarField out(f.grid, f.t);
  forEachBin(f.grid, [&](int ix, int iy, int iz, std::size_t i) {
    const Vec3 k = f.grid.waveVector(ix, iy, iz);
    out.v[i] = -dot(k, k) * hat[i];
  });
  fft3(f.grid, out.v, false);
  return out;
}

Vec3Field spectralLaplacian(const Vec3Field& f) {
  Vec3Field out(f.grid, f.t);
  for (int c = 0; c < 3; ++c) {
    ScalarField comp(f.grid, f.t);
    comp.v = f.comp[c];
    out.comp[c] = spectralLaplacian(comp).v;
  }
  return out;
}

ScalarField spectralPoisson(const ScalarField& src) {
  std::vector<Complex> hat = src.v;
  fft3(src.grid, hat, true);
  ScalarField out(src.grid, src.t);
  forEachBin(src.grid, [&](int ix, int iy, int iz, std::size_t i) {
    const Vec3 k = src.grid.waveVector(ix, iy, iz);
    const double k2 = dot(k, k);
    out.v[i] = (k2 > 0.0) ? -hat[i] / k2 : Complex{};
  });
  fft3(src.grid, out.v, false);
  return out;
}

}  // namespace rsph
