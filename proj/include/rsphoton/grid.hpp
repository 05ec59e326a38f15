#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "rsphoton/cl3.hpp"

namespace rsph {

// Periodic cubic grid: n points per axis (n a power of two, n >= 4), box
// edge L. Real-space points x = (ix,iy,iz)*dx; reciprocal lattice
// k = (2*pi/L)*m with integer m folded to [-n/2, n/2).
struct GridSpec {
  int n = 32;
  double L = 2.0 * 3.14159265358979323846;

  GridSpec() = default;
  GridSpec(int n_, double L_) : n(n_), L(L_) {
    if (n < 4 || (n & (n - 1)) != 0) throw std::invalid_argument("GridSpec: n must be a power of two >= 4");
    if (L <= 0.0) throw std::invalid_argument("GridSpec: L must be positive");
  }

  double dx() const { return L / n; }
  double dk() const { return 2.0 * 3.14159265358979323846 / L; }
  std::size_t size() const { return static_cast<std::size_t>(n) * n * n; }
  double cellVolume() const { return dx() * dx() * dx(); }
  double volume() const { return L * L * L; }

  std::size_t index(int ix, int iy, int iz) const {
    return (static_cast<std::size_t>(ix) * n + iy) * n + iz;
  }
  Vec3 point(int ix, int iy, int iz) const {
    return {ix * dx(), iy * dx(), iz * dx()};
  }
  // Folded integer mode number for FFT bin i.
  int fold(int i) const { return i < n / 2 ? i : i - n; }
  // Wave vector of FFT bin (ix,iy,iz).
  Vec3 waveVector(int ix, int iy, int iz) const {
    return {fold(ix) * dk(), fold(iy) * dk(), fold(iz) * dk()};
  }
  // True if the integer triple lies on this grid's reciprocal lattice
  // (folded range, Nyquist excluded so every mode has a -k partner).
  bool onLattice(int mx, int my, int mz) const {
    auto ok = [this](int m) { return m > -n / 2 && m < n / 2; };
    return ok(mx) && ok(my) && ok(mz);
  }

  bool operator==(const GridSpec& o) const { return n == o.n && L == o.L; }
  bool operator!=(const GridSpec& o) const { return !(*this == o); }
};

inline void requireSameGrid(const GridSpec& a, const GridSpec& b) {
  if (a != b) throw std::invalid_argument("field arithmetic requires identical grids");
}

struct ScalarField {
  GridSpec grid;
  double t = 0.0;
  std::vector<Complex> v;

  ScalarField() = default;
  explicit ScalarField(const GridSpec& g, double time = 0.0)
      : grid(g), t(time), v(g.size()) {}

  Complex& operator[](std::size_t i) { return v[i]; }
  const Complex& operator[](std::size_t i) const { return v[i]; }
  Complex& at(int ix, int iy, int iz) { return v[grid.index(ix, iy, iz)]; }
  const Complex& at(int ix, int iy, int iz) const { return v[grid.index(ix, iy, iz)]; }

  ScalarField operator+(const ScalarField& o) const {
    requireSameGrid(grid, o.grid);
    ScalarField r(grid, t);
    for (std::size_t i = 0; i < v.size(); ++i) r.v[i] = v[i] + o.v[i];
    return r;
  }
  ScalarField operator-(const ScalarField& o) const {
    requireSameGrid(grid, o.grid);
    ScalarField r(grid, t);
    for (std::size_t i = 0; i < v.size(); ++i) r.v[i] = v[i] - o.v[i];
    return r;
  }
  ScalarField operator*(Complex s) const {
    ScalarField r(grid, t);
    for (std::size_t i = 0; i < v.size(); ++i) r.v[i] = v[i] * s;
    return r;
  }

  double maxAbs() const {
    double m = 0.0;
    for (const auto& c : v) m = std::max(m, std::abs(c));
    return m;
  }
  // Box integral: cell volume times the plain sum (exact for band-limited
  // integrands below Nyquist).
  Complex integrate() const {
    Complex s{};
    for (const auto& c : v) s += c;
    return s * grid.cellVolume();
  }
};

struct Vec3Field {
  GridSpec grid;
  double t = 0.0;
  std::array<std::vector<Complex>, 3> comp;

  Vec3Field() = default;
  explicit Vec3Field(const GridSpec& g, double time = 0.0) : grid(g), t(time) {
    for (auto& c : comp) c.assign(g.size(), Complex{});
  }

  CVec3 at(std::size_t i) const { return {comp[0][i], comp[1][i], comp[2][i]}; }
  void set(std::size_t i, const CVec3& u) {
    comp[0][i] = u.x; comp[1][i] = u.y; comp[2][i] = u.z;
  }
  void add(std::size_t i, const CVec3& u) {
    comp[0][i] += u.x; comp[1][i] += u.y; comp[2][i] += u.z;
  }

  Vec3Field operator+(const Vec3Field& o) const {
    requireSameGrid(grid, o.grid);
    Vec3Field r(grid, t);
    for (int c = 0; c < 3; ++c)
      for (std::size_t i = 0; i < comp[c].size(); ++i) r.comp[c][i] = comp[c][i] + o.comp[c][i];
    return r;
  }
  Vec3Field operator-(const Vec3Field& o) const {
    requireSameGrid(grid, o.grid);
    Vec3Field r(grid, t);
    for (int c = 0; c < 3; ++c)
      for (std::size_t i = 0; i < comp[c].size(); ++i) r.comp[c][i] = comp[c][i] - o.comp[c][i];
    return r;
  }
  Vec3Field operator*(Complex s) const {
    Vec3Field r(grid, t);
    for (int c = 0; c < 3; ++c)
      for (std::size_t i = 0; i < comp[c].size(); ++i) r.comp[c][i] = comp[c][i] * s;
    return r;
  }

  double maxAbs() const {
    double m = 0.0;
    for (const auto& c : comp)
      for (const auto& z : c) m = std::max(m, std::abs(z));
    return m;
  }
  double maxImag() const {
    double m = 0.0;
    for (const auto& c : comp)
      for (const auto& z : c) m = std::max(m, std::abs(z.imag()));
    return m;
  }
};

struct ParavectorField {
  GridSpec grid;
  double t = 0.0;
  ScalarField s;
  Vec3Field v;

  ParavectorField() = default;
  explicit ParavectorField(const GridSpec& g, double time = 0.0)
      : grid(g), t(time), s(g, time), v(g, time) {}

  double maxAbs() const { return std::max(s.maxAbs(), v.maxAbs()); }
};

// ---- spectral calculus (exact on band-limited fields) ----
// Derivative of exp(j k.x) is j*k times the mode; Nyquist bins of odd-order
// derivatives are zeroed.

void fft3(const GridSpec& g, std::vector<Complex>& data, bool forward);

Vec3Field spectralGrad(const ScalarField& f);
ScalarField spectralDiv(const Vec3Field& v);
Vec3Field spectralCurl(const Vec3Field& v);
ScalarField spectralLaplacian(const ScalarField& f);
Vec3Field spectralLaplacian(const Vec3Field& f);

// Solve laplacian(phi) = src on the periodic box; src must have (numerically)
// zero mean, and the zero mode of phi is set to zero.
ScalarField spectralPoisson(const ScalarField& src);

}  // namespace rsph
