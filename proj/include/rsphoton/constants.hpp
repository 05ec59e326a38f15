#pragma once

#include <cmath>

namespace rsph {

// Physical constants used by the field and quantum modules. Two presets:
// natural units (c = eps0 = hbar = 1, the default for verification suites)
// and SI values for dimension-carrying demos.
struct PhysicalConstants {
  double c;     // speed of light
  double eps0;  // vacuum permittivity
  double hbar;  // reduced Planck constant

  double mu0() const { return 1.0 / (eps0 * c * c); }
  double z0() const { return std::sqrt(mu0() / eps0); }  // vacuum impedance

  static PhysicalConstants natural() { return {1.0, 1.0, 1.0}; }
  static PhysicalConstants si() {
    return {299792458.0, 8.8541878128e-12, 1.054571817e-34};
  }
};

}  // namespace rsph
