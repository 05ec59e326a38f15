#pragma once

#include <utility>
#include <vector>

#include "rsphoton/modes.hpp"

namespace rsph {

// Exact free evolution: each amplitude picks up exp(-j*eps*omega_k*(t-t0)).
// Evolved amplitude sets are referenced to time t, i.e. rendering them with
// expandRS(..., t=0) gives the field at t.
ModeExpansion evolveTo(const ModeExpansion& exp, double t0, double t,
                       const PhysicalConstants& k);

struct EvolutionPlan {
  ModeExpansion expansion;
  double t0 = 0.0;
  double dt = 0.0;   // > 0
  int steps = 1;     // >= 1
  int stride = 1;    // snapshot every `stride` steps (t0 snapshot included)
};

struct Snapshot {
  double t;
  ModeExpansion amps;
};

std::vector<Snapshot> evolve(const EvolutionPlan& plan, const PhysicalConstants& k);

// Localized pulse: Gaussian spectral envelope around the carrier k0, linearly
// polarized transverse vector amplitude decomposed onto both helicity modes.
struct PulseScenario {
  enum class Build { RealConjugatePair, PositiveFrequencyOnly };

  double sigma = 0.0;        // envelope width (m); spatial std dev of the packet
  Vec3 x0{};                 // center
  std::array<int, 3> m0{};   // carrier as lattice integers
  double window = 0.0;       // low-|k| suppression scale (1/m); 0 disables
  Build build = Build::RealConjugatePair;
  double amplitude = 1.0;

  // Defaults that resolve on the given grid: sigma = 3*dx, centered in the
  // box, carrier (3,3,3) lattice units, window 2.8*dk.
  static PulseScenario boxDefault(const GridSpec& g);
};

// Builds the vector spectrum V(k) = amp * [G(k-k0) + G(k+k0)] * W(k) *
// P_T(k) e_c * exp(-j k.x0), where G is the Gaussian envelope of width sigma,
// W(k) = 1 - exp(-|k|^2/(2 w^2)) smoothly removes the non-smooth k ~ 0
// region, e_c is a unit polarization orthogonal to k0, and P_T projects onto
// the plane transverse to k. Each lattice mode gets amplitudes on both
// helicities (eps = +1), plus real-conjugate partners when requested. The
// even envelope makes the positive-frequency field real at t = 0, so both
// builds start from the same energy profile. Errors when sigma is
// unresolvable (< 2*dx) or the spectral tail at the lattice edge exceeds
// 1e-12.
ModeExpansion buildPulse(const PulseScenario& s, const GridSpec& g,
                         const PhysicalConstants& k);

// |E|^2 + c^2|B|^2 (real, conjugated squares).
ScalarField energyDensity(const RSField& f, const PhysicalConstants& k);

// Periodic minimum-image distance between x and x0 on a box of edge L.
double minImageDistance(const Vec3& x, const Vec3& x0, double L);

struct CausalityReport {
  struct Row {
    double t = 0.0;
    double radius = 0.0;        // r0 + c t
    double interiorFraction = 0.0;
    double exteriorFraction = 0.0;
    bool coneContact = false;   // radius >= L/2: cone reached the box boundary
  };
  double r0 = 0.0;
  double tolerance = 0.0;
  std::vector<Row> rows;
  bool pass = false;  // exterior below tolerance at every pre-contact snapshot
};

// Energy fraction outside the light cone r(t) = r0 + c*t around x0 for each
// snapshot (rendered at its own time); distances are periodic-image aware.
CausalityReport causalityScan(const std::vector<Snapshot>& snaps, const Vec3& x0,
                              double r0, const GridSpec& g,
                              const PhysicalConstants& k, double tolerance);

// Radial energy profile of one snapshot: (r, enclosed fraction) rows with
// nBins uniform radii up to L/2.
std::vector<std::pair<double, double>> radialProfile(const RSField& f, const Vec3& x0,
                                                     const PhysicalConstants& k,
                                                     int nBins = 64);

}  // namespace rsph
