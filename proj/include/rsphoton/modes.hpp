#pragma once

#include <array>
#include <compare>
#include <map>
#include <vector>

#include "rsphoton/em.hpp"

namespace rsph {

// Right-handed orthonormal triad {e_theta, e_phi, khat} from the spherical
// angles of khat (theta from e3). At the poles (sin(theta) = 0) phi is fixed
// to 0 so e_theta = cos(theta)*e1 and e_phi = e2 deterministically.
struct HelicityTriad {
  Vec3 khat, etheta, ephi;
};

HelicityTriad helicityTriad(const Vec3& k);  // throws on k = 0

// e_lam = (e_theta + j*lam*e_phi)/sqrt(2); unit norm under the conjugated
// inner product, transverse to k.
CVec3 helicityVector(const Vec3& k, int lam);

// Mode identity on the reciprocal lattice: integer triple m (k = (2*pi/L)*m),
// frequency sign eps, helicity lam.
struct ModeKey {
  std::array<int, 3> m{};
  int eps = +1;
  int lam = +1;

  auto operator<=>(const ModeKey&) const = default;
};

// A single helicity plane wave with every label spelled out in physical
// units, for point evaluation off the grid.
struct ModeWave {
  Vec3 k;
  int eps = +1;
  int lam = +1;
  Complex a{1.0};
};

// E-field amplitude that gives a single discrete mode unit norm under the
// k-space scalar product: sqrt(hbar*omega / (2*eps0*V)).
double onePhotonEAmplitude(double omega, const PhysicalConstants& k, double volume);

// Helicity plane-wave fields at a point, carrier exp(-j*eps*w*t + j*k.x).
// ampScale multiplies the stored amplitude (pass onePhotonEAmplitude(...)
// for one-photon normalization).
CVec3 planeWaveE(const ModeWave& m, const Vec3& x, double t,
                 const PhysicalConstants& k, double ampScale = 1.0);
// cB = -j*eps*lam*E.
CVec3 planeWaveB(const ModeWave& m, const Vec3& x, double t,
                 const PhysicalConstants& k, double ampScale = 1.0);
// F = (1 - i*j*eps*lam)*E as a genuine multivector: grade 1 = E,
// grade 2 = i*(cB).
Multivector planeWaveF(const ModeWave& m, const Vec3& x, double t,
                       const PhysicalConstants& k, double ampScale = 1.0);

// Finite set of helicity plane waves on the reciprocal lattice of a box of
// edge L, with unique (m, eps, lam) keys. Doubles as a discrete k-space
// amplitude state (see scalarProductK).
class ModeExpansion {
 public:
  explicit ModeExpansion(double L);

  double L() const { return L_; }
  std::size_t size() const { return amps_.size(); }
  const std::map<ModeKey, Complex>& amplitudes() const { return amps_; }

  // Accumulates into an existing key; validates eps/lam in {+1,-1}, m != 0.
  void add(const ModeKey& key, Complex a);
  void set(const ModeKey& key, Complex a);
  Complex amplitude(const ModeKey& key) const;  // 0 if absent

  Vec3 waveVector(const ModeKey& key) const;
  double omega(const ModeKey& key, const PhysicalConstants& k) const;
  ModeWave wave(const ModeKey& key) const;

  // True if every key fits the grid's reciprocal lattice (same L, below
  // Nyquist).
  bool fitsGrid(const GridSpec& g) const;

 private:
  double L_;
  std::map<ModeKey, Complex> amps_;
};

using KSpaceState = ModeExpansion;

enum class ModeScale {
  // Continuum-amplitude dictionary: each mode enters grid synthesis with
  // the cell weight (2*pi/L)^3 standing in for the dk integral.
  Unit,
  // Discrete one-photon dictionary: each mode enters with the amplitude
  // onePhotonEAmplitude and no lattice weight; a unit-amplitude mode then
  // has unit k-space norm.
  OnePhoton,
};

// Per-mode amplitude factor of the chosen dictionary: the lattice cell
// weight (2*pi/L)^3 for Unit, onePhotonEAmplitude for OnePhoton.
double modeScaleFactor(ModeScale scale, const GridSpec& g, double omega,
                       const PhysicalConstants& k);

// Superposition sampled on the grid, with analytic time derivatives filled.
RSField expandRS(const ModeExpansion& exp, const GridSpec& g, double t,
                 const PhysicalConstants& k, ModeScale scale = ModeScale::Unit);

// The (key, amplitude) partner that makes {mode, partner} sum to a real
// E, B field at all times: key' = (-m, -eps, lam), a' chosen from the
// computed triads at +-khat (a unit phase times conj(a)).
std::pair<ModeKey, Complex> realConjugatePartner(const ModeKey& key, Complex a,
                                                 double L);

// Inverse of expandRS on free fields: FFT, helicity projection, and
// eps resolution from the E/B pairing. Rejects spectral content that is
// longitudinal or non-transverse beyond relTol (relative to the largest
// mode amplitude).
ModeExpansion projectModes(const RSField& f, const PhysicalConstants& k,
                           ModeScale scale = ModeScale::Unit,
                           double relTol = 1e-6);

// Coulomb-gauge potential of a mode expansion: phi = 0 and per mode
// A = -j*eps*E/omega with the E amplitude of the chosen dictionary, so that
// computeRS reproduces expandRS of the same expansion.
FourPotential transversePotential(const ModeExpansion& exp, const GridSpec& g,
                                  double t, const PhysicalConstants& k,
                                  ModeScale scale = ModeScale::Unit);

// Transverse one-photon four-potential of a k-space amplitude state:
// phi = 0 and per mode A = -j*eps*E_1ph/omega * alpha * e_lam, so that
// E = -dt(A) carries the one-photon amplitude.
FourPotential onePhotonPotential(const KSpaceState& s, const GridSpec& g,
                                 double t, const PhysicalConstants& k);

// Same potential restricted to one (eps, lam) sheet.
FourPotential onePhotonPotentialSheet(const KSpaceState& s, int eps, int lam,
                                      const GridSpec& g, double t,
                                      const PhysicalConstants& k);

}  // namespace rsph
