#include "rsphoton/modes.hpp"

#include <cmath>

namespace rsph {

namespace {
constexpr double kTwoPi = 2.0 * 3.14159265358979323846;
constexpr double kInvSqrt2 = 0.70710678118654752440;

void requireSign(int v, const char* what) {
  if (v != 1 && v != -1) throw std::invalid_argument(std::string(what) + " must be +1 or -1");
}
}  // namespace

HelicityTriad helicityTriad(const Vec3& k) {
  const double r = norm(k);
  if (r == 0.0) throw std::invalid_argument("helicity triad undefined at k = 0");
  HelicityTriad t;
  t.khat = k * (1.0 / r);
  const double rho = std::hypot(k.x, k.y);
  if (rho == 0.0) {
    // Pole: fix phi = 0, so e_theta = cos(theta)*e1, e_phi = e2.
    const double ct = k.z > 0 ? 1.0 : -1.0;
    t.etheta = {ct, 0.0, 0.0};
    t.ephi = {0.0, 1.0, 0.0};
    return t;
  }
  const double ct = k.z / r;            // cos(theta)
  const double st = rho / r;            // sin(theta)
  const double cp = k.x / rho;          // cos(phi)
  const double sp = k.y / rho;          // sin(phi)
  t.etheta = {ct * cp, ct * sp, -st};
  t.ephi = {-sp, cp, 0.0};
  return t;
}

CVec3 helicityVector(const Vec3& k, int lam) {
  requireSign(lam, "helicity");
  const HelicityTriad t = helicityTriad(k);
  return (t.etheta.complex() + kJ * static_cast<double>(lam) * t.ephi.complex()) *
         Complex{kInvSqrt2};
}

double onePhotonEAmplitude(double omega, const PhysicalConstants& k, double volume) {
  if (omega <= 0.0 || volume <= 0.0)
    throw std::invalid_argument("one-photon amplitude needs positive omega and volume");
  return std::sqrt(k.hbar * omega / (2.0 * k.eps0 * volume));
}

CVec3 planeWaveE(const ModeWave& m, const Vec3& x, double t,
                 const PhysicalConstants& k, double ampScale) {
  requireSign(m.eps, "frequency sign");
  const double w = k.c * norm(m.k);
  const Complex phase = std::exp(kJ * (dot(m.k, x) - m.eps * w * t));
  return helicityVector(m.k, m.lam) * (m.a * ampScale * phase);
}

CVec3 planeWaveB(const ModeWave& m, const Vec3& x, double t,
                 const PhysicalConstants& k, double ampScale) {
  const Complex f = -kJ * static_cast<double>(m.eps * m.lam) / k.c;
  return planeWaveE(m, x, t, k, ampScale) * f;
}

Multivector planeWaveF(const ModeWave& m, const Vec3& x, double t,
                       const PhysicalConstants& k, double ampScale) {
  const CVec3 e = planeWaveE(m, x, t, k, ampScale);
  Multivector f = Multivector::vector(e);
  f += Multivector::bivector(e * (-kJ * static_cast<double>(m.eps * m.lam)));  // i (cB)
  return f;
}

ModeExpansion::ModeExpansion(double L) : L_(L) {
  if (L <= 0.0) throw std::invalid_argument("box edge must be positive");
}

void ModeExpansion::add(const ModeKey& key, Complex a) {
  requireSign(key.eps, "frequency sign");
  requireSign(key.lam, "helicity");
  if (key.m[0] == 0 && key.m[1] == 0 && key.m[2] == 0)
    throw std::invalid_argument("k = 0 carries no helicity mode");
  amps_[key] += a;
}

void ModeExpansion::set(const ModeKey& key, Complex a) {
  add(key, Complex{});
  amps_[key] = a;
}

Complex ModeExpansion::amplitude(const ModeKey& key) const {
  auto it = amps_.find(key);
  return it == amps_.end() ? Complex{} : it->second;
}

Vec3 ModeExpansion::waveVector(const ModeKey& key) const {
  const double dk = kTwoPi / L_;
  return {key.m[0] * dk, key.m[1] * dk, key.m[2] * dk};
}

double ModeExpansion::omega(const ModeKey& key, const PhysicalConstants& k) const {
  return k.c * norm(waveVector(key));
}

ModeWave ModeExpansion::wave(const ModeKey& key) const {
  return {waveVector(key), key.eps, key.lam, amplitude(key)};
}

bool ModeExpansion::fitsGrid(const GridSpec& g) const {
  if (std::abs(g.L - L_) > 1e-12 * L_) return false;
  for (const auto& [key, a] : amps_)
    if (!g.onLattice(key.m[0], key.m[1], key.m[2])) return false;
  return true;
}

namespace {

std::size_t binIndex(const GridSpec& g, const std::array<int, 3>& m) {
  auto wrap = [&](int v) { return v >= 0 ? v : v + g.n; };
  return g.index(wrap(m[0]), wrap(m[1]), wrap(m[2]));
}

}  // namespace

double modeScaleFactor(ModeScale scale, const GridSpec& g, double omega,
                       const PhysicalConstants& k) {
  if (scale == ModeScale::Unit) {
    const double dk = kTwoPi / g.L;
    return dk * dk * dk;
  }
  return onePhotonEAmplitude(omega, k, g.volume());
}

RSField expandRS(const ModeExpansion& exp, const GridSpec& g, double t,
                 const PhysicalConstants& k, ModeScale scale) {
  if (!exp.fitsGrid(g))
    throw std::invalid_argument("mode expansion does not fit the grid's reciprocal lattice");
  RSField f(g, t);
  f.dLambda_dt = ScalarField(g, t);
  f.dE_dt = Vec3Field(g, t);
  f.dB_dt = Vec3Field(g, t);

  const double n3 = static_cast<double>(g.size());
  for (const auto& [key, a] : exp.amplitudes()) {
    const Vec3 kv = exp.waveVector(key);
    const double w = k.c * norm(kv);
    const Complex cE = a * modeScaleFactor(scale, g, w, k) *
                       std::exp(-kJ * (key.eps * w * t)) * n3;
    const CVec3 pol = helicityVector(kv, key.lam);
    const std::size_t i = binIndex(g, key.m);
    const Complex bFac = -kJ * static_cast<double>(key.eps * key.lam) / k.c;
    const Complex dtFac = -kJ * (key.eps * w);
    f.E.add(i, pol * cE);
    f.B.add(i, pol * (cE * bFac));
    f.dE_dt->add(i, pol * (cE * dtFac));
    f.dB_dt->add(i, pol * (cE * bFac * dtFac));
  }
  for (int c = 0; c < 3; ++c) {
    fft3(g, f.E.comp[c], false);
    fft3(g, f.B.comp[c], false);
    fft3(g, f.dE_dt->comp[c], false);
    fft3(g, f.dB_dt->comp[c], false);
  }
  return f;
}

std::pair<ModeKey, Complex> realConjugatePartner(const ModeKey& key, Complex a,
                                                 double L) {
  const double dk = kTwoPi / L;
  const Vec3 kv{key.m[0] * dk, key.m[1] * dk, key.m[2] * dk};
  // e_lam(-khat) is proportional to conj(e_lam(khat)) = e_{-lam}(khat); eta
  // is the unit proportionality phase under the conjugated inner product.
  const CVec3 eOpp = helicityVector(-kv, key.lam);
  const CVec3 eConj = helicityVector(kv, -key.lam);
  const Complex eta = dot(eConj.conj(), eOpp);
  const ModeKey partner{{-key.m[0], -key.m[1], -key.m[2]}, -key.eps, key.lam};
  return {partner, std::conj(a) * std::conj(eta)};
}

ModeExpansion projectModes(const RSField& f, const PhysicalConstants& k,
                           ModeScale scale, double relTol) {
  const GridSpec& g = f.grid;
  std::array<std::vector<Complex>, 3> eHat = f.E.comp;
  std::array<std::vector<Complex>, 3> bHat = f.B.comp;
  for (int c = 0; c < 3; ++c) {
    fft3(g, eHat[c], true);
    fft3(g, bHat[c], true);
  }
  std::vector<Complex> lamHat = f.lambda.v;
  fft3(g, lamHat, true);

  const double n3 = static_cast<double>(g.size());
  double maxAmp = 0.0;
  for (int c = 0; c < 3; ++c)
    for (const auto& z : eHat[c]) maxAmp = std::max(maxAmp, std::abs(z) / n3);
  if (maxAmp == 0.0) return ModeExpansion(g.L);

  ModeExpansion out(g.L);
  double worstLongitudinal = 0.0, worstOffLattice = 0.0, worstScalar = 0.0;
  for (int ix = 0; ix < g.n; ++ix)
    for (int iy = 0; iy < g.n; ++iy)
      for (int iz = 0; iz < g.n; ++iz) {
        const std::size_t i = g.index(ix, iy, iz);
        const CVec3 cE{eHat[0][i] / n3, eHat[1][i] / n3, eHat[2][i] / n3};
        const CVec3 ccB = CVec3{bHat[0][i] / n3, bHat[1][i] / n3, bHat[2][i] / n3} *
                          Complex{k.c};
        const double mag = std::sqrt(dot(cE.conj(), cE).real() + dot(ccB.conj(), ccB).real());
        worstScalar = std::max(worstScalar, std::abs(lamHat[i]) / n3);
        const int mx = g.fold(ix), my = g.fold(iy), mz = g.fold(iz);
        if (!g.onLattice(mx, my, mz) || (mx == 0 && my == 0 && mz == 0)) {
          worstOffLattice = std::max(worstOffLattice, mag);
          continue;
        }
        if (mag < 1e-13 * maxAmp) continue;
        const Vec3 kv = g.waveVector(ix, iy, iz);
        const Vec3 khat = kv * (1.0 / norm(kv));
        worstLongitudinal =
            std::max({worstLongitudinal, std::abs(dot(khat.complex(), cE)),
                      std::abs(dot(khat.complex(), ccB))});
        const double w = k.c * norm(kv);
        for (int lam : {+1, -1}) {
          const CVec3 pol = helicityVector(kv, lam);
          const Complex eProj = dot(pol.conj(), cE);
          const Complex bProj = dot(pol.conj(), ccB);
          const Complex jlam = kJ * static_cast<double>(lam);
          const Complex plus = (eProj + jlam * bProj) * 0.5;   // eps = +1 share
          const Complex minus = (eProj - jlam * bProj) * 0.5;  // eps = -1 share
          for (int eps : {+1, -1}) {
            const Complex share = eps == +1 ? plus : minus;
            if (std::abs(share) < 1e-12 * maxAmp) continue;
            const Complex amp = share / modeScaleFactor(scale, g, w, k) *
                                std::exp(kJ * (eps * w * f.t));
            out.add({{mx, my, mz}, eps, lam}, amp);
          }
        }
      }

  if (worstLongitudinal > relTol * maxAmp)
    throw std::invalid_argument("projection rejected: longitudinal spectral content " +
                                std::to_string(worstLongitudinal / maxAmp) +
                                " (relative) exceeds tolerance");
  if (worstOffLattice > relTol * maxAmp)
    throw std::invalid_argument("projection rejected: zero-mode/Nyquist content exceeds tolerance");
  if (worstScalar > relTol * maxAmp)
    throw std::invalid_argument("projection rejected: nonzero gauge scalar content");
  return out;
}

namespace {

FourPotential potentialFiltered(const KSpaceState& s, const GridSpec& g,
                                double t, const PhysicalConstants& k,
                                ModeScale scale, const int* epsOnly,
                                const int* lamOnly) {
  if (!s.fitsGrid(g))
    throw std::invalid_argument("state does not fit the grid's reciprocal lattice");
  FourPotential::ModeBacked mb;
  for (const auto& [key, alpha] : s.amplitudes()) {
    if (epsOnly && key.eps != *epsOnly) continue;
    if (lamOnly && key.lam != *lamOnly) continue;
    const Vec3 kv = s.waveVector(key);
    const double w = k.c * norm(kv);
    PotentialMode pm;
    pm.k = kv;
    pm.omega = key.eps * w;
    pm.phi = Complex{};
    // A = -j*eps*E/omega with E the dictionary amplitude, so E = -dt(A).
    pm.A = helicityVector(kv, key.lam) *
           (-kJ * static_cast<double>(key.eps) *
            (modeScaleFactor(scale, g, w, k) / w) * alpha);
    mb.modes.push_back(pm);
  }
  return {g, t, std::move(mb)};
}

}  // namespace

FourPotential transversePotential(const ModeExpansion& exp, const GridSpec& g,
                                  double t, const PhysicalConstants& k,
                                  ModeScale scale) {
  return potentialFiltered(exp, g, t, k, scale, nullptr, nullptr);
}

FourPotential onePhotonPotential(const KSpaceState& s, const GridSpec& g, double t,
                                 const PhysicalConstants& k) {
  return potentialFiltered(s, g, t, k, ModeScale::OnePhoton, nullptr, nullptr);
}

FourPotential onePhotonPotentialSheet(const KSpaceState& s, int eps, int lam,
                                      const GridSpec& g, double t,
                                      const PhysicalConstants& k) {
  return potentialFiltered(s, g, t, k, ModeScale::OnePhoton, &eps, &lam);
}

}  // namespace rsph
