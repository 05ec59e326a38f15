#include "rsphoton/em.hpp"

#include <cmath>
#include <utility>

namespace rsph {

namespace {

// FFT bin of a reciprocal-lattice vector; throws if k is off the lattice or
// at/above Nyquist.
std::array<int, 3> latticeBin(const GridSpec& g, const Vec3& k) {
  const double dk = g.dk();
  std::array<int, 3> m{};
  const double comps[3] = {k.x, k.y, k.z};
  for (int a = 0; a < 3; ++a) {
    const double ratio = comps[a] / dk;
    const double rounded = std::round(ratio);
    if (std::abs(ratio - rounded) > 1e-9)
      throw std::invalid_argument("mode wave vector off the reciprocal lattice");
    m[a] = static_cast<int>(rounded);
  }
  if (!g.onLattice(m[0], m[1], m[2]))
    throw std::invalid_argument("mode wave vector beyond the Nyquist range");
  return {m[0] >= 0 ? m[0] : m[0] + g.n, m[1] >= 0 ? m[1] : m[1] + g.n,
          m[2] >= 0 ? m[2] : m[2] + g.n};
}

// exp(-j*w*t) carrier phase with p extra time derivatives (-j*w)^p.
Complex timeFactor(double omega, double t, int dtOrder) {
  Complex f = std::exp(-kJ * omega * t);
  for (int p = 0; p < dtOrder; ++p) f *= -kJ * omega;
  return f;
}

// Synthesize sum of coef * exp(j k.x) terms via one inverse FFT.
template <typename CoefFn>
ScalarField synthesizeScalar(const GridSpec& g, double t,
                             const std::vector<PotentialMode>& modes, CoefFn coef) {
  ScalarField out(g, t);
  const double scale = static_cast<double>(g.size());
  bool any = false;
  for (const auto& m : modes) {
    const Complex c = coef(m);
    if (c == Complex{}) continue;
    const auto bin = latticeBin(g, m.k);
    out.at(bin[0], bin[1], bin[2]) += c * scale;
    any = true;
  }
  if (any) fft3(g, out.v, false);
  return out;
}

template <typename CoefFn>
Vec3Field synthesizeVec3(const GridSpec& g, double t,
                         const std::vector<PotentialMode>& modes, CoefFn coef) {
  Vec3Field out(g, t);
  const double scale = static_cast<double>(g.size());
  bool any[3] = {false, false, false};
  for (const auto& m : modes) {
    const CVec3 c = coef(m);
    const auto bin = latticeBin(g, m.k);
    const std::size_t i = g.index(bin[0], bin[1], bin[2]);
    const Complex comps[3] = {c.x, c.y, c.z};
    for (int a = 0; a < 3; ++a) {
      if (comps[a] == Complex{}) continue;
      out.comp[a][i] += comps[a] * scale;
      any[a] = true;
    }
  }
  for (int a = 0; a < 3; ++a)
    if (any[a]) fft3(g, out.comp[a], false);
  return out;
}

}  // namespace

ScalarField FourPotential::phi(int dtOrder) const {
  if (dtOrder < 0) throw std::invalid_argument("negative time-derivative order");
  if (isModeBacked()) {
    const auto& mb = std::get<ModeBacked>(backing_);
    return synthesizeScalar(grid_, t_, mb.modes, [&](const PotentialMode& m) {
      return m.phi * timeFactor(m.omega, t_, dtOrder);
    });
  }
  const auto& gs = std::get<GridSampled>(backing_);
  if (dtOrder == 0) return gs.phi0;
  if (dtOrder == 1) {
    if (gs.dt <= 0.0)
      throw std::invalid_argument("grid-sampled potential with dt = 0 has no time derivative");
    return (gs.phi1 - gs.phi0) * Complex{1.0 / gs.dt};
  }
  throw std::invalid_argument("grid-sampled potential supports first time derivatives only");
}

Vec3Field FourPotential::A(int dtOrder) const {
  if (dtOrder < 0) throw std::invalid_argument("negative time-derivative order");
  if (isModeBacked()) {
    const auto& mb = std::get<ModeBacked>(backing_);
    return synthesizeVec3(grid_, t_, mb.modes, [&](const PotentialMode& m) {
      return m.A * timeFactor(m.omega, t_, dtOrder);
    });
  }
  const auto& gs = std::get<GridSampled>(backing_);
  if (dtOrder == 0) return gs.A0;
  if (dtOrder == 1) {
    if (gs.dt <= 0.0)
      throw std::invalid_argument("grid-sampled potential with dt = 0 has no time derivative");
    return (gs.A1 - gs.A0) * Complex{1.0 / gs.dt};
  }
  throw std::invalid_argument("grid-sampled potential supports first time derivatives only");
}

FourPotential FourPotential::timeDerivative() const {
  if (!isModeBacked())
    throw std::invalid_argument("time derivative requires a mode-backed potential");
  ModeBacked mb = std::get<ModeBacked>(backing_);
  for (auto& m : mb.modes) {
    const Complex f = -kJ * m.omega;
    m.phi *= f;
    m.A = m.A * f;
  }
  return {grid_, t_, std::move(mb)};
}

FourPotential FourPotential::atTime(double t) const {
  if (!isModeBacked())
    throw std::invalid_argument("time shift requires a mode-backed potential");
  FourPotential r = *this;
  r.t_ = t;
  return r;
}

FourPotential FourPotential::operator+(const FourPotential& o) const {
  requireSameGrid(grid_, o.grid_);
  if (!isModeBacked() || !o.isModeBacked())
    throw std::invalid_argument("potential addition requires mode-backed operands");
  if (t_ != o.t_) throw std::invalid_argument("potential addition requires equal times");
  ModeBacked mb = std::get<ModeBacked>(backing_);
  const auto& om = std::get<ModeBacked>(o.backing_).modes;
  mb.modes.insert(mb.modes.end(), om.begin(), om.end());
  return {grid_, t_, std::move(mb)};
}

FourPotential gaugeTransform(const FourPotential& a, const GaugeFunction& chi) {
  if (a.isModeBacked()) {
    FourPotential::ModeBacked mb = a.modeBacking();
    for (const auto& cm : chi.modes) {
      PotentialMode pm;
      pm.k = cm.k;
      pm.omega = cm.omega;
      pm.phi = kJ * cm.omega * cm.amp;            // -dt(chi)
      pm.A = cm.k.complex() * (kJ * cm.amp);      // grad(chi)
      mb.modes.push_back(pm);
    }
    return {a.grid(), a.t(), std::move(mb)};
  }
  throw std::invalid_argument("gauge transform requires a mode-backed potential");
}

RSField computeRS(const FourPotential& a, const PhysicalConstants& k) {
  RSField f(a.grid(), a.t());
  const ScalarField phi = a.phi(0);
  const Vec3Field A = a.A(0);
  const ScalarField dphi = a.phi(1);
  const Vec3Field dA = a.A(1);

  f.lambda = dphi * Complex{1.0 / (k.c * k.c)} + spectralDiv(A);
  f.E = spectralGrad(phi) * Complex{-1.0} - dA;
  f.B = spectralCurl(A);

  if (a.isModeBacked()) {
    const ScalarField ddphi = a.phi(2);
    const Vec3Field ddA = a.A(2);
    f.dLambda_dt = ddphi * Complex{1.0 / (k.c * k.c)} + spectralDiv(dA);
    f.dE_dt = spectralGrad(dphi) * Complex{-1.0} - ddA;
    f.dB_dt = spectralCurl(dA);
  }
  return f;
}

FourCurrent FourCurrent::matterSource(const ScalarField& rho, const Vec3Field& Jcl,
                                      const PhysicalConstants& k) {
  requireSameGrid(rho.grid, Jcl.grid);
  FourCurrent j(rho.grid, rho.t);
  j.J0 = rho * Complex{k.c};
  j.J = Jcl * Complex{-1.0};
  return j;
}

ScalarField FourCurrent::chargeDensity(const PhysicalConstants& k) const {
  return J0 * Complex{1.0 / k.c};
}

Vec3Field FourCurrent::classicalCurrent() const { return J * Complex{-1.0}; }

GradedResidual maxwellResidualRS(const RSField& f, const FourCurrent* jm,
                                 const PhysicalConstants& k) {
  if (!f.hasTimeDerivatives())
    throw std::invalid_argument("maxwell residual needs analytic time derivatives");
  GradedResidual r;
  const double z0 = k.z0();
  r.scalar = spectralDiv(f.E);
  r.vector = *f.dE_dt * Complex{1.0 / k.c} - spectralCurl(f.B) * Complex{k.c};
  r.bivec = *f.dB_dt + spectralCurl(f.E);
  r.trivec = spectralDiv(f.B) * Complex{k.c};
  if (jm) {
    requireSameGrid(f.grid, jm->grid);
    r.scalar = r.scalar - jm->J0 * Complex{z0};
    r.vector = r.vector + jm->J * Complex{z0};
  }
  return r;
}

MaxwellSplit maxwellSplit(const RSField& f, const FourCurrent* jm,
                          const PhysicalConstants& k) {
  if (!f.hasTimeDerivatives())
    throw std::invalid_argument("maxwell split needs analytic time derivatives");
  MaxwellSplit r;
  r.divB = spectralDiv(f.B);
  r.faraday = *f.dB_dt + spectralCurl(f.E);
  r.gauss = spectralDiv(f.E);
  r.ampere = *f.dE_dt - spectralCurl(f.B) * Complex{k.c * k.c};
  if (jm) {
    requireSameGrid(f.grid, jm->grid);
    r.gauss = r.gauss - jm->chargeDensity(k) * Complex{1.0 / k.eps0};
    r.ampere = r.ampere - jm->classicalCurrent() * Complex{1.0 / k.eps0};
  }
  return r;
}

ParavectorField waveResidual(const FourPotential& a, const FourCurrent* jm,
                             const PhysicalConstants& k) {
  if (!a.isModeBacked())
    throw std::invalid_argument("wave residual needs a mode-backed potential (second time derivative)");
  const double c = k.c;
  const ScalarField phi = a.phi(0);
  const Vec3Field A = a.A(0);

  // box = dct^2 - laplacian, applied per component.
  const ScalarField boxPhi = a.phi(2) * Complex{1.0 / (c * c)} - spectralLaplacian(phi);
  const Vec3Field boxA = a.A(2) * Complex{1.0 / (c * c)} - spectralLaplacian(A);

  const ScalarField lambda =
      a.phi(1) * Complex{1.0 / (c * c)} + spectralDiv(A);
  const ScalarField dLambda_dt =
      a.phi(2) * Complex{1.0 / (c * c)} + spectralDiv(a.A(1));

  ParavectorField r(a.grid(), a.t());
  // c*box(bar(A)) = (box(phi), -c*box(A)); c*dbar(Lambda) = (dt(Lambda), c*grad(Lambda)).
  r.s = boxPhi - dLambda_dt;
  r.v = boxA * Complex{-c} - spectralGrad(lambda) * Complex{c};
  if (jm) {
    requireSameGrid(a.grid(), jm->grid);
    const double z0 = k.z0();
    r.s = r.s - jm->J0 * Complex{z0};
    r.v = r.v + jm->J * Complex{z0};
  }
  return r;
}

Rank2Field faraday(const FourPotential& a, const PhysicalConstants& k) {
  // A^nu = (phi/c, A); d^mu = (dct, -grad).
  const ScalarField a0 = a.phi(0) * Complex{1.0 / k.c};
  const Vec3Field av = a.A(0);
  const ScalarField da0 = a.phi(1) * Complex{1.0 / (k.c * k.c)};  // dct(A^0)
  const Vec3Field dav = a.A(1) * Complex{1.0 / k.c};              // dct(A^i)

  const Vec3Field grad_a0 = spectralGrad(a0);
  std::array<Vec3Field, 3> grad_av;  // grad of each A component
  for (int comp = 0; comp < 3; ++comp) {
    ScalarField s(a.grid(), a.t());
    s.v = av.comp[comp];
    grad_av[comp] = spectralGrad(s);
  }
  auto dmuAnu = [&](int mu, int nu, std::size_t i) -> Complex {
    if (mu == 0) return nu == 0 ? da0[i] : dav.comp[nu - 1][i];
    // d^i = -d/dx_i
    if (nu == 0) return -grad_a0.comp[mu - 1][i];
    return -grad_av[nu - 1].comp[mu - 1][i];
  };

  Rank2Field f(a.grid(), a.t());
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      if (mu == nu) continue;
      auto& out = f.at(mu, nu);
      for (std::size_t i = 0; i < out.v.size(); ++i)
        out.v[i] = dmuAnu(mu, nu, i) - dmuAnu(nu, mu, i);
    }
  return f;
}

ScalarField lagrangianDensity(LagrangianKind kind, const FourPotential& a,
                              const FourCurrent* jm, const PhysicalConstants& k) {
  const GridSpec& g = a.grid();
  ScalarField out(g, a.t());
  const double c2 = k.c * k.c;

  if (kind == LagrangianKind::Std || kind == LagrangianKind::Fermi) {
    const RSField f = computeRS(a, k);
    for (std::size_t i = 0; i < out.v.size(); ++i) {
      const CVec3 E = f.E.at(i), B = f.B.at(i);
      out.v[i] = -k.eps0 * (dot(E.conj(), E) - c2 * dot(B.conj(), B));
    }
    if (kind == LagrangianKind::Fermi)
      for (std::size_t i = 0; i < out.v.size(); ++i)
        out.v[i] -= k.eps0 * c2 * f.lambda[i] * std::conj(f.lambda[i]);
    return out;
  }

  if (kind == LagrangianKind::Cov) {
    // -eps0 c^2 (d^mu A_nu^*)(d_mu A^nu)
    //   = -eps0 c^2 sum_nu g_nn [ dct(A^nu)^* dct(A^nu) - grad(A^nu)^*.grad(A^nu) ].
    const ScalarField a0 = a.phi(0) * Complex{1.0 / k.c};
    const ScalarField da0 = a.phi(1) * Complex{1.0 / (k.c * k.c)};
    const Vec3Field av = a.A(0);
    const Vec3Field dav = a.A(1) * Complex{1.0 / k.c};
    const Vec3Field grad_a0 = spectralGrad(a0);
    std::array<Vec3Field, 3> grad_av;
    for (int comp = 0; comp < 3; ++comp) {
      ScalarField s(g, a.t());
      s.v = av.comp[comp];
      grad_av[comp] = spectralGrad(s);
    }
    for (std::size_t i = 0; i < out.v.size(); ++i) {
      Complex sum = std::conj(da0[i]) * da0[i] - dot(grad_a0.at(i).conj(), grad_a0.at(i));
      for (int nu = 0; nu < 3; ++nu)
        sum -= std::conj(dav.comp[nu][i]) * dav.comp[nu][i] -
               dot(grad_av[nu].at(i).conj(), grad_av[nu].at(i));
      out.v[i] = -k.eps0 * c2 * sum;
    }
    return out;
  }

  // Int: -(Jm^nu* A_nu + Jm^nu A_nu^*) with A_nu = (phi/c, -A).
  if (!jm) throw std::invalid_argument("interaction density needs a matter current");
  requireSameGrid(g, jm->grid);
  const ScalarField a0 = a.phi(0) * Complex{1.0 / k.c};
  const Vec3Field av = a.A(0);
  for (std::size_t i = 0; i < out.v.size(); ++i) {
    const Complex term = std::conj(jm->J0[i]) * a0[i] - dot(jm->J.at(i).conj(), av.at(i));
    out.v[i] = -(term + std::conj(term));
  }
  return out;
}

Rank2Field conjugateMomentum(MomentumKind kind, const FourPotential& a,
                             const PhysicalConstants& k) {
  if (kind == MomentumKind::Std) {
    Rank2Field f = faraday(a, k);
    for (auto& c : f.comp)
      for (auto& z : c.v) z *= k.eps0;
    return f;
  }
  // Cov: -eps0 d^mu A^nu.
  const ScalarField a0 = a.phi(0) * Complex{1.0 / k.c};
  const ScalarField da0 = a.phi(1) * Complex{1.0 / (k.c * k.c)};
  const Vec3Field av = a.A(0);
  const Vec3Field dav = a.A(1) * Complex{1.0 / k.c};
  const Vec3Field grad_a0 = spectralGrad(a0);
  std::array<Vec3Field, 3> grad_av;
  for (int comp = 0; comp < 3; ++comp) {
    ScalarField s(a.grid(), a.t());
    s.v = av.comp[comp];
    grad_av[comp] = spectralGrad(s);
  }
  Rank2Field f(a.grid(), a.t());
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      auto& out = f.at(mu, nu);
      for (std::size_t i = 0; i < out.v.size(); ++i) {
        Complex d;
        if (mu == 0)
          d = nu == 0 ? da0[i] : dav.comp[nu - 1][i];
        else
          d = nu == 0 ? -grad_a0.comp[mu - 1][i] : -grad_av[nu - 1].comp[mu - 1][i];
        out.v[i] = -k.eps0 * d;
      }
    }
  return f;
}

}  // namespace rsph
