#include "rsphoton/currents.hpp"

#include <cmath>

namespace rsph {

std::vector<SheetContent> renderSheets(const ModeExpansion& exp, const GridSpec& g,
                                       double t, const PhysicalConstants& k,
                                       ModeScale scale) {
  if (!exp.fitsGrid(g))
    throw std::invalid_argument("mode expansion does not fit the grid's reciprocal lattice");

  std::vector<SheetContent> sheets;
  for (int eps : {+1, -1})
    for (int lam : {+1, -1}) {
      bool any = false;
      for (const auto& [key, a] : exp.amplitudes())
        if (key.eps == eps && key.lam == lam) { any = true; break; }
      if (!any) continue;

      SheetContent sh;
      sh.eps = eps;
      sh.lam = lam;
      sh.phi = ScalarField(g, t);
      sh.dphi_dt = ScalarField(g, t);
      sh.A = Vec3Field(g, t);
      sh.dA_dt = Vec3Field(g, t);
      sh.B = Vec3Field(g, t);

      const double n3 = static_cast<double>(g.size());
      auto wrap = [&](int v) { return v >= 0 ? v : v + g.n; };
      for (const auto& [key, a] : exp.amplitudes()) {
        if (key.eps != eps || key.lam != lam) continue;
        const Vec3 kv = exp.waveVector(key);
        const double w = k.c * norm(kv);
        // E-amplitude of the mode; A = -j*eps*E/w, B = (-j*eps*lam/c)*E.
        const Complex cE = a * modeScaleFactor(scale, g, w, k) *
                           std::exp(-kJ * (eps * w * t)) * n3;
        const CVec3 pol = helicityVector(kv, key.lam);
        const std::size_t i = g.index(wrap(key.m[0]), wrap(key.m[1]), wrap(key.m[2]));
        const Complex aFac = -kJ * static_cast<double>(eps) / w;
        const Complex bFac = -kJ * static_cast<double>(eps * lam) / k.c;
        sh.A.add(i, pol * (cE * aFac));
        sh.dA_dt.add(i, pol * (-cE));  // dt(A) = -E
        sh.B.add(i, pol * (cE * bFac));
      }
      for (int c = 0; c < 3; ++c) {
        fft3(g, sh.A.comp[c], false);
        fft3(g, sh.dA_dt.comp[c], false);
        fft3(g, sh.B.comp[c], false);
      }
      sh.E = sh.dA_dt * Complex{-1.0};
      sheets.push_back(std::move(sh));
    }
  return sheets;
}

FourCurrent noetherCurrent(CurrentKind kind, const std::vector<SheetContent>& sheets,
                           const PhysicalConstants& k) {
  if (sheets.empty()) throw std::invalid_argument("current needs eps-labeled sheet content");
  const GridSpec& g = sheets.front().A.grid;
  FourCurrent out(g, sheets.front().A.t);
  const Complex pref = kJ * (k.eps0 * k.c / k.hbar);

  if (kind == CurrentKind::Standard) {
    for (const auto& sh : sheets) {
      requireSameGrid(g, sh.A.grid);
      const double e = sh.eps;
      for (std::size_t i = 0; i < out.J0.v.size(); ++i) {
        const CVec3 A = sh.A.at(i), E = sh.E.at(i), B = sh.B.at(i);
        const Complex j0 = pref * e * dot(E.conj(), A);
        out.J0[i] += j0 + std::conj(j0);
        const CVec3 jv = (cross(B.conj(), A) * Complex{-1.0} + E.conj() * sh.phi[i]) *
                         (pref * e);
        out.J.add(i, jv + jv.conj());
      }
    }
    return out;
  }

  // Covariant: J^mu = -pref * sum_eps eps * (A_nu^* <-> d^mu A^nu) with
  // A^nu = (phi/c, A), d^mu = (dct, -grad); real without an extra c.c.
  for (const auto& sh : sheets) {
    requireSameGrid(g, sh.A.grid);
    const double e = sh.eps;
    const ScalarField a0 = sh.phi * Complex{1.0 / k.c};
    const ScalarField da0 = sh.dphi_dt * Complex{1.0 / (k.c * k.c)};  // dct
    const Vec3Field dav = sh.dA_dt * Complex{1.0 / k.c};
    const Vec3Field grad_a0 = spectralGrad(a0);
    std::array<Vec3Field, 3> grad_av;
    for (int comp = 0; comp < 3; ++comp) {
      ScalarField s(g, sh.A.t);
      s.v = sh.A.comp[comp];
      grad_av[comp] = spectralGrad(s);
    }
    auto twoSided = [](Complex fstar, Complex df, Complex dfstar, Complex f) {
      return fstar * df - dfstar * f;
    };
    for (std::size_t i = 0; i < out.J0.v.size(); ++i) {
      // mu = 0: A_nu^* <-> dct A^nu = a0^* <-> dct a0 - A^* . <-> dct A.
      Complex s0 = twoSided(std::conj(a0[i]), da0[i], std::conj(da0[i]), a0[i]);
      for (int c = 0; c < 3; ++c)
        s0 -= twoSided(std::conj(sh.A.comp[c][i]), dav.comp[c][i],
                       std::conj(dav.comp[c][i]), sh.A.comp[c][i]);
      out.J0[i] += -pref * e * s0;
      // mu = i: d^i = -d/dx_i.
      for (int axis = 0; axis < 3; ++axis) {
        Complex si = -twoSided(std::conj(a0[i]), grad_a0.comp[axis][i],
                               std::conj(grad_a0.comp[axis][i]), a0[i]);
        for (int c = 0; c < 3; ++c)
          si += twoSided(std::conj(sh.A.comp[c][i]), grad_av[c].comp[axis][i],
                         std::conj(grad_av[c].comp[axis][i]), sh.A.comp[c][i]);
        out.J.comp[axis][i] += -pref * e * si;
      }
    }
  }
  return out;
}

ScalarField continuityResidual(const std::vector<FourCurrent>& series, double dt,
                               const FourCurrent* jm,
                               const std::vector<SheetContent>* sheets,
                               const PhysicalConstants& k) {
  if (series.size() < 3)
    throw std::invalid_argument("continuity residual needs at least 3 time samples");
  if (dt <= 0.0) throw std::invalid_argument("continuity residual needs dt > 0");
  const std::size_t mid = series.size() / 2;
  const FourCurrent& lo = series[mid - 1];
  const FourCurrent& hi = series[mid + 1];
  requireSameGrid(lo.grid, hi.grid);

  // dct(J0) central + div(J) at the middle sample.
  ScalarField r = (hi.J0 - lo.J0) * Complex{1.0 / (2.0 * dt * k.c)} +
                  spectralDiv(series[mid].J);

  if (jm && sheets) {
    // source: -(j*mu0/(hbar*c)) A_nu^* Jm^nu + c.c., A_nu = (phi/c, -A).
    const Complex pref = -kJ * (k.mu0() / (k.hbar * k.c));
    for (const auto& sh : *sheets) {
      requireSameGrid(r.grid, sh.A.grid);
      for (std::size_t i = 0; i < r.v.size(); ++i) {
        const Complex term = pref * (std::conj(sh.phi[i]) / k.c * jm->J0[i] -
                                     dot(sh.A.at(i).conj(), jm->J.at(i)));
        r.v[i] -= term + std::conj(term);
      }
    }
  }
  return r;
}

}  // namespace rsph
