#include "rsphoton/qops.hpp"

#include <cmath>
#include <random>

namespace rsph {

CVec3 SpinMatrices::apply(int i, const CVec3& v) {
  // S_i v = j * (e_i x v).
  switch (i) {
    case 0: return {Complex{}, -kJ * v.z, kJ * v.y};
    case 1: return {kJ * v.z, Complex{}, -kJ * v.x};
    case 2: return {-kJ * v.y, kJ * v.x, Complex{}};
    default: throw std::invalid_argument("spin axis must be 0, 1 or 2");
  }
}

CVec3 SpinMatrices::applyDot(const Vec3& a, const CVec3& v) {
  return kJ * cross(a.complex(), v);
}

Complex scalarProductK(const KSpaceState& a, const KSpaceState& b) {
  if (std::abs(a.L() - b.L()) > 1e-12 * a.L())
    throw std::invalid_argument("k-space scalar product requires the same lattice");
  Complex s{};
  for (const auto& [key, amp] : a.amplitudes()) {
    const Complex other = b.amplitude(key);
    if (other != Complex{}) s += std::conj(amp) * other;
  }
  return s;
}

Complex scalarProductX(const std::vector<SheetContent>& s1,
                       const std::vector<SheetContent>& s2,
                       const PhysicalConstants& k) {
  Complex total{};
  for (const auto& a : s1)
    for (const auto& b : s2) {
      if (a.eps != b.eps || a.lam != b.lam) continue;  // diagonal in (eps, lam)
      requireSameGrid(a.E.grid, b.A.grid);
      Complex acc{};
      for (std::size_t i = 0; i < a.E.comp[0].size(); ++i)
        acc += dot(a.E.at(i).conj(), b.A.at(i));
      total += static_cast<double>(a.eps) * acc * a.E.grid.cellVolume();
    }
  return kJ * (2.0 * k.eps0 / k.hbar) * total;
}

namespace {

std::vector<SheetContent> onePhotonSheets(const KSpaceState& s, const GridSpec& g,
                                          double t, const PhysicalConstants& k) {
  return renderSheets(s, g, t, k, ModeScale::OnePhoton);
}

}  // namespace

Complex scalarProductX(const KSpaceState& s1, const KSpaceState& s2,
                       const GridSpec& g, double t, const PhysicalConstants& k) {
  return scalarProductX(onePhotonSheets(s1, g, t, k), onePhotonSheets(s2, g, t, k), k);
}

KSpaceState applyDiagonal(const KSpaceState& s,
                          const std::function<Complex(const ModeKey&, const Vec3&)>& f) {
  KSpaceState out(s.L());
  for (const auto& [key, amp] : s.amplitudes())
    out.add(key, amp * f(key, s.waveVector(key)));
  return out;
}

KSpaceState applyMomentum(const KSpaceState& s, int axis, const PhysicalConstants& k) {
  return applyDiagonal(s, [&](const ModeKey&, const Vec3& kv) {
    const double comps[3] = {kv.x, kv.y, kv.z};
    return Complex{k.hbar * comps[axis]};
  });
}

KSpaceState applyMomentumMagnitude(const KSpaceState& s, const PhysicalConstants& k) {
  return applyDiagonal(s, [&](const ModeKey&, const Vec3& kv) {
    return Complex{k.hbar * norm(kv)};
  });
}

KSpaceState applyHelicity(const KSpaceState& s) {
  return applyDiagonal(s, [](const ModeKey& key, const Vec3&) {
    return Complex{static_cast<double>(key.lam)};
  });
}

KSpaceState applyFrequencySign(const KSpaceState& s) {
  return applyDiagonal(s, [](const ModeKey& key, const Vec3&) {
    return Complex{static_cast<double>(key.eps)};
  });
}

KSpaceState applyHamiltonian(const KSpaceState& s, const PhysicalConstants& k) {
  return applyDiagonal(s, [&](const ModeKey& key, const Vec3& kv) {
    return Complex{key.eps * k.c * k.hbar * norm(kv)};
  });
}

RSField hamiltonianCurl(const RSField& f, const PhysicalConstants& k) {
  RSField out(f.grid, f.t);
  out.E = spectralCurl(f.B) * (kJ * k.hbar * k.c * k.c);
  out.B = spectralCurl(f.E) * (-kJ * k.hbar);
  return out;
}

double VectorKState::norm2() const {
  double s = 0.0;
  for (const auto& c : comp)
    for (const auto& z : c) s += std::norm(z);
  return s;
}

namespace {

VectorKState scaled(const VectorKState& s, Complex f) {
  VectorKState out(s.grid, s.eps);
  for (int c = 0; c < 3; ++c)
    for (std::size_t i = 0; i < s.comp[c].size(); ++i) out.comp[c][i] = s.comp[c][i] * f;
  return out;
}

VectorKState sum(const VectorKState& a, const VectorKState& b, double bSign = 1.0) {
  if (!(a.grid == b.grid)) throw std::invalid_argument("k-lattice mismatch");
  VectorKState out(a.grid, a.eps);
  for (int c = 0; c < 3; ++c)
    for (std::size_t i = 0; i < a.comp[c].size(); ++i)
      out.comp[c][i] = a.comp[c][i] + bSign * b.comp[c][i];
  return out;
}

// Multiply pointwise by f(k) (Complex) on every polarization component.
template <typename Fn>
VectorKState mulPointwise(const VectorKState& s, Fn f) {
  VectorKState out(s.grid, s.eps);
  const KGrid& g = s.grid;
  for (int ix = 0; ix < g.n; ++ix)
    for (int iy = 0; iy < g.n; ++iy)
      for (int iz = 0; iz < g.n; ++iz) {
        const std::size_t i = g.index(ix, iy, iz);
        const Complex m = f(g.point(ix, iy, iz));
        for (int c = 0; c < 3; ++c) out.comp[c][i] = s.comp[c][i] * m;
      }
  return out;
}

// Pointwise polarization-matrix action m(k, v).
template <typename Fn>
VectorKState mulMatrix(const VectorKState& s, Fn m) {
  VectorKState out(s.grid, s.eps);
  const KGrid& g = s.grid;
  for (int ix = 0; ix < g.n; ++ix)
    for (int iy = 0; iy < g.n; ++iy)
      for (int iz = 0; iz < g.n; ++iz) {
        const std::size_t i = g.index(ix, iy, iz);
        out.set(i, m(g.point(ix, iy, iz), s.at(i)));
      }
  return out;
}

VectorKState centered(const VectorKState& s, int axis, int step) {
  // (psi(k + step*h*e_axis) - psi(k - step*h*e_axis)) / (2*step*h), zero
  // outside the lattice.
  const KGrid& g = s.grid;
  VectorKState out(g, s.eps);
  const double inv = 1.0 / (2.0 * step * g.h);
  int d[3] = {0, 0, 0};
  d[axis] = step;
  for (int ix = 0; ix < g.n; ++ix)
    for (int iy = 0; iy < g.n; ++iy)
      for (int iz = 0; iz < g.n; ++iz) {
        const std::size_t i = g.index(ix, iy, iz);
        const int px = ix + d[0], py = iy + d[1], pz = iz + d[2];
        const int mx = ix - d[0], my = iy - d[1], mz = iz - d[2];
        auto inRange = [&](int v) { return v >= 0 && v < g.n; };
        for (int c = 0; c < 3; ++c) {
          Complex hiV{}, loV{};
          if (inRange(px) && inRange(py) && inRange(pz)) hiV = s.comp[c][g.index(px, py, pz)];
          if (inRange(mx) && inRange(my) && inRange(mz)) loV = s.comp[c][g.index(mx, my, mz)];
          out.comp[c][i] = (hiV - loV) * inv;
        }
      }
  return out;
}

}  // namespace

VectorKState kDerivative(const VectorKState& s, int axis, bool richardson) {
  if (axis < 0 || axis > 2) throw std::invalid_argument("axis must be 0, 1 or 2");
  VectorKState d1 = centered(s, axis, 1);
  if (!richardson) return d1;
  VectorKState d2 = centered(s, axis, 2);
  return sum(scaled(d1, 4.0 / 3.0), scaled(d2, 1.0 / 3.0), -1.0);
}

VectorKState applyP(const VectorKState& s, int axis, const PhysicalConstants& k) {
  return mulPointwise(s, [&](const Vec3& kv) {
    const double comps[3] = {kv.x, kv.y, kv.z};
    return Complex{k.hbar * comps[axis]};
  });
}

VectorKState applyAbsP(const VectorKState& s, const PhysicalConstants& k) {
  return mulPointwise(s, [&](const Vec3& kv) { return Complex{k.hbar * norm(kv)}; });
}

VectorKState applyH(const VectorKState& s, const PhysicalConstants& k) {
  const double e = s.eps;
  return mulPointwise(s, [&](const Vec3& kv) { return Complex{e * k.c * k.hbar * norm(kv)}; });
}

VectorKState applyS(const VectorKState& s, int axis) {
  return mulMatrix(s, [&](const Vec3&, const CVec3& v) { return SpinMatrices::apply(axis, v); });
}

VectorKState applyHelicity(const VectorKState& s) {
  return mulMatrix(s, [&](const Vec3& kv, const CVec3& v) {
    const double r = norm(kv);
    if (r == 0.0) throw std::invalid_argument("helicity undefined at the k = 0 point");
    return SpinMatrices::applyDot(kv * (1.0 / r), v);
  });
}

VectorKState applyJ(const VectorKState& s, int axis, const PhysicalConstants& k,
                    bool richardson) {
  // J_i = -j*hbar*(k x grad_k)_i + hbar*S_i.
  const int a = (axis + 1) % 3, b = (axis + 2) % 3;
  const VectorKState da = kDerivative(s, a, richardson);
  const VectorKState db = kDerivative(s, b, richardson);
  VectorKState out(s.grid, s.eps);
  const KGrid& g = s.grid;
  for (int ix = 0; ix < g.n; ++ix)
    for (int iy = 0; iy < g.n; ++iy)
      for (int iz = 0; iz < g.n; ++iz) {
        const std::size_t i = g.index(ix, iy, iz);
        const Vec3 kv = g.point(ix, iy, iz);
        const double comps[3] = {kv.x, kv.y, kv.z};
        const CVec3 orbital = (db.at(i) * comps[a] - da.at(i) * comps[b]) * (-kJ * k.hbar);
        out.set(i, orbital + SpinMatrices::apply(axis, s.at(i)) * Complex{k.hbar});
      }
  return out;
}

VectorKState applyK(const VectorKState& s, int axis, const PhysicalConstants& k,
                    bool richardson) {
  // K_i = j*hbar*|k|*d/dk_i + hbar*(khat x S)_i.
  const VectorKState d = kDerivative(s, axis, richardson);
  VectorKState out(s.grid, s.eps);
  const KGrid& g = s.grid;
  const int a = (axis + 1) % 3, b = (axis + 2) % 3;
  for (int ix = 0; ix < g.n; ++ix)
    for (int iy = 0; iy < g.n; ++iy)
      for (int iz = 0; iz < g.n; ++iz) {
        const std::size_t i = g.index(ix, iy, iz);
        const Vec3 kv = g.point(ix, iy, iz);
        const double r = norm(kv);
        if (r == 0.0) throw std::invalid_argument("boost undefined at the k = 0 point");
        const double u[3] = {kv.x / r, kv.y / r, kv.z / r};
        // (u x S)_axis = u_a S_b - u_b S_a for cyclic (axis, a, b).
        const CVec3 spin = SpinMatrices::apply(b, s.at(i)) * Complex{u[a]} -
                           SpinMatrices::apply(a, s.at(i)) * Complex{u[b]};
        out.set(i, d.at(i) * (kJ * k.hbar * r) + spin * Complex{k.hbar});
      }
  return out;
}

namespace {

// Central difference on an analytic state; nesting closures composes the
// stencils, so the step is free of any lattice spacing.
KWaveFunction analyticDerivative(const KWaveFunction& f, int axis, double h) {
  return [f, axis, h](const Vec3& kv) {
    Vec3 kp = kv, km = kv;
    switch (axis) {
      case 0: kp.x += h; km.x -= h; break;
      case 1: kp.y += h; km.y -= h; break;
      default: kp.z += h; km.z -= h; break;
    }
    return (f(kp) - f(km)) * Complex{1.0 / (2.0 * h)};
  };
}

}  // namespace

std::vector<CommutatorCase> commutatorCases(const PhysicalConstants& k) {
  const double hb = k.hbar;
  const double c2 = k.c * k.c;

  auto S = [](int i) -> KWaveOperator {
    return [i](const KWaveFunction& f, double) -> KWaveFunction {
      return [f, i](const Vec3& kv) { return SpinMatrices::apply(i, f(kv)); };
    };
  };
  auto P = [hb](int i) -> KWaveOperator {
    return [i, hb](const KWaveFunction& f, double) -> KWaveFunction {
      return [f, i, hb](const Vec3& kv) {
        const double comps[3] = {kv.x, kv.y, kv.z};
        return f(kv) * Complex{hb * comps[i]};
      };
    };
  };
  // eps = +1 sheet; cases that need H are marked domainLimited.
  KWaveOperator H = [hb, c = k.c](const KWaveFunction& f, double) -> KWaveFunction {
    return [f, hb, c](const Vec3& kv) { return f(kv) * Complex{c * hb * norm(kv)}; };
  };
  // J_i = -j*hbar*(k x grad_k)_i + hbar*S_i.
  auto J = [hb](int i) -> KWaveOperator {
    return [i, hb](const KWaveFunction& f, double h) -> KWaveFunction {
      const int a = (i + 1) % 3, b = (i + 2) % 3;
      const KWaveFunction da = analyticDerivative(f, a, h);
      const KWaveFunction db = analyticDerivative(f, b, h);
      return [f, da, db, i, a, b, hb](const Vec3& kv) {
        const double comps[3] = {kv.x, kv.y, kv.z};
        const CVec3 orbital =
            (db(kv) * Complex{comps[a]} - da(kv) * Complex{comps[b]}) * (-kJ * hb);
        return orbital + SpinMatrices::apply(i, f(kv)) * Complex{hb};
      };
    };
  };
  // K_i = j*hbar*|k|*d/dk_i + hbar*(khat x S)_i.
  auto K = [hb](int i) -> KWaveOperator {
    return [i, hb](const KWaveFunction& f, double h) -> KWaveFunction {
      const KWaveFunction d = analyticDerivative(f, i, h);
      const int a = (i + 1) % 3, b = (i + 2) % 3;
      return [f, d, a, b, hb](const Vec3& kv) {
        const double r = norm(kv);
        if (r == 0.0) throw std::invalid_argument("boost undefined at the k = 0 point");
        const double u[3] = {kv.x / r, kv.y / r, kv.z / r};
        const CVec3 v = f(kv);
        // (u x S)_axis = u_a S_b - u_b S_a for cyclic (axis, a, b).
        const CVec3 spin = SpinMatrices::apply(b, v) * Complex{u[a]} -
                           SpinMatrices::apply(a, v) * Complex{u[b]};
        return d(kv) * (kJ * hb * r) + spin * Complex{hb};
      };
    };
  };
  auto times = [](Complex fac, KWaveOperator op) -> KWaveOperator {
    return [fac, op](const KWaveFunction& f, double h) -> KWaveFunction {
      const KWaveFunction g = op(f, h);
      return [g, fac](const Vec3& kv) { return g(kv) * fac; };
    };
  };
  KWaveOperator zero = [](const KWaveFunction&, double) -> KWaveFunction {
    return [](const Vec3&) { return CVec3{}; };
  };

  std::vector<CommutatorCase> cases;
  cases.push_back({"[S1,S2]-jS3", false, false, false, S(0), S(1), times(kJ, S(2))});
  cases.push_back({"[S2,S3]-jS1", false, false, false, S(1), S(2), times(kJ, S(0))});
  cases.push_back({"[S3,S1]-jS2", false, false, false, S(2), S(0), times(kJ, S(1))});
  cases.push_back({"[P1,P2]", false, false, false, P(0), P(1), zero});
  // Exact identity, but K's stencil of k2*psi minus k2 times the stencil
  // cancels to roundoff amplified by 1/(2h).
  cases.push_back({"[K1,P2]", false, true, false, K(0), P(1), zero});
  cases.push_back({"[J3,P1]-jhP2", true, false, false, J(2), P(0), times(kJ * hb, P(1))});
  cases.push_back({"[J1,J2]-jhJ3", true, false, false, J(0), J(1), times(kJ * hb, J(2))});
  cases.push_back({"[J3,H]", true, false, false, J(2), H, zero});
  cases.push_back({"[K1,P1]-jhH", true, false, false, K(0), P(0), times(kJ * hb, H)});
  cases.push_back({"[J1,K2]-jhK3", true, false, false, J(0), K(1), times(kJ * hb, K(2))});
  cases.push_back(
      {"[K1,K2]+jhJ3/c2", true, false, false, K(0), K(1), times(-kJ * hb / c2, J(2))});
  cases.push_back({"[K3,H]-jhc2P3", true, false, true, K(2), H, times(kJ * hb * c2, P(2))});
  return cases;
}

namespace {

double residualNorm(const CommutatorCase& cc, const KWaveFunction& psi, double h,
                    const std::vector<Vec3>& nodes) {
  const KWaveFunction ab = cc.opA(cc.opB(psi, h), h);
  const KWaveFunction ba = cc.opB(cc.opA(psi, h), h);
  const KWaveFunction expect = cc.expected(psi, h);
  double r2 = 0.0, n2 = 0.0;
  for (const Vec3& kv : nodes) {
    const CVec3 r = ab(kv) - ba(kv) - expect(kv);
    const CVec3 p = psi(kv);
    r2 += std::norm(r.x) + std::norm(r.y) + std::norm(r.z);
    n2 += std::norm(p.x) + std::norm(p.y) + std::norm(p.z);
  }
  return std::sqrt(r2 / n2);
}

}  // namespace

std::vector<CommutatorReport> commutatorCheck(const PhysicalConstants& k,
                                              unsigned seed, int nStates,
                                              double tol, double h) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> jitter(-0.5, 0.5);
  std::normal_distribution<double> gauss(0.0, 1.0);

  // Gaussian packets centered away from the k = 0 singularity; the stencil
  // truncation scales as (h/sigma)^2 times the generators' k magnitudes, so
  // the default step keeps residuals well under 1e-6 while staying far above
  // the roundoff floor.
  const double sigma = 0.5;

  std::vector<CommutatorReport> reports;
  const auto cases = commutatorCases(k);
  for (int st = 0; st < nStates; ++st) {
    const Vec3 center{5.0 + jitter(rng), 5.0 + jitter(rng), 6.0 + jitter(rng)};
    const CVec3 pol{Complex{gauss(rng), gauss(rng)}, Complex{gauss(rng), gauss(rng)},
                    Complex{gauss(rng), gauss(rng)}};
    const double inv = 1.0 / (2.0 * sigma * sigma);
    const KWaveFunction psi = [center, pol, inv](const Vec3& kv) {
      const Vec3 d = kv - center;
      return pol * Complex{std::exp(-dot(d, d) * inv)};
    };

    // Quadrature nodes covering the packet to 5 sigma at sigma/2 spacing;
    // the uniform weight cancels in the relative residual.
    const int nq = 21;
    const double dq = 10.0 * sigma / (nq - 1);
    std::vector<Vec3> nodes;
    nodes.reserve(static_cast<std::size_t>(nq) * nq * nq);
    for (int ix = 0; ix < nq; ++ix)
      for (int iy = 0; iy < nq; ++iy)
        for (int iz = 0; iz < nq; ++iz)
          nodes.push_back(center + Vec3{(ix - nq / 2) * dq, (iy - nq / 2) * dq,
                                        (iz - nq / 2) * dq});

    for (const auto& cc : cases) {
      CommutatorReport r;
      r.pair = cc.pair;
      r.state = st;
      r.stencil = cc.stencil;
      r.cancellation = cc.cancellation;
      r.domainLimited = cc.domainLimited;
      r.residual = residualNorm(cc, psi, h, nodes);
      if (cc.stencil) {
        r.residualFine = residualNorm(cc, psi, h / 2.0, nodes);
        r.order = std::log2(r.residual / r.residualFine);
        r.pass = r.residual < tol && std::abs(r.order - 2.0) <= 0.3;
      } else if (cc.cancellation) {
        r.residualFine = residualNorm(cc, psi, h / 2.0, nodes);
        r.order = std::log2(r.residual / r.residualFine);
        r.pass = r.residual < 1e-8;
      } else {
        r.residualFine = r.residual;
        r.order = 0.0;
        r.pass = r.residual < 1e-12;
      }
      reports.push_back(std::move(r));
    }
  }
  return reports;
}

}  // namespace rsph
