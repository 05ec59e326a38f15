#include "rsphoton/dynamics.hpp"

#include <cmath>

namespace rsph {

ModeExpansion evolveTo(const ModeExpansion& exp, double t0, double t,
                       const PhysicalConstants& k) {
  ModeExpansion out(exp.L());
  for (const auto& [key, a] : exp.amplitudes()) {
    const double w = exp.omega(key, k);
    out.add(key, a * std::exp(-kJ * (key.eps * w * (t - t0))));
  }
  return out;
}

std::vector<Snapshot> evolve(const EvolutionPlan& plan, const PhysicalConstants& k) {
  if (plan.dt <= 0.0) throw std::invalid_argument("evolution step must be positive");
  if (plan.steps < 1) throw std::invalid_argument("evolution needs at least one step");
  if (plan.stride < 1) throw std::invalid_argument("snapshot stride must be positive");
  std::vector<Snapshot> snaps;
  for (int s = 0; s <= plan.steps; s += plan.stride) {
    const double t = plan.t0 + s * plan.dt;
    snaps.push_back({t, evolveTo(plan.expansion, plan.t0, t, k)});
  }
  return snaps;
}

PulseScenario PulseScenario::boxDefault(const GridSpec& g) {
  PulseScenario s;
  s.sigma = 3.0 * g.dx();
  s.x0 = {g.L / 2.0, g.L / 2.0, g.L / 2.0};
  s.m0 = {3, 3, 3};
  s.window = 2.8 * g.dk();
  s.build = Build::RealConjugatePair;
  return s;
}

ModeExpansion buildPulse(const PulseScenario& s, const GridSpec& g,
                         const PhysicalConstants&) {
  if (s.sigma < 2.0 * g.dx())
    throw std::invalid_argument("pulse envelope narrower than two grid cells is unresolvable");
  const double dk = g.dk();
  const Vec3 k0{s.m0[0] * dk, s.m0[1] * dk, s.m0[2] * dk};
  if (norm(k0) == 0.0) throw std::invalid_argument("pulse carrier must be nonzero");

  // Even envelope: the spectrum at -k is the conjugate of the spectrum at k,
  // so the positive-frequency field is real at t = 0 and the conjugate-pair
  // build is exactly twice it there.
  auto envelope = [&](const Vec3& kv) {
    const Vec3 dPlus = kv - k0, dMinus = kv + k0;
    return std::exp(-dot(dPlus, dPlus) * s.sigma * s.sigma / 2.0) +
           std::exp(-dot(dMinus, dMinus) * s.sigma * s.sigma / 2.0);
  };

  // Spectral tail must already be negligible at the lattice edge; check the
  // envelope at the face points nearest the carrier (the radial Gaussian's
  // maximum on each face).
  const double edge = (g.n / 2) * dk;
  double worstEdge = 0.0;
  for (int axis = 0; axis < 3; ++axis)
    for (double sgn : {1.0, -1.0}) {
      Vec3 kv = k0;
      (axis == 0 ? kv.x : axis == 1 ? kv.y : kv.z) = sgn * edge;
      worstEdge = std::max(worstEdge, std::abs(envelope(kv)));
    }
  if (worstEdge > 1e-12)
    throw std::invalid_argument("pulse spectrum does not decay below 1e-12 at the lattice edge");

  // Linear polarization orthogonal to the carrier, from the reference axis
  // least aligned with it; projected transverse to each lattice k below.
  const Vec3 khat0 = k0 * (1.0 / norm(k0));
  Vec3 ref{1, 0, 0};
  if (std::abs(dot(ref, khat0)) > 0.9) ref = {0, 1, 0};
  Vec3 ec = ref - khat0 * dot(khat0, ref);
  ec = ec * (1.0 / norm(ec));

  ModeExpansion out(g.L);
  const int half = g.n / 2;
  for (int mx = -half + 1; mx < half; ++mx)
    for (int my = -half + 1; my < half; ++my)
      for (int mz = -half + 1; mz < half; ++mz) {
        if (mx == 0 && my == 0 && mz == 0) continue;
        const Vec3 kv{mx * dk, my * dk, mz * dk};
        const double env = envelope(kv);
        if (std::abs(env) < 1e-14) continue;
        // Smooth low-|k| window: the helicity triad is not smooth at k = 0,
        // so spectra reaching it develop slowly-decaying spatial tails.
        const double win =
            s.window > 0.0
                ? 1.0 - std::exp(-dot(kv, kv) / (2.0 * s.window * s.window))
                : 1.0;
        const Vec3 kh = kv * (1.0 / norm(kv));
        const Vec3 proj = ec - kh * dot(kh, ec);
        const CVec3 V = proj.complex() *
                        (s.amplitude * env * win * std::exp(-kJ * dot(kv, s.x0)));
        for (int lam : {+1, -1}) {
          const Complex a = dot(helicityVector(kv, lam).conj(), V);
          if (std::abs(a) < 1e-16) continue;
          const ModeKey key{{mx, my, mz}, +1, lam};
          out.add(key, a);
          if (s.build == PulseScenario::Build::RealConjugatePair) {
            const auto [pkey, pa] = realConjugatePartner(key, a, g.L);
            out.add(pkey, pa);
          }
        }
      }
  return out;
}

ScalarField energyDensity(const RSField& f, const PhysicalConstants& k) {
  ScalarField u(f.grid, f.t);
  const double c2 = k.c * k.c;
  for (std::size_t i = 0; i < u.v.size(); ++i) {
    const CVec3 E = f.E.at(i), B = f.B.at(i);
    u.v[i] = dot(E.conj(), E).real() + c2 * dot(B.conj(), B).real();
  }
  return u;
}

double minImageDistance(const Vec3& x, const Vec3& x0, double L) {
  auto axis = [&](double a, double b) {
    double d = std::abs(a - b);
    d = std::fmod(d, L);
    return std::min(d, L - d);
  };
  const double dx = axis(x.x, x0.x), dy = axis(x.y, x0.y), dz = axis(x.z, x0.z);
  return std::sqrt(dx * dx + dy * dy + dz * dz);
}

CausalityReport causalityScan(const std::vector<Snapshot>& snaps, const Vec3& x0,
                              double r0, const GridSpec& g,
                              const PhysicalConstants& k, double tolerance) {
  CausalityReport rep;
  rep.r0 = r0;
  rep.tolerance = tolerance;
  rep.pass = true;

  // Distances are static; compute once.
  std::vector<double> dist(g.size());
  for (int ix = 0; ix < g.n; ++ix)
    for (int iy = 0; iy < g.n; ++iy)
      for (int iz = 0; iz < g.n; ++iz)
        dist[g.index(ix, iy, iz)] = minImageDistance(g.point(ix, iy, iz), x0, g.L);

  for (const auto& snap : snaps) {
    const RSField f = expandRS(snap.amps, g, 0.0, k);
    const ScalarField u = energyDensity(f, k);
    CausalityReport::Row row;
    row.t = snap.t;
    row.radius = r0 + k.c * snap.t;
    row.coneContact = row.radius >= g.L / 2.0;
    double inside = 0.0, outside = 0.0;
    for (std::size_t i = 0; i < u.v.size(); ++i)
      (dist[i] <= row.radius ? inside : outside) += u.v[i].real();
    const double total = inside + outside;
    row.interiorFraction = total > 0.0 ? inside / total : 1.0;
    row.exteriorFraction = total > 0.0 ? outside / total : 0.0;
    if (!row.coneContact && row.exteriorFraction > tolerance) rep.pass = false;
    rep.rows.push_back(row);
  }
  return rep;
}

std::vector<std::pair<double, double>> radialProfile(const RSField& f, const Vec3& x0,
                                                     const PhysicalConstants& k,
                                                     int nBins) {
  if (nBins < 1) throw std::invalid_argument("radial profile needs at least one bin");
  const GridSpec& g = f.grid;
  const ScalarField u = energyDensity(f, k);
  const double rMax = g.L / 2.0;
  std::vector<double> bins(nBins, 0.0);
  double total = 0.0;
  for (int ix = 0; ix < g.n; ++ix)
    for (int iy = 0; iy < g.n; ++iy)
      for (int iz = 0; iz < g.n; ++iz) {
        const std::size_t i = g.index(ix, iy, iz);
        const double r = minImageDistance(g.point(ix, iy, iz), x0, g.L);
        const double e = u.v[i].real();
        total += e;
        int b = static_cast<int>(r / rMax * nBins);
        if (b >= nBins) b = nBins - 1;
        bins[b] += e;
      }
  std::vector<std::pair<double, double>> rows;
  double acc = 0.0;
  for (int b = 0; b < nBins; ++b) {
    acc += bins[b];
    rows.emplace_back((b + 1) * rMax / nBins, total > 0.0 ? acc / total : 0.0);
  }
  return rows;
}

}  // namespace rsph
