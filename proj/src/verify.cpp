#include "rsphoton/verify.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>

#include "rsphoton/currents.hpp"
#include "rsphoton/dynamics.hpp"
#include "rsphoton/em.hpp"
#include "rsphoton/modes.hpp"
#include "rsphoton/qops.hpp"

namespace rsph {

namespace {

using Rng = std::mt19937_64;

double uniform(Rng& rng, double lo = -1.0, double hi = 1.0) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

Complex randc(Rng& rng) { return {uniform(rng), uniform(rng)}; }

int randSign(Rng& rng) { return (rng() & 1) ? +1 : -1; }

Multivector randomMultivector(Rng& rng) {
  Multivector m;
  for (int i = 0; i < kBladeCount; ++i) m[i] = randc(rng);
  return m;
}

double relDiff(const Multivector& a, const Multivector& b) {
  double num = 0.0, den = 0.0;
  for (int i = 0; i < kBladeCount; ++i) {
    num = std::max(num, std::abs(a[i] - b[i]));
    den = std::max({den, std::abs(a[i]), std::abs(b[i])});
  }
  return den > 0.0 ? num / den : num;
}

CheckResult ck(std::string name, double measured, double tolerance) {
  return {std::move(name), measured, tolerance, measured <= tolerance};
}

// Random lattice mode number with every |component| <= span, excluding 0.
std::array<int, 3> randomModeNumber(Rng& rng, int span) {
  std::uniform_int_distribution<int> d(-span, span);
  while (true) {
    std::array<int, 3> m{d(rng), d(rng), d(rng)};
    if (m[0] || m[1] || m[2]) return m;
  }
}

ModeExpansion randomExpansion(Rng& rng, double L, int nModes, bool bothEps) {
  ModeExpansion exp(L);
  for (int i = 0; i < nModes; ++i) {
    const ModeKey key{randomModeNumber(rng, 4), bothEps ? randSign(rng) : +1,
                      randSign(rng)};
    exp.add(key, randc(rng));
  }
  return exp;
}

// Band-limited random field: a handful of spectral coefficients placed
// directly, then an inverse transform.
ScalarField randomBandScalar(Rng& rng, const GridSpec& g, int nModes) {
  ScalarField f(g);
  const double n3 = static_cast<double>(g.size());
  auto wrap = [&](int m) { return m >= 0 ? m : m + g.n; };
  for (int i = 0; i < nModes; ++i) {
    const auto m = randomModeNumber(rng, 5);
    f.v[g.index(wrap(m[0]), wrap(m[1]), wrap(m[2]))] += randc(rng) * n3;
  }
  fft3(g, f.v, false);
  return f;
}

Vec3Field randomBandVec3(Rng& rng, const GridSpec& g, int nModes) {
  Vec3Field f(g);
  const double n3 = static_cast<double>(g.size());
  auto wrap = [&](int m) { return m >= 0 ? m : m + g.n; };
  for (int i = 0; i < nModes; ++i) {
    const auto m = randomModeNumber(rng, 5);
    const std::size_t idx = g.index(wrap(m[0]), wrap(m[1]), wrap(m[2]));
    f.add(idx, CVec3{randc(rng), randc(rng), randc(rng)} * n3);
  }
  for (auto& c : f.comp) fft3(g, c, false);
  return f;
}

double maxAbsDiff(const ScalarField& a, const ScalarField& b) {
  return (a - b).maxAbs();
}

double maxAbsDiff(const Vec3Field& a, const Vec3Field& b) {
  return (a - b).maxAbs();
}

// --------------------------------------------------------------------------
// algebra

// Independent product of two canonical basis blades, from bitset identities:
// each blade is a subset of {e1,e2,e3}, the product mask is the symmetric
// difference, and the sign counts transpositions plus the orientation of the
// non-ascending canonical blades (e31 = -e13).
struct BladeRef {
  int sign;
  int index;
};

BladeRef referenceBladeProduct(int ia, int ib) {
  static constexpr unsigned mask[8] = {0b000, 0b001, 0b010, 0b100,
                                       0b110, 0b101, 0b011, 0b111};
  static constexpr int orient[8] = {+1, +1, +1, +1, +1, -1, +1, +1};
  static constexpr int maskToIndex[8] = {0, 1, 2, 6, 3, 5, 4, 7};
  const unsigned a = mask[ia], b = mask[ib];
  int swaps = 0;
  for (unsigned t = a >> 1; t; t >>= 1) swaps += std::popcount(t & b);
  const int ir = maskToIndex[a ^ b];
  const int sign = ((swaps & 1) ? -1 : +1) * orient[ia] * orient[ib] * orient[ir];
  return {sign, ir};
}

SuiteResult algebraSuite(const RunConfig& cfg) {
  SuiteResult suite{"algebra", {}};
  Rng rng(cfg.seed);

  // Every basis product against the independent bitset construction.
  int mismatches = 0;
  for (int ia = 0; ia < kBladeCount; ++ia)
    for (int ib = 0; ib < kBladeCount; ++ib) {
      const BladeRef ref = referenceBladeProduct(ia, ib);
      const Multivector p = gp(Multivector::blade(static_cast<Blade>(ia)),
                               Multivector::blade(static_cast<Blade>(ib)));
      for (int i = 0; i < kBladeCount; ++i) {
        const Complex want = i == ref.index ? Complex{double(ref.sign)} : Complex{};
        if (p[i] != want) ++mismatches;
      }
    }
  suite.checks.push_back(ck("basis-products", mismatches, 0.0));

  double worstAssoc = 0.0;
  for (int i = 0; i < 100; ++i) {
    const Multivector a = randomMultivector(rng), b = randomMultivector(rng),
                      c = randomMultivector(rng);
    worstAssoc = std::max(worstAssoc, relDiff(gp(gp(a, b), c), gp(a, gp(b, c))));
  }
  suite.checks.push_back(ck("associativity", worstAssoc, 1e-12));

  double worstConj = 0.0;
  for (int i = 0; i < 100; ++i) {
    const Multivector a = randomMultivector(rng), b = randomMultivector(rng);
    worstConj = std::max(worstConj, relDiff(cliffordConjugate(gp(a, b)),
                                            gp(cliffordConjugate(b), cliffordConjugate(a))));
    worstConj = std::max(worstConj, relDiff(cliffordConjugate(cliffordConjugate(a)), a));
  }
  suite.checks.push_back(ck("conjugation-antiautomorphism", worstConj, 1e-12));

  double worstPara = 0.0;
  for (int i = 0; i < 100; ++i) {
    const Paravector u{randc(rng), {randc(rng), randc(rng), randc(rng)}};
    const Paravector v{randc(rng), {randc(rng), randc(rng), randc(rng)}};
    worstPara = std::max(worstPara,
                         relDiff(paravectorProduct(u, v),
                                 gp(Multivector::paravector(u), Multivector::paravector(v))));
  }
  suite.checks.push_back(ck("paravector-product", worstPara, 1e-12));

  double worstCentral = 0.0;
  const Multivector tri = Multivector::trivector();
  for (int ib = 0; ib < kBladeCount; ++ib) {
    const Multivector b = Multivector::blade(static_cast<Blade>(ib));
    worstCentral = std::max(worstCentral, (gp(tri, b) - gp(b, tri)).maxAbs());
  }
  worstCentral = std::max(worstCentral,
                          (gp(tri, tri) + Multivector::scalar(1.0)).maxAbs());
  suite.checks.push_back(ck("trivector-central", worstCentral, 0.0));

  double worstGrade = 0.0;
  for (int i = 0; i < 20; ++i) {
    const Multivector a = randomMultivector(rng);
    Multivector sum;
    for (int g = 0; g < 4; ++g) sum += gradeProject(a, g);
    worstGrade = std::max(worstGrade, (sum - a).maxAbs());
  }
  suite.checks.push_back(ck("grade-partition", worstGrade, 0.0));

  double worstJ = 0.0;
  for (int i = 0; i < 50; ++i) {
    const Multivector a = randomMultivector(rng), b = randomMultivector(rng);
    const Complex z = randc(rng);
    worstJ = std::max(worstJ, relDiff(gp(a * z, b), gp(a, b) * z));
  }
  suite.checks.push_back(ck("coefficient-scalars-commute", worstJ, 1e-13));

  return suite;
}

// --------------------------------------------------------------------------
// maxwell

SuiteResult maxwellSuite(const RunConfig& cfg) {
  SuiteResult suite{"maxwell", {}};
  Rng rng(cfg.seed + 1);
  const PhysicalConstants k = cfg.constants();
  const GridSpec g = cfg.grid;
  const double dk = g.dk();

  // Graded residual against the classical split on arbitrary (non-solution)
  // field configurations with sources.
  double worstGrade = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    RSField f(g);
    f.E = randomBandVec3(rng, g, 6);
    f.B = randomBandVec3(rng, g, 6) * Complex{1.0 / k.c};
    f.dE_dt = randomBandVec3(rng, g, 6);
    f.dB_dt = randomBandVec3(rng, g, 6) * Complex{1.0 / k.c};
    f.dLambda_dt = ScalarField(g);
    const ScalarField rho = randomBandScalar(rng, g, 6) * Complex{k.eps0};
    const Vec3Field jcl = randomBandVec3(rng, g, 6) * Complex{k.eps0 * k.c};
    const FourCurrent jm = FourCurrent::matterSource(rho, jcl, k);

    const GradedResidual gr = maxwellResidualRS(f, &jm, k);
    const MaxwellSplit sp = maxwellSplit(f, &jm, k);
    const double scale = std::max({sp.gauss.maxAbs(), sp.ampere.maxAbs(),
                                   sp.faraday.maxAbs(), k.c * sp.divB.maxAbs()});
    double dev = maxAbsDiff(gr.scalar, sp.gauss);
    dev = std::max(dev, maxAbsDiff(gr.vector * Complex{k.c}, sp.ampere));
    dev = std::max(dev, maxAbsDiff(gr.bivec, sp.faraday));
    dev = std::max(dev, maxAbsDiff(gr.trivec, sp.divB * Complex{k.c}));
    worstGrade = std::max(worstGrade, dev / scale);
  }
  suite.checks.push_back(ck("graded-matches-classical", worstGrade, 1e-12));

  // Helicity plane waves solve the vacuum equation at machine precision.
  double worstVac = 0.0;
  for (int eps : {+1, -1})
    for (int lam : {+1, -1})
      for (const auto& m : {std::array<int, 3>{1, 2, 3}, {0, 0, 2}, {3, -1, 0}}) {
        ModeExpansion exp(g.L);
        exp.add({m, eps, lam}, Complex{0.8, -0.4});
        RSField f = expandRS(exp, g, 0.37, k);
        if (cfg.corruptFixture) f.E.comp[0][1] += 1e-3 * f.E.maxAbs();
        const GradedResidual r = maxwellResidualRS(f, nullptr, k);
        const Vec3 kv = exp.waveVector({m, eps, lam});
        const double scale = norm(kv) * f.E.maxAbs();
        const double dev = std::max({r.scalar.maxAbs(), r.vector.maxAbs(),
                                     r.bivec.maxAbs() / k.c, r.trivec.maxAbs() / k.c});
        worstVac = std::max(worstVac, dev / scale);
      }
  suite.checks.push_back(ck("vacuum-plane-wave-residual", worstVac, 1e-10));

  // Static smooth charge blob: Poisson-solved potential satisfies Gauss.
  {
    ScalarField rho(g);
    const Vec3 x0{g.L * 0.5, g.L * 0.5, g.L * 0.5};
    const double s2 = std::pow(3.0 * g.dx(), 2);
    // Periodized separable Gaussian (image sum), smooth across the box
    // boundary so its spectrum decays below roundoff before the lattice edge.
    auto blob1d = [&](double x, double c) {
      double v = 0.0;
      for (int im = -1; im <= 1; ++im) {
        const double d = x - c + im * g.L;
        v += std::exp(-d * d / (2.0 * s2));
      }
      return v;
    };
    for (int ix = 0; ix < g.n; ++ix)
      for (int iy = 0; iy < g.n; ++iy)
        for (int iz = 0; iz < g.n; ++iz) {
          const Vec3 p = g.point(ix, iy, iz);
          rho.at(ix, iy, iz) =
              blob1d(p.x, x0.x) * blob1d(p.y, x0.y) * blob1d(p.z, x0.z);
        }
    const Complex mean = rho.integrate() / g.volume();
    for (auto& v : rho.v) v -= mean;

    const ScalarField phi = spectralPoisson(rho * Complex{-1.0 / k.eps0});
    RSField f(g);
    f.E = spectralGrad(phi) * Complex{-1.0};
    f.dE_dt = Vec3Field(g);
    f.dB_dt = Vec3Field(g);
    f.dLambda_dt = ScalarField(g);
    const FourCurrent jm = FourCurrent::matterSource(rho, Vec3Field(g), k);
    const MaxwellSplit sp = maxwellSplit(f, &jm, k);
    const double scale = rho.maxAbs() / k.eps0;
    suite.checks.push_back(ck("static-gauss-law", sp.gauss.maxAbs() / scale, 1e-8));
  }

  // E, B and Lambda + box(chi) are unchanged under 10 random gauge moves.
  {
    const ModeExpansion base = randomExpansion(rng, g.L, 6, true);
    const double t0 = 0.3;
    const FourPotential a = transversePotential(base, g, t0, k);
    const RSField f = computeRS(a, k);
    double worst = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
      GaugeFunction chi;
      const int nm = 2 + static_cast<int>(rng() % 3);
      for (int i = 0; i < nm; ++i) {
        const auto m = randomModeNumber(rng, 4);
        chi.modes.push_back({Vec3{m[0] * dk, m[1] * dk, m[2] * dk},
                             uniform(rng, -5.0, 5.0) * k.c * dk, randc(rng)});
      }
      const FourPotential ap = gaugeTransform(a, chi);
      const RSField fp = computeRS(ap, k);
      const double scale = std::max(f.E.maxAbs(), k.c * f.B.maxAbs());
      worst = std::max(worst, maxAbsDiff(fp.E, f.E) / scale);
      worst = std::max(worst, k.c * maxAbsDiff(fp.B, f.B) / scale);

      // Lambda' - Lambda = -box(chi), synthesized mode by mode.
      ScalarField boxChi(g);
      auto wrap = [&](int m) { return m >= 0 ? m : m + g.n; };
      const double n3 = static_cast<double>(g.size());
      for (const auto& cm : chi.modes) {
        const double k2 = dot(cm.k, cm.k);
        const Complex coef =
            (k2 - cm.omega * cm.omega / (k.c * k.c)) * cm.amp *
            std::exp(-kJ * (cm.omega * t0)) * n3;
        const int mx = static_cast<int>(std::lround(cm.k.x / dk));
        const int my = static_cast<int>(std::lround(cm.k.y / dk));
        const int mz = static_cast<int>(std::lround(cm.k.z / dk));
        boxChi.v[g.index(wrap(mx), wrap(my), wrap(mz))] += coef;
      }
      fft3(g, boxChi.v, false);
      const double lamScale = std::max(boxChi.maxAbs(), fp.lambda.maxAbs());
      if (lamScale > 0.0)
        worst = std::max(worst, (fp.lambda - f.lambda + boxChi).maxAbs() / lamScale);
    }
    suite.checks.push_back(ck("gauge-invariance", worst, 1e-10));
  }

  // Wave-equation residual: vacuum transverse modes and an off-shell mode
  // driven by the matching source.
  {
    const ModeExpansion exp = randomExpansion(rng, g.L, 5, true);
    const FourPotential a = transversePotential(exp, g, 0.21, k);
    const ParavectorField r = waveResidual(a, nullptr, k);
    const double scale = dk * computeRS(a, k).E.maxAbs();
    double worst = r.maxAbs() / scale;

    const auto m = randomModeNumber(rng, 4);
    const Vec3 kv{m[0] * dk, m[1] * dk, m[2] * dk};
    const double w = 1.7 * k.c * norm(kv);
    FourPotential::ModeBacked mb;
    mb.modes.push_back({kv, w, Complex{}, helicityVector(kv, +1) * Complex{0.6, 0.3}});
    const FourPotential driven(g, 0.21, std::move(mb));
    const double boxCoef = dot(kv, kv) - w * w / (k.c * k.c);
    FourCurrent jm(g, 0.21);
    jm.J = driven.A(0) * Complex{k.c / k.z0() * boxCoef};
    const ParavectorField rs = waveResidual(driven, &jm, k);
    const double sScale = k.c * std::abs(boxCoef) * driven.A(0).maxAbs();
    worst = std::max(worst, rs.maxAbs() / sScale);
    suite.checks.push_back(ck("wave-equation-residual", worst, 1e-10));
  }

  // Antisymmetric rank-2 tensor agrees with the graded field components.
  {
    FourPotential::ModeBacked mb;
    for (int i = 0; i < 5; ++i) {
      const auto m = randomModeNumber(rng, 4);
      const Vec3 kv{m[0] * dk, m[1] * dk, m[2] * dk};
      mb.modes.push_back({kv, uniform(rng, -4.0, 4.0) * k.c * dk, randc(rng),
                          {randc(rng), randc(rng), randc(rng)}});
    }
    const FourPotential a(g, 0.11, std::move(mb));
    const Rank2Field ft = faraday(a, k);
    const RSField f = computeRS(a, k);
    const double scale = std::max(f.E.maxAbs() / k.c, f.B.maxAbs());
    double worst = 0.0;
    for (int i = 0; i < 3; ++i) {
      ScalarField ei(g);
      for (std::size_t p = 0; p < ei.v.size(); ++p) ei.v[p] = f.E.comp[i][p] / k.c;
      worst = std::max(worst, maxAbsDiff(ft.at(i + 1, 0), ei) / scale);
    }
    // F^{ij} = -eps_{ijk} B_k.
    const int pairs[3][3] = {{1, 2, 2}, {2, 3, 0}, {3, 1, 1}};  // (mu,nu,Bcomp)
    for (const auto& p : pairs) {
      ScalarField bk(g);
      for (std::size_t q = 0; q < bk.v.size(); ++q) bk.v[q] = -f.B.comp[p[2]][q];
      worst = std::max(worst, maxAbsDiff(ft.at(p[0], p[1]), bk) / scale);
    }
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu <= mu; ++nu)
        worst = std::max(worst, (ft.at(mu, nu) + ft.at(nu, mu)).maxAbs() / scale);
    suite.checks.push_back(ck("faraday-tensor", worst, 1e-12));
  }

  // Covariant momenta satisfy the field equations for on-shell modes.
  {
    const ModeExpansion exp = randomExpansion(rng, g.L, 5, true);
    const FourPotential a = transversePotential(exp, g, 0.42, k);
    const Rank2Field piDot = conjugateMomentum(MomentumKind::Cov, a.timeDerivative(), k);
    const Rank2Field pi = conjugateMomentum(MomentumKind::Cov, a, k);
    double worst = 0.0;
    const double scale = k.eps0 * dk * computeRS(a, k).E.maxAbs();
    for (int nu = 0; nu < 4; ++nu) {
      Vec3Field spatial(g);
      for (int i = 0; i < 3; ++i) spatial.comp[i] = pi.at(i + 1, nu).v;
      // Pi^{i nu} = -eps0 d^i A^nu = +eps0 d_i A^nu, so the spatial part of
      // d_mu Pi^{mu nu} is a plain divergence of the stored rows.
      const ScalarField div = spectralDiv(spatial);
      ScalarField total = piDot.at(0, nu) * Complex{1.0 / k.c} + div;
      worst = std::max(worst, total.maxAbs() / scale);
    }
    suite.checks.push_back(ck("momentum-field-equation", worst, 1e-10));
  }

  // Box integrals of the gauge-fixed and covariant densities agree once the
  // 2*omega oscillation is averaged over a period (single-|k| shell).
  {
    const std::array<std::array<int, 3>, 8> shell = {{{3, 0, 0},
                                                      {0, 3, 0},
                                                      {0, 0, 3},
                                                      {2, 2, 1},
                                                      {1, 2, 2},
                                                      {2, 1, 2},
                                                      {-2, 2, 1},
                                                      {0, -3, 0}}};
    ModeExpansion exp(g.L);
    for (const auto& m : shell) exp.add({m, randSign(rng), randSign(rng)}, randc(rng));
    const double w = 3.0 * k.c * dk;
    const int nSamples = 8;
    Complex gap{};
    double scale = 0.0;
    for (int s = 0; s < nSamples; ++s) {
      const double t = 0.05 + s * (3.14159265358979323846 / w) / nSamples;
      const FourPotential a = transversePotential(exp, g, t, k);
      gap += lagrangianDensity(LagrangianKind::Fermi, a, nullptr, k).integrate() -
             lagrangianDensity(LagrangianKind::Cov, a, nullptr, k).integrate();
      // For on-shell transverse modes each integrated density vanishes
      // identically, so normalize by the energy integral instead.
      scale += k.eps0 * energyDensity(computeRS(a, k), k).integrate().real();
    }
    suite.checks.push_back(ck("lagrangian-gap-averages-out",
                              std::abs(gap) / std::max(scale, 1e-300), 1e-10));
  }

  return suite;
}

// --------------------------------------------------------------------------
// noether

SuiteResult noetherSuite(const RunConfig& cfg) {
  SuiteResult suite{"noether", {}};
  Rng rng(cfg.seed + 2);
  const PhysicalConstants k = cfg.constants();
  const GridSpec g = cfg.grid;

  // Single modes of either frequency sign carry a positive, uniform number
  // density.
  {
    double minJ0 = 1e300, worstUniform = 0.0;
    for (int eps : {+1, -1}) {
      ModeExpansion exp(g.L);
      exp.add({{1, -2, 2}, eps, +1}, Complex{0.7, 0.2});
      const auto sheets = renderSheets(exp, g, 0.13, k, ModeScale::OnePhoton);
      const FourCurrent cur = noetherCurrent(CurrentKind::Standard, sheets, k);
      double lo = 1e300, hi = -1e300;
      for (const auto& v : cur.J0.v) {
        lo = std::min(lo, v.real());
        hi = std::max(hi, v.real());
      }
      const double mean = 0.5 * (lo + hi);
      minJ0 = std::min(minJ0, lo / std::abs(mean));
      worstUniform = std::max(worstUniform, (hi - lo) / std::abs(mean));
    }
    suite.checks.push_back(
        {"number-density-positive", minJ0, 0.0, minJ0 > 0.0});
    suite.checks.push_back(ck("number-density-uniform", worstUniform, 1e-10));
  }

  // The two density constructions agree pointwise, and the current is real.
  {
    const ModeExpansion exp = randomExpansion(rng, g.L, 6, true);
    const auto sheets = renderSheets(exp, g, 0.29, k, ModeScale::OnePhoton);
    const FourCurrent std_ = noetherCurrent(CurrentKind::Standard, sheets, k);
    const FourCurrent cov = noetherCurrent(CurrentKind::Covariant, sheets, k);
    const double scale = std::max(std_.J0.maxAbs(), std_.J.maxAbs() / k.c);
    suite.checks.push_back(
        ck("covariant-matches-standard-density",
           maxAbsDiff(std_.J0, cov.J0) / scale, 1e-10));
    double worstImag = std_.J.maxImag();
    for (const auto& v : std_.J0.v) worstImag = std::max(worstImag, std::abs(v.imag()));
    for (const auto& v : cov.J0.v) worstImag = std::max(worstImag, std::abs(v.imag()));
    worstImag = std::max(worstImag, cov.J.maxImag());
    suite.checks.push_back(ck("current-real", worstImag / scale, 1e-10));
  }

  // Continuity residual of the free current converges at second order in the
  // finite-difference step.
  {
    const ModeExpansion exp = randomExpansion(rng, g.L, 4, true);
    double wMax = 0.0;
    for (const auto& [key, a] : exp.amplitudes())
      wMax = std::max(wMax, exp.omega(key, k));
    const double t0 = 0.4 / wMax;
    auto residualAt = [&](double dt) {
      std::vector<FourCurrent> series;
      for (int s = -1; s <= 1; ++s) {
        const auto sheets = renderSheets(exp, g, t0 + s * dt, k, ModeScale::OnePhoton);
        series.push_back(noetherCurrent(CurrentKind::Standard, sheets, k));
      }
      return continuityResidual(series, dt, nullptr, nullptr, k).maxAbs();
    };
    const double dt = 0.05 / wMax;
    const double r1 = residualAt(dt), r2 = residualAt(dt / 2.0);
    const double order = std::log2(r1 / r2);
    suite.checks.push_back(ck("continuity-order", std::abs(order - 2.0), 0.2));
  }

  // The box integral of the density (the photon number) is conserved.
  {
    const ModeExpansion exp = randomExpansion(rng, g.L, 5, true);
    double lo = 1e300, hi = -1e300;
    for (int s = 0; s < 5; ++s) {
      const double t = 0.1 + 0.37 * s;
      const auto sheets = renderSheets(exp, g, t, k, ModeScale::OnePhoton);
      const FourCurrent cur = noetherCurrent(CurrentKind::Standard, sheets, k);
      const double n = (cur.J0.integrate() / k.c).real();
      lo = std::min(lo, n);
      hi = std::max(hi, n);
    }
    suite.checks.push_back(ck("number-conserved", (hi - lo) / std::abs(hi), 1e-10));
  }

  return suite;
}

// --------------------------------------------------------------------------
// quantum

SuiteResult quantumSuite(const RunConfig& cfg) {
  SuiteResult suite{"quantum", {}};
  Rng rng(cfg.seed + 3);
  const PhysicalConstants k = cfg.constants();
  const GridSpec g = cfg.grid;

  // Kronecker orthonormality of the discrete basis.
  {
    std::vector<ModeKey> keys;
    while (keys.size() < 10) {
      const ModeKey key{randomModeNumber(rng, 4), randSign(rng), randSign(rng)};
      if (std::find(keys.begin(), keys.end(), key) == keys.end()) keys.push_back(key);
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < keys.size(); ++i)
      for (std::size_t j = 0; j < keys.size(); ++j) {
        KSpaceState a(g.L), b(g.L);
        a.add(keys[i], Complex{1.0});
        b.add(keys[j], Complex{1.0});
        const Complex want = i == j ? Complex{1.0} : Complex{};
        worst = std::max(worst, std::abs(scalarProductK(a, b) - want));
      }
    suite.checks.push_back(ck("mode-orthonormality", worst, 1e-12));
  }

  // The x-space product of the rendered states reproduces the k-space sum.
  {
    double worst = 0.0;
    for (int trial = 0; trial < 3; ++trial) {
      const KSpaceState s1 = randomExpansion(rng, g.L, 8, true);
      const KSpaceState s2 = randomExpansion(rng, g.L, 8, true);
      const Complex xk = scalarProductX(s1, s2, g, 0.23, k);
      const Complex kk = scalarProductK(s1, s2);
      const double scale = std::sqrt(std::abs(scalarProductK(s1, s1)) *
                                     std::abs(scalarProductK(s2, s2)));
      worst = std::max(worst, std::abs(xk - kk) / scale);
    }
    suite.checks.push_back(ck("parseval", worst, 1e-10));
  }

  // The norm stays positive on mixed-frequency-sign states.
  {
    double minNorm = 1e300, worstX = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
      const KSpaceState s = randomExpansion(rng, g.L, 6, true);
      const Complex n = scalarProductK(s, s);
      minNorm = std::min(minNorm, n.real());
      if (trial < 5) {
        const Complex nx = scalarProductX(s, s, g, 0.31, k);
        worstX = std::max(worstX,
                          std::max(std::abs(nx - n), std::abs(nx.imag())) / n.real());
      }
    }
    suite.checks.push_back({"positive-norm", minNorm, 0.0, minNorm > 0.0});
    suite.checks.push_back(ck("positive-norm-x-route", worstX, 1e-10));
  }

  // Diagonal operators reproduce their eigenvalues exactly.
  {
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
      const ModeKey key{randomModeNumber(rng, 4), randSign(rng), randSign(rng)};
      KSpaceState s(g.L);
      const Complex a = randc(rng);
      s.add(key, a);
      const double w = s.omega(key, k);
      auto dev = [&](const KSpaceState& got, Complex want) {
        return std::abs(got.amplitude(key) - want) / std::abs(a);
      };
      worst = std::max(worst, dev(applyHelicity(s), a * double(key.lam)));
      worst = std::max(worst, dev(applyFrequencySign(s), a * double(key.eps)));
      worst = std::max(worst, dev(applyHamiltonian(s, k), a * (key.eps * k.hbar * w)));
      const Vec3 kv = s.waveVector(key);
      worst = std::max(worst, dev(applyMomentum(s, 0, k), a * (k.hbar * kv.x)));
      worst = std::max(worst, dev(applyMomentumMagnitude(s, k), a * (k.hbar * norm(kv))));
    }
    suite.checks.push_back(ck("eigenvalue-exactness", worst, 1e-12));
  }

  // Curl route of the energy operator matches the diagonal route.
  {
    const ModeExpansion exp = randomExpansion(rng, g.L, 5, true);
    const RSField f = expandRS(exp, g, 0.17, k);
    const RSField hf = hamiltonianCurl(f, k);
    const RSField want = expandRS(applyHamiltonian(exp, k), g, 0.17, k);
    const double scale = std::max(want.E.maxAbs(), k.c * want.B.maxAbs());
    const double dev = std::max(maxAbsDiff(hf.E, want.E),
                                k.c * maxAbsDiff(hf.B, want.B));
    suite.checks.push_back(ck("energy-curl-route", dev / scale, 1e-10));
  }

  // Generator algebra on the dense k-lattice.
  {
    const auto reports = commutatorCheck(k, cfg.seed + 4);
    double worstExact = 0.0, worstCancel = 0.0, worstStencil = 0.0, worstOrder = 0.0;
    bool allPass = true;
    for (const auto& r : reports) {
      if (r.stencil) {
        worstStencil = std::max(worstStencil, r.residual);
        worstOrder = std::max(worstOrder, std::abs(r.order - 2.0));
      } else if (r.cancellation) {
        worstCancel = std::max(worstCancel, r.residual);
      } else {
        worstExact = std::max(worstExact, r.residual);
      }
      allPass = allPass && r.pass;
    }
    suite.checks.push_back(ck("exact-commutators", worstExact, 1e-12));
    suite.checks.push_back(ck("cancellation-floor-commutators", worstCancel, 1e-8));
    suite.checks.push_back(ck("stencil-commutators", worstStencil, 1e-6));
    suite.checks.push_back(ck("stencil-commutator-order", worstOrder, 0.3));
    suite.checks.push_back(
        {"commutator-harness-pass", allPass ? 0.0 : 1.0, 0.0, allPass});
  }

  return suite;
}

}  // namespace

PhysicalConstants RunConfig::constants() const {
  if (units == "natural") return PhysicalConstants::natural();
  if (units == "si") return PhysicalConstants::si();
  throw std::invalid_argument("unknown unit system: " + units);
}

RunConfig RunConfig::fromJson(const nlohmann::ordered_json& j) {
  RunConfig cfg;
  try {
    if (j.contains("units")) cfg.units = j.at("units").get<std::string>();
    if (j.contains("grid")) {
      const auto& gj = j.at("grid");
      int n = cfg.grid.n;
      double L = cfg.grid.L;
      if (gj.contains("n")) n = gj.at("n").get<int>();
      if (gj.contains("L")) L = gj.at("L").get<double>();
      cfg.grid = GridSpec(n, L);
    }
    if (j.contains("seed")) cfg.seed = j.at("seed").get<unsigned>();
    if (j.contains("corrupt_fixture"))
      cfg.corruptFixture = j.at("corrupt_fixture").get<bool>();
    if (j.contains("out")) cfg.outDir = j.at("out").get<std::string>();
  } catch (const nlohmann::ordered_json::exception& e) {
    throw std::invalid_argument(std::string("bad config: ") + e.what());
  }
  if (cfg.units != "natural" && cfg.units != "si")
    throw std::invalid_argument("bad config: units must be \"natural\" or \"si\"");
  return cfg;
}

bool SuiteResult::pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

nlohmann::ordered_json SuiteResult::toJson() const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["pass"] = pass();
  auto& arr = j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json cj;
    cj["name"] = c.name;
    cj["measured"] = c.measured;
    cj["tolerance"] = c.tolerance;
    cj["pass"] = c.pass;
    arr.push_back(std::move(cj));
  }
  return j;
}

std::vector<SuiteResult> runSuites(const std::string& name, const RunConfig& cfg) {
  if (name == "algebra") return {algebraSuite(cfg)};
  if (name == "maxwell") return {maxwellSuite(cfg)};
  if (name == "noether") return {noetherSuite(cfg)};
  if (name == "quantum") return {quantumSuite(cfg)};
  if (name == "all")
    return {algebraSuite(cfg), maxwellSuite(cfg), noetherSuite(cfg),
            quantumSuite(cfg)};
  throw std::invalid_argument("unknown suite: " + name +
                              " (expected algebra, maxwell, noether, quantum, or all)");
}

}  // namespace rsph
