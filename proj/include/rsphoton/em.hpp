#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "rsphoton/constants.hpp"
#include "rsphoton/grid.hpp"

namespace rsph {

// One analytic potential mode: phi and A amplitudes riding the carrier
// exp(-j*omega*t + j*k.x). omega is a signed frequency (epsilon folded in)
// and need not satisfy a dispersion relation. k must lie on the grid's
// reciprocal lattice for grid rendering.
struct PotentialMode {
  Vec3 k;
  double omega = 0.0;
  Complex phi{};  // scalar-potential amplitude
  CVec3 A{};      // vector-potential amplitude
};

// Four-potential A = phi/c + A on a periodic grid. ModeBacked potentials
// carry exact time derivatives of every order; GridSampled potentials hold
// two time slices (t and t+dt) and differentiate by forward difference.
class FourPotential {
 public:
  struct ModeBacked {
    std::vector<PotentialMode> modes;
  };
  struct GridSampled {
    ScalarField phi0, phi1;  // at t and t+dt
    Vec3Field A0, A1;
    double dt = 0.0;
  };

  FourPotential(GridSpec grid, double t, ModeBacked backing)
      : grid_(grid), t_(t), backing_(std::move(backing)) {}
  FourPotential(GridSpec grid, double t, GridSampled backing)
      : grid_(grid), t_(t), backing_(std::move(backing)) {}

  const GridSpec& grid() const { return grid_; }
  double t() const { return t_; }
  bool isModeBacked() const { return std::holds_alternative<ModeBacked>(backing_); }
  const ModeBacked& modeBacking() const { return std::get<ModeBacked>(backing_); }

  // Render phi (dtOrder-th time derivative) on the grid at time t().
  // GridSampled backing supports dtOrder <= 1 and requires dt > 0 for
  // dtOrder == 1; higher orders need mode backing.
  ScalarField phi(int dtOrder = 0) const;
  Vec3Field A(int dtOrder = 0) const;

  // d/dt as a new potential (mode-backed only).
  FourPotential timeDerivative() const;
  // Shift the evaluation time (mode-backed only).
  FourPotential atTime(double t) const;

  FourPotential operator+(const FourPotential& o) const;

 private:
  GridSpec grid_;
  double t_;
  std::variant<ModeBacked, GridSampled> backing_;
};

// Mode-backed scalar test function chi(t,x) for gauge transformations,
// same carrier convention as PotentialMode.
struct GaugeFunction {
  struct Mode {
    Vec3 k;
    double omega = 0.0;
    Complex amp{};
  };
  std::vector<Mode> modes;
};

// phi' = phi - dt(chi), A' = A + grad(chi).
FourPotential gaugeTransform(const FourPotential& a, const GaugeFunction& chi);

// Graded field F = c*Lambda + E + i c B with optional analytic time
// derivatives (filled when built from a mode-backed potential or a mode
// expansion).
struct RSField {
  GridSpec grid;
  double t = 0.0;
  ScalarField lambda;
  Vec3Field E;
  Vec3Field B;

  std::optional<ScalarField> dLambda_dt;
  std::optional<Vec3Field> dE_dt;
  std::optional<Vec3Field> dB_dt;

  RSField() = default;
  explicit RSField(const GridSpec& g, double time = 0.0)
      : grid(g), t(time), lambda(g, time), E(g, time), B(g, time) {}

  bool hasTimeDerivatives() const { return dE_dt && dB_dt && dLambda_dt; }

  // Assembled multivector c*Lambda + E + i c B at one grid point.
  Multivector assembled(std::size_t i, const PhysicalConstants& k) const {
    Multivector m = Multivector::scalar(k.c * lambda[i]);
    m += Multivector::vector(E.at(i));
    m += Multivector::bivector(k.c * B.at(i));
    return m;
  }
};

// Lambda = dt(phi)/c^2 + div A;  E = -grad phi - dt(A);  B = curl A.
RSField computeRS(const FourPotential& a, const PhysicalConstants& k);

// Matter four-current as the paravector source of the graded field equation
// dbar(F) = Z0 * conj(J). Stored components: J0 = c*rho and the spatial part
// J. The classical (Maxwell-split) charge density and current are
// rho = J0/c and Jcl = -J.
struct FourCurrent {
  GridSpec grid;
  double t = 0.0;
  ScalarField J0;
  Vec3Field J;

  FourCurrent() = default;
  explicit FourCurrent(const GridSpec& g, double time = 0.0)
      : grid(g), t(time), J0(g, time), J(g, time) {}

  // Build from the classical Maxwell-split source pair (rho, Jcl).
  static FourCurrent matterSource(const ScalarField& rho, const Vec3Field& Jcl,
                                  const PhysicalConstants& k);
  ScalarField chargeDensity(const PhysicalConstants& k) const;
  Vec3Field classicalCurrent() const;
};

// The four grade components of dbar(E + icB) - Z0*bar(Jm), where bar(Jm) =
// J0 - J. bivec and trivec hold the i-coefficients (bivector = i*bivec,
// trivector = i*trivec). Correspondence with the classical residuals:
// scalar = gauss, vector = ampere/c, bivec = faraday, trivec = c*divB.
struct GradedResidual {
  ScalarField scalar;   // div E - Z0 J0
  Vec3Field vector;     // dct E - c curl B + Z0 J
  Vec3Field bivec;      // dt B + curl E
  ScalarField trivec;   // c div B
};

GradedResidual maxwellResidualRS(const RSField& f, const FourCurrent* jm,
                                 const PhysicalConstants& k);

// Classical Maxwell residuals: div B, dt B + curl E, div E - rho/eps0,
// dt E - c^2 curl B - Jcl/eps0.
struct MaxwellSplit {
  ScalarField divB;
  Vec3Field faraday;
  ScalarField gauss;
  Vec3Field ampere;
};

MaxwellSplit maxwellSplit(const RSField& f, const FourCurrent* jm,
                          const PhysicalConstants& k);

// Residual of the potential wave equation
// c*box(conj(A)) - c*dbar(Lambda) - Z0*conj(Jm), box = dct^2 - laplacian.
// Requires mode backing (second time derivative).
ParavectorField waveResidual(const FourPotential& a, const FourCurrent* jm,
                             const PhysicalConstants& k);

// Rank-2 field on the grid: 4x4 complex tensor per point, stored as 16
// scalar fields T[mu][nu].
struct Rank2Field {
  GridSpec grid;
  double t = 0.0;
  std::array<ScalarField, 16> comp;

  Rank2Field() = default;
  explicit Rank2Field(const GridSpec& g, double time = 0.0) : grid(g), t(time) {
    for (auto& c : comp) c = ScalarField(g, time);
  }
  ScalarField& at(int mu, int nu) { return comp[mu * 4 + nu]; }
  const ScalarField& at(int mu, int nu) const { return comp[mu * 4 + nu]; }
};

// Faraday tensor F^{mu nu} = d^mu A^nu - d^nu A^mu with d^mu = (dct, -grad)
// and A^nu = (phi/c, A).
Rank2Field faraday(const FourPotential& a, const PhysicalConstants& k);

enum class LagrangianKind { Std, Fermi, Cov, Int };

// Pointwise Lagrangian densities, complexified (A and A* independent):
//   std:   -eps0 (E*.E - c^2 B*.B)
//   fermi: std - eps0 c^2 Lambda Lambda*
//   cov:   -eps0 c^2 (d^mu A_nu*)(d_mu A^nu)
//   int:   -Jm^nu* A_nu - Jm^nu A_nu*
ScalarField lagrangianDensity(LagrangianKind kind, const FourPotential& a,
                              const FourCurrent* jm, const PhysicalConstants& k);

enum class MomentumKind { Std, Cov };

// Conjugate momenta Pi^{mu nu}: std = eps0 F^{mu nu}, cov = -eps0 d^mu A^nu.
Rank2Field conjugateMomentum(MomentumKind kind, const FourPotential& a,
                             const PhysicalConstants& k);

}  // namespace rsph
