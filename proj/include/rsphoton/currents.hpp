#pragma once

#include <vector>

#include "rsphoton/modes.hpp"

namespace rsph {

// Frequency-sign-resolved field content of one (eps, lam) sheet: the
// potential pair (phi, A) with analytic first time derivatives, plus the
// derived E = -grad(phi) - dt(A) and B = curl(A). Current formulas need the
// eps label explicitly, so a raw grid field is not enough.
struct SheetContent {
  int eps = +1;
  int lam = +1;
  ScalarField phi, dphi_dt;
  Vec3Field A, dA_dt;
  Vec3Field E, B;
};

// Render the (eps, lam) sheets of a mode expansion as transverse potentials
// (phi = 0) with A = -j*eps*E/omega per mode.
std::vector<SheetContent> renderSheets(const ModeExpansion& exp, const GridSpec& g,
                                       double t, const PhysicalConstants& k,
                                       ModeScale scale = ModeScale::Unit);

enum class CurrentKind {
  // J^mu = -(j*eps0*c/hbar) sum_eps eps * (A_nu^* <-> d^mu A^nu); real by
  // construction (the two-sided derivative is anti-Hermitian).
  Covariant,
  // J^0 = (j*eps0*c/hbar) sum eps E^*.A + c.c.;
  // J   = (j*eps0*c/hbar) sum eps (-B^* x A + E^* phi) + c.c.
  Standard,
};

FourCurrent noetherCurrent(CurrentKind kind, const std::vector<SheetContent>& sheets,
                           const PhysicalConstants& k);

// Residual dct(J0) + div(J) - source at the middle sample of a time series
// (central difference in t, spectral divergence in x). The source term,
// present only with a matter current, is -(j*mu0/(hbar*c)) A_nu^* Jm^nu + c.c.
// built from the sheet potentials.
ScalarField continuityResidual(const std::vector<FourCurrent>& series, double dt,
                               const FourCurrent* jm,
                               const std::vector<SheetContent>* sheets,
                               const PhysicalConstants& k);

}  // namespace rsph
