#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "rsphoton/currents.hpp"
#include "rsphoton/modes.hpp"

namespace rsph {

// Spin-1 matrices (S_i)_{jk} = -j*eps_{ijk}; Hermitian, [S_i,S_j] = j*eps_{ijk}S_k.
// Acting on a polarization vector: S_i v = j * (e_i x v).
struct SpinMatrices {
  static CVec3 apply(int i, const CVec3& v);
  // (a.S) v = j a x v, so a x b = -j (a.S) b.
  static CVec3 applyDot(const Vec3& a, const CVec3& v);
};

// Plain-sum k-space scalar product sum conj(a1)*a2 over (m,eps,lam) keys,
// i.e. Kronecker-orthonormal discrete modes. Lattice (L) mismatch throws.
Complex scalarProductK(const KSpaceState& a, const KSpaceState& b);

// Biorthogonal x-space scalar product of transverse sheet-resolved states:
// (j*2*eps0/hbar) sum_{eps,lam} eps * Integral conj(E1).A2 dx, diagonal in
// (eps, lam). Sheets pair by their (eps, lam) labels.
Complex scalarProductX(const std::vector<SheetContent>& s1,
                       const std::vector<SheetContent>& s2,
                       const PhysicalConstants& k);

// Convenience route: render both k-space states as one-photon sheet content
// on the grid and take the x-space product (Parseval partner of
// scalarProductK).
Complex scalarProductX(const KSpaceState& s1, const KSpaceState& s2,
                       const GridSpec& g, double t, const PhysicalConstants& k);

// --- diagonal operators on discrete mode states ---

// Multiply each amplitude by f(key): the shared implementation of the
// diagonal operator family.
KSpaceState applyDiagonal(const KSpaceState& s,
                          const std::function<Complex(const ModeKey&, const Vec3&)>& f);

KSpaceState applyMomentum(const KSpaceState& s, int axis, const PhysicalConstants& k);  // hbar k_i
KSpaceState applyMomentumMagnitude(const KSpaceState& s, const PhysicalConstants& k);   // hbar |k|
KSpaceState applyHelicity(const KSpaceState& s);        // lam (mode states are helicity eigenstates)
KSpaceState applyFrequencySign(const KSpaceState& s);   // eps
KSpaceState applyHamiltonian(const KSpaceState& s, const PhysicalConstants& k);  // eps c hbar |k|

// Hamiltonian on a rendered field, via the curl route (the evolution
// equation i*dct(F) = curl(F) times j*hbar*c): E' = j*hbar*c^2*curl(B),
// B' = -j*hbar*curl(E). On a helicity mode this equals eps*hbar*omega*F.
RSField hamiltonianCurl(const RSField& f, const PhysicalConstants& k);

// --- vector-valued states on a dense k-lattice (stencil operators) ---

// Uniform cubic k-lattice: n points per axis, spacing h, lowest corner k0;
// point (ix,iy,iz) sits at k0 + h*(ix,iy,iz).
struct KGrid {
  int n = 65;
  double h = 1.0;
  Vec3 k0{};

  std::size_t size() const { return static_cast<std::size_t>(n) * n * n; }
  std::size_t index(int ix, int iy, int iz) const {
    return (static_cast<std::size_t>(ix) * n + iy) * n + iz;
  }
  Vec3 point(int ix, int iy, int iz) const {
    return {k0.x + h * ix, k0.y + h * iy, k0.z + h * iz};
  }
  bool operator==(const KGrid& o) const {
    return n == o.n && h == o.h && k0.x == o.k0.x && k0.y == o.k0.y && k0.z == o.k0.z;
  }
};

// Polarization-vector wave function psi(k) on a KGrid with a frequency-sign
// label; assumed to vanish at the lattice boundary (stencils read zero
// outside).
struct VectorKState {
  KGrid grid;
  int eps = +1;
  std::array<std::vector<Complex>, 3> comp;

  VectorKState() = default;
  explicit VectorKState(const KGrid& g, int e = +1) : grid(g), eps(e) {
    for (auto& c : comp) c.assign(g.size(), Complex{});
  }
  CVec3 at(std::size_t i) const { return {comp[0][i], comp[1][i], comp[2][i]}; }
  void set(std::size_t i, const CVec3& v) {
    comp[0][i] = v.x; comp[1][i] = v.y; comp[2][i] = v.z;
  }
  double norm2() const;  // sum |psi|^2 (no h^3 weight; used for relative residuals)
};

using KOperator = std::function<VectorKState(const VectorKState&)>;

// Central-difference d/dk_axis, zero outside the lattice; O(h^2). With
// richardson, combines steps h and 2h for O(h^4).
VectorKState kDerivative(const VectorKState& s, int axis, bool richardson = false);

VectorKState applyP(const VectorKState& s, int axis, const PhysicalConstants& k);     // hbar k_i
VectorKState applyAbsP(const VectorKState& s, const PhysicalConstants& k);            // hbar |k|
VectorKState applyH(const VectorKState& s, const PhysicalConstants& k);               // eps c hbar |k|
VectorKState applyS(const VectorKState& s, int axis);                                 // spin matrix
VectorKState applyHelicity(const VectorKState& s);                                    // (S.khat); k=0 point error
// J_i = -j hbar (k x grad_k)_i + hbar S_i
VectorKState applyJ(const VectorKState& s, int axis, const PhysicalConstants& k,
                    bool richardson = false);
// K_i = j hbar |k| d/dk_i + hbar (khat x S)_i
VectorKState applyK(const VectorKState& s, int axis, const PhysicalConstants& k,
                    bool richardson = false);

// --- commutator harness ---

// Analytic polarization-vector wave function on continuous k-space,
// evaluable at arbitrary points; stencil operators compose by nesting
// closures, so no lattice ties the derivative step to a grid spacing.
using KWaveFunction = std::function<CVec3(const Vec3&)>;

// Operator acting on analytic states; the step h feeds any k-derivative
// stencils inside (purely algebraic operators ignore it).
using KWaveOperator = std::function<KWaveFunction(const KWaveFunction&, double)>;

struct CommutatorCase {
  std::string pair;            // e.g. "[J3,P1]"
  bool stencil = false;        // residual dominated by O(h^2) stencil truncation
  bool cancellation = false;   // exact identity whose evaluation carries a
                               // roundoff floor ~ machine-eps/h
  bool domainLimited = false;  // identity needs H across sheets; checked on eps=+1 only
  KWaveOperator opA, opB, expected;
};

// The verified generator-algebra identities.
std::vector<CommutatorCase> commutatorCases(const PhysicalConstants& k);

struct CommutatorReport {
  std::string pair;
  int state = 0;
  bool stencil = false;
  bool cancellation = false;
  bool domainLimited = false;
  double residual = 0.0;      // ||([A,B]-expected)psi|| / ||psi|| at step h
  double residualFine = 0.0;  // same at step h/2
  double order = 0.0;         // log2(residual/residualFine); gated only for stencil cases
  bool pass = false;
};

// Evaluates ([A,B]-expected)psi on analytic Gaussian packet states at
// derivative steps h and h/2, with norms taken by quadrature on a
// packet-covering point set. Stencil cases pass when the residual is below
// tol with measured order 2 +- 0.3; exact cases must sit at roundoff
// (1e-12); cancellation-floor cases get a 1e-8 allowance and no order gate.
std::vector<CommutatorReport> commutatorCheck(const PhysicalConstants& k,
                                              unsigned seed, int nStates = 3,
                                              double tol = 1e-6,
                                              double h = 1e-4);

}  // namespace rsph
