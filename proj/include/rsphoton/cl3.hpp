#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <stdexcept>

// Complexified Clifford algebra of physical space, Cl(3,0) over the complex
// numbers. The trivector i = e1*e2*e3 is kept distinct from the coefficient
// imaginary j = sqrt(-1): i lives in the blade structure, j in the complex
// coefficients, and the two commute.
namespace rsph {

using Complex = std::complex<double>;

inline constexpr Complex kJ{0.0, 1.0};  // the unit imaginary j

// Canonical blade order. E23 = e2e3, E31 = e3e1, E12 = e1e2 (cyclic naming,
// so that i*ek is the dual bivector with positive sign), E123 = i.
enum class Blade : std::uint8_t { S = 0, E1, E2, E3, E23, E31, E12, E123 };

inline constexpr int kBladeCount = 8;
inline constexpr std::array<int, kBladeCount> kBladeGrade = {0, 1, 1, 1, 2, 2, 2, 3};

// Complex 3-vector on {e1,e2,e3}. Dot and cross are bilinear, with no
// implicit conjugation; conjugate explicitly at call sites where needed.
struct CVec3 {
  Complex x{}, y{}, z{};

  CVec3() = default;
  CVec3(Complex x_, Complex y_, Complex z_) : x(x_), y(y_), z(z_) {}

  CVec3 operator+(const CVec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  CVec3 operator-(const CVec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  CVec3 operator-() const { return {-x, -y, -z}; }
  CVec3 operator*(Complex s) const { return {x * s, y * s, z * s}; }
  CVec3& operator+=(const CVec3& o) {
    x += o.x; y += o.y; z += o.z;
    return *this;
  }
  CVec3& operator-=(const CVec3& o) {
    x -= o.x; y -= o.y; z -= o.z;
    return *this;
  }

  CVec3 conj() const { return {std::conj(x), std::conj(y), std::conj(z)}; }
};

inline CVec3 operator*(Complex s, const CVec3& v) { return v * s; }

inline Complex dot(const CVec3& a, const CVec3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

inline CVec3 cross(const CVec3& a, const CVec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

// Real 3-vector helper (grid geometry, wave vectors).
struct Vec3 {
  double x{}, y{}, z{};

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator-() const { return {-x, -y, -z}; }
  Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }

  CVec3 complex() const { return {Complex(x), Complex(y), Complex(z)}; }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }
inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

// Paravector U = U0 + U: the scalar-plus-vector model of a four-vector.
struct Paravector {
  Complex s{};  // U^0
  CVec3 v{};    // U

  Paravector() = default;
  Paravector(Complex s_, CVec3 v_) : s(s_), v(v_) {}

  Paravector operator+(const Paravector& o) const { return {s + o.s, v + o.v}; }
  Paravector operator-(const Paravector& o) const { return {s - o.s, v - o.v}; }
  Paravector operator-() const { return {-s, -v}; }
  Paravector operator*(Complex c) const { return {s * c, v * c}; }

  // Ubar = U0 - U (Clifford conjugation restricted to grades {0,1}).
  Paravector bar() const { return {s, -v}; }
};

inline Paravector operator*(Complex c, const Paravector& p) { return p * c; }

// Dense multivector: 8 complex coefficients in the canonical blade order.
class Multivector {
 public:
  Multivector() = default;

  static Multivector scalar(Complex c) {
    Multivector m;
    m.c_[0] = c;
    return m;
  }
  static Multivector blade(Blade b, Complex c = 1.0) {
    Multivector m;
    m.c_[static_cast<int>(b)] = c;
    return m;
  }
  // The trivector i.
  static Multivector trivector() { return blade(Blade::E123); }

  static Multivector vector(const CVec3& v) {
    Multivector m;
    m.c_[1] = v.x; m.c_[2] = v.y; m.c_[3] = v.z;
    return m;
  }
  // Bivector i*v: coefficients on (e23, e31, e12).
  static Multivector bivector(const CVec3& v) {
    Multivector m;
    m.c_[4] = v.x; m.c_[5] = v.y; m.c_[6] = v.z;
    return m;
  }
  static Multivector paravector(const Paravector& p) {
    Multivector m = vector(p.v);
    m.c_[0] = p.s;
    return m;
  }

  Complex& operator[](int i) { return c_[i]; }
  const Complex& operator[](int i) const { return c_[i]; }
  Complex& operator[](Blade b) { return c_[static_cast<int>(b)]; }
  const Complex& operator[](Blade b) const { return c_[static_cast<int>(b)]; }

  Multivector operator+(const Multivector& o) const {
    Multivector r;
    for (int i = 0; i < kBladeCount; ++i) r.c_[i] = c_[i] + o.c_[i];
    return r;
  }
  Multivector operator-(const Multivector& o) const {
    Multivector r;
    for (int i = 0; i < kBladeCount; ++i) r.c_[i] = c_[i] - o.c_[i];
    return r;
  }
  Multivector operator-() const {
    Multivector r;
    for (int i = 0; i < kBladeCount; ++i) r.c_[i] = -c_[i];
    return r;
  }
  Multivector operator*(Complex s) const {
    Multivector r;
    for (int i = 0; i < kBladeCount; ++i) r.c_[i] = c_[i] * s;
    return r;
  }
  Multivector& operator+=(const Multivector& o) {
    for (int i = 0; i < kBladeCount; ++i) c_[i] += o.c_[i];
    return *this;
  }

  Complex scalarPart() const { return c_[0]; }
  CVec3 vectorPart() const { return {c_[1], c_[2], c_[3]}; }
  // q in the bivector-as-i*q identification (e23,e31,e12) coefficients.
  CVec3 bivectorPart() const { return {c_[4], c_[5], c_[6]}; }
  Complex trivectorPart() const { return c_[7]; }

  double maxAbs() const {
    double m = 0.0;
    for (const auto& c : c_) m = std::max(m, std::abs(c));
    return m;
  }

 private:
  std::array<Complex, kBladeCount> c_{};
};

inline Multivector operator*(Complex s, const Multivector& m) { return m * s; }

namespace detail {
struct BladeProduct {
  int sign;
  int blade;
};
// Hand-audited geometric product of basis blades in the canonical order
// {1, e1, e2, e3, e23, e31, e12, e123}. products[a][b] gives sign and
// resulting blade of blade_a * blade_b.
inline constexpr BladeProduct kBladeTable[kBladeCount][kBladeCount] = {
    {{+1, 0}, {+1, 1}, {+1, 2}, {+1, 3}, {+1, 4}, {+1, 5}, {+1, 6}, {+1, 7}},  // 1
    {{+1, 1}, {+1, 0}, {+1, 6}, {-1, 5}, {+1, 7}, {-1, 3}, {+1, 2}, {+1, 4}},  // e1
    {{+1, 2}, {-1, 6}, {+1, 0}, {+1, 4}, {+1, 3}, {+1, 7}, {-1, 1}, {+1, 5}},  // e2
    {{+1, 3}, {+1, 5}, {-1, 4}, {+1, 0}, {-1, 2}, {+1, 1}, {+1, 7}, {+1, 6}},  // e3
    {{+1, 4}, {+1, 7}, {-1, 3}, {+1, 2}, {-1, 0}, {-1, 6}, {+1, 5}, {-1, 1}},  // e23
    {{+1, 5}, {+1, 3}, {+1, 7}, {-1, 1}, {+1, 6}, {-1, 0}, {-1, 4}, {-1, 2}},  // e31
    {{+1, 6}, {-1, 2}, {+1, 1}, {+1, 7}, {-1, 5}, {+1, 4}, {-1, 0}, {-1, 3}},  // e12
    {{+1, 7}, {+1, 4}, {+1, 5}, {+1, 6}, {-1, 1}, {-1, 2}, {-1, 3}, {-1, 0}},  // e123
};
}  // namespace detail

// Full geometric product via the blade table.
inline Multivector gp(const Multivector& a, const Multivector& b) {
  Multivector r;
  for (int ia = 0; ia < kBladeCount; ++ia) {
    if (a[ia] == Complex{}) continue;
    for (int ib = 0; ib < kBladeCount; ++ib) {
      const auto& p = detail::kBladeTable[ia][ib];
      r[p.blade] += static_cast<double>(p.sign) * a[ia] * b[ib];
    }
  }
  return r;
}

inline Multivector operator*(const Multivector& a, const Multivector& b) { return gp(a, b); }

// Paravector product per the scalar/vector/bivector expansion
// UV = (U0 V0 + U.V) + (U0 V + U V0) + i U x V.
inline Multivector paravectorProduct(const Paravector& u, const Paravector& v) {
  Multivector r = Multivector::scalar(u.s * v.s + dot(u.v, v.v));
  r += Multivector::vector(u.s * v.v + u.v * v.s);
  r += Multivector::bivector(cross(u.v, v.v));
  return r;
}

// Clifford conjugation: grade signs (+,-,-,+). Anti-automorphism extending
// Ubar = U0 - U.
inline Multivector cliffordConjugate(const Multivector& a) {
  static constexpr double sgn[4] = {+1.0, -1.0, -1.0, +1.0};
  Multivector r;
  for (int i = 0; i < kBladeCount; ++i) r[i] = sgn[kBladeGrade[i]] * a[i];
  return r;
}

inline Multivector gradeProject(const Multivector& a, int grade) {
  if (grade < 0 || grade > 3) throw std::invalid_argument("gradeProject: grade must be 0..3");
  Multivector r;
  for (int i = 0; i < kBladeCount; ++i)
    if (kBladeGrade[i] == grade) r[i] = a[i];
  return r;
}

// Coefficient-wise conjugation of the *coefficients* only (j -> -j); blades
// untouched. Distinct from cliffordConjugate.
inline Multivector coeffConj(const Multivector& a) {
  Multivector r;
  for (int i = 0; i < kBladeCount; ++i) r[i] = std::conj(a[i]);
  return r;
}

// Left-multiply by the trivector i (a blade permutation with signs).
inline Multivector mulTrivector(const Multivector& a) {
  return gp(Multivector::trivector(), a);
}

// Decompose M = P + i Q with P, Q paravectors.
inline void splitParavectors(const Multivector& m, Paravector& p, Paravector& q) {
  p = Paravector{m.scalarPart(), m.vectorPart()};
  q = Paravector{m.trivectorPart(), m.bivectorPart()};
}

inline Multivector joinParavectors(const Paravector& p, const Paravector& q) {
  Multivector r = Multivector::paravector(p);
  r[Blade::E123] = q.s;
  r[Blade::E23] = q.v.x;
  r[Blade::E31] = q.v.y;
  r[Blade::E12] = q.v.z;
  return r;
}

}  // namespace rsph
