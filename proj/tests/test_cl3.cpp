#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <bit>
#include <random>

#include "rsphoton/cl3.hpp"

using namespace rsph;

namespace {

// Reference blade product from bitset identities: blades are subsets of
// {e1,e2,e3}, the product mask is the symmetric difference, and the sign
// counts the transpositions needed to interleave the factors, corrected for
// the one non-ascending canonical blade (e31 = -e13).
constexpr unsigned kMask[8] = {0b000, 0b001, 0b010, 0b100, 0b110, 0b101, 0b011, 0b111};
constexpr int kOrient[8] = {+1, +1, +1, +1, +1, -1, +1, +1};
constexpr int kMaskToIndex[8] = {0, 1, 2, 6, 3, 5, 4, 7};

std::pair<int, int> refProduct(int ia, int ib) {
  const unsigned a = kMask[ia], b = kMask[ib];
  int swaps = 0;
  for (unsigned t = a >> 1; t; t >>= 1) swaps += std::popcount(t & b);
  const int ir = kMaskToIndex[a ^ b];
  return {((swaps & 1) ? -1 : +1) * kOrient[ia] * kOrient[ib] * kOrient[ir], ir};
}

Multivector randomMv(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  Multivector m;
  for (int i = 0; i < kBladeCount; ++i) m[i] = {d(rng), d(rng)};
  return m;
}

double maxDiff(const Multivector& a, const Multivector& b) {
  return (a - b).maxAbs();
}

}  // namespace

TEST_CASE("basis blade products match the bitset construction") {
  for (int ia = 0; ia < kBladeCount; ++ia)
    for (int ib = 0; ib < kBladeCount; ++ib) {
      const auto [sign, ir] = refProduct(ia, ib);
      const Multivector p = gp(Multivector::blade(static_cast<Blade>(ia)),
                               Multivector::blade(static_cast<Blade>(ib)));
      for (int i = 0; i < kBladeCount; ++i) {
        const Complex want = i == ir ? Complex{double(sign)} : Complex{};
        CHECK(p[i] == want);
      }
    }
}

TEST_CASE("pseudoscalar squares to -1 and is central") {
  const Multivector i = Multivector::trivector();
  CHECK(gp(i, i)[Blade::S] == Complex{-1.0});
  CHECK(gp(i, i).maxAbs() == doctest::Approx(1.0));
  for (int b = 0; b < kBladeCount; ++b) {
    const Multivector m = Multivector::blade(static_cast<Blade>(b));
    CHECK(maxDiff(gp(i, m), gp(m, i)) == 0.0);
  }
  // i e3 = e12
  const Multivector ie3 = gp(i, Multivector::blade(Blade::E3));
  CHECK(ie3[Blade::E12] == Complex{1.0});
  CHECK((ie3 - Multivector::blade(Blade::E12)).maxAbs() == 0.0);
}

TEST_CASE("product is associative on random multivectors") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const Multivector a = randomMv(rng), b = randomMv(rng), c = randomMv(rng);
    CHECK(maxDiff(gp(gp(a, b), c), gp(a, gp(b, c))) < 1e-12);
  }
}

TEST_CASE("paravector product specialization agrees with the full product") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  for (int trial = 0; trial < 1000; ++trial) {
    const Paravector u{{d(rng), d(rng)}, {{d(rng), d(rng)}, {d(rng), d(rng)}, {d(rng), d(rng)}}};
    const Paravector v{{d(rng), d(rng)}, {{d(rng), d(rng)}, {d(rng), d(rng)}, {d(rng), d(rng)}}};
    const Multivector got = paravectorProduct(u, v);
    const Multivector want = gp(Multivector::paravector(u), Multivector::paravector(v));
    CHECK(maxDiff(got, want) < 1e-15 * (1.0 + want.maxAbs()));
  }
}

TEST_CASE("clifford conjugation is an involutive anti-automorphism") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    const Multivector a = randomMv(rng), b = randomMv(rng);
    CHECK(maxDiff(cliffordConjugate(gp(a, b)),
                  gp(cliffordConjugate(b), cliffordConjugate(a))) < 1e-12);
    CHECK(maxDiff(cliffordConjugate(cliffordConjugate(a)), a) == 0.0);
  }
  // Grade signs (+,-,-,+).
  Multivector m;
  for (int i = 0; i < kBladeCount; ++i) m[i] = Complex{1.0};
  const Multivector mc = cliffordConjugate(m);
  CHECK(mc[Blade::S] == Complex{1.0});
  CHECK(mc[Blade::E1] == Complex{-1.0});
  CHECK(mc[Blade::E23] == Complex{-1.0});
  CHECK(mc[Blade::E123] == Complex{1.0});
}

TEST_CASE("grade projection partitions and validates") {
  std::mt19937_64 rng(17);
  const Multivector a = randomMv(rng);
  Multivector sum;
  for (int g = 0; g < 4; ++g) sum += gradeProject(a, g);
  CHECK(maxDiff(sum, a) == 0.0);
  CHECK(gradeProject(a, 1).trivectorPart() == Complex{});
  CHECK_THROWS_AS(gradeProject(a, 4), std::invalid_argument);
  CHECK_THROWS_AS(gradeProject(a, -1), std::invalid_argument);
}

TEST_CASE("paravector split and join round-trip") {
  std::mt19937_64 rng(19);
  const Multivector a = randomMv(rng);
  Paravector p, q;
  splitParavectors(a, p, q);
  CHECK(maxDiff(joinParavectors(p, q), a) == 0.0);
  // joinParavectors(p, q) = p + i q.
  const Multivector viaTri =
      Multivector::paravector(p) + mulTrivector(Multivector::paravector(q));
  CHECK(maxDiff(joinParavectors(p, q), viaTri) == 0.0);
}

TEST_CASE("coefficient conjugation touches only the complex coefficients") {
  std::mt19937_64 rng(23);
  const Multivector a = randomMv(rng);
  const Multivector ac = coeffConj(a);
  for (int i = 0; i < kBladeCount; ++i) CHECK(ac[i] == std::conj(a[i]));
}
