#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "pfaff/determinant.hpp"
#include "pfaff/pfaffian.hpp"
#include "pfaff/symmetry.hpp"

using pfaff::GeneratorMode;
using pfaff::Poly;
using pfaff::Rational;
using pfaff::TriangularArray;

namespace {

TriangularArray<Poly> generic(std::size_t two_n, GeneratorMode mode) {
  return TriangularArray<Poly>::generate(two_n, mode, [](int i, int j) { return Poly::gen(i, j); });
}

}  // namespace

TEST(TriangularArray, LookupCompletion) {
  const auto sym = TriangularArray<Rational>::generate(3, GeneratorMode::Symmetric,
                                                       [](int i, int j) { return 10 * i + j; });
  EXPECT_EQ(sym.lookup(3, 1), Rational(13));
  EXPECT_EQ(sym.lookup(2, 2), Rational(0));
  const auto skew = TriangularArray<Rational>(3, GeneratorMode::Skew, sym.upper());
  EXPECT_EQ(skew.lookup(3, 1), Rational(-13));
  const auto plain = TriangularArray<Rational>(3, GeneratorMode::Plain, sym.upper());
  EXPECT_THROW(plain.lookup(3, 1), std::logic_error);
  EXPECT_THROW(sym.entry(2, 1), std::out_of_range);
  EXPECT_THROW(TriangularArray<Rational>(4, GeneratorMode::Skew, {1, 2}), std::invalid_argument);
}

TEST(TriangularArray, RestrictRelabels) {
  const auto arr = TriangularArray<Rational>::generate(4, GeneratorMode::Skew,
                                                       [](int i, int j) { return 10 * i + j; });
  const auto sub = arr.restrict_to({2, 4});
  EXPECT_EQ(sub.size(), 2U);
  EXPECT_EQ(sub.entry(1, 2), Rational(24));
}

TEST(Pfaffian, EmptyAndOrderTwo) {
  EXPECT_EQ(pfaff::pfaffian_direct(TriangularArray<Rational>(0, GeneratorMode::Skew, {})),
            Rational(1));
  EXPECT_EQ(pfaff::pfaffian_direct(TriangularArray<Rational>(2, GeneratorMode::Plain, {7})),
            Rational(7));
  EXPECT_THROW(pfaff::pfaffian_direct(TriangularArray<Rational>(3, GeneratorMode::Skew, {1, 2, 3})),
               std::invalid_argument);
}

TEST(Pfaffian, GenericOrderFourGolden) {
  const Poly pf4 = pfaff::pfaffian_direct(generic(4, GeneratorMode::Plain));
  EXPECT_EQ(pfaff::to_compact_string(pf4), "a(1,2)a(3,4) - a(1,3)a(2,4) + a(1,4)a(2,3)");
}

TEST(Pfaffian, GenericOrderSixMatchesHandExpansion) {
  EXPECT_EQ(pfaff::pfaffian_direct(generic(6, GeneratorMode::Plain)), oracle::pf6_by_hand());
  EXPECT_EQ(pfaff::symbolic_pfaffian(6), oracle::pf6_by_hand());
}

TEST(Pfaffian, DirectMatchesBruteForceOracle) {
  std::mt19937_64 rng(21);
  for (std::size_t two_n : {2U, 4U, 6U, 8U}) {
    for (int t = 0; t < 5; ++t) {
      const auto arr = oracle::random_rational_array(two_n, GeneratorMode::Plain, rng);
      EXPECT_EQ(pfaff::pfaffian_direct(arr), oracle::brute_pfaffian(arr));
    }
  }
}

TEST(Pfaffian, ParallelMatchesSequential) {
  std::mt19937_64 rng(22);
  const auto arr = oracle::random_rational_array(10, GeneratorMode::Skew, rng);
  EXPECT_EQ(pfaff::pfaffian_direct(arr, pfaff::Execution::Parallel),
            pfaff::pfaffian_direct(arr, pfaff::Execution::Sequential));
  EXPECT_EQ(pfaff::pfaffian_memoized(arr), pfaff::pfaffian_direct(arr));
}

TEST(Pfaffian, HookExpansionsMatchDirect) {
  std::mt19937_64 rng(23);
  for (std::size_t two_n : {2U, 4U, 6U}) {
    for (int t = 0; t < 5; ++t) {
      const auto sym = oracle::random_rational_array(two_n, GeneratorMode::Symmetric, rng);
      const auto skew = oracle::random_rational_array(two_n, GeneratorMode::Skew, rng);
      for (int s = 1; s <= static_cast<int>(two_n); ++s) {
        EXPECT_EQ(pfaff::hook_expand_symmetric(sym, s), pfaff::pfaffian_direct(sym)) << s;
        EXPECT_EQ(pfaff::hook_expand_skew(skew, s), pfaff::pfaffian_direct(skew)) << s;
      }
    }
  }
}

TEST(Pfaffian, HookExpansionSymbolic) {
  for (int s = 1; s <= 6; ++s) {
    EXPECT_EQ(pfaff::hook_expand_symmetric(generic(6, GeneratorMode::Symmetric), s),
              oracle::pf6_by_hand());
    EXPECT_EQ(pfaff::hook_expand_skew(generic(6, GeneratorMode::Skew), s), oracle::pf6_by_hand());
  }
}

TEST(Pfaffian, HookModeMisuse) {
  const auto plain = generic(4, GeneratorMode::Plain);
  EXPECT_THROW(pfaff::hook_expand_symmetric(plain, 1), std::logic_error);
  EXPECT_THROW(pfaff::hook_expand_skew(generic(4, GeneratorMode::Symmetric), 1), std::logic_error);
  EXPECT_THROW(pfaff::hook_expand_skew(generic(4, GeneratorMode::Skew), 5), std::out_of_range);
}

TEST(Pfaffian, CapIsEnforced) {
  const auto arr = TriangularArray<Rational>::generate(10, GeneratorMode::Skew, [](int, int) { return 1; });
  EXPECT_THROW(pfaff::pfaffian_direct(arr, pfaff::Execution::Sequential, 8), pfaff::CapExceeded);
}

TEST(Determinant, BareissMatchesLeibniz) {
  std::mt19937_64 rng(24);
  for (std::size_t m = 1; m <= 6; ++m) {
    for (auto mode : {GeneratorMode::Symmetric, GeneratorMode::Skew}) {
      const auto arr = oracle::random_rational_array(m, mode, rng);
      EXPECT_EQ(pfaff::determinant(arr), oracle::leibniz_det(oracle::full_matrix(arr)));
    }
  }
}

TEST(Determinant, CofactorMatchesLeibnizOnPolys) {
  for (std::size_t m = 1; m <= 4; ++m) {
    const auto arr = generic(m, GeneratorMode::Symmetric);
    EXPECT_EQ(pfaff::determinant(arr), oracle::leibniz_det(oracle::full_matrix(arr)));
  }
}

TEST(Determinant, SkewIsPfaffianSquared) {
  std::mt19937_64 rng(25);
  for (std::size_t two_n : {2U, 4U, 6U, 8U}) {
    for (int t = 0; t < 5; ++t) {
      const auto arr = oracle::random_integer_array(two_n, GeneratorMode::Skew, rng);
      const Rational pf = pfaff::pfaffian_direct(arr);
      EXPECT_EQ(pfaff::determinant(arr), pf * pf);
    }
  }
  const auto sym4 = generic(4, GeneratorMode::Skew);
  const Poly pf = pfaff::pfaffian_direct(sym4);
  EXPECT_EQ(pfaff::determinant(sym4), pf * pf);
}

TEST(Determinant, OddSkewVanishes) {
  std::mt19937_64 rng(26);
  for (std::size_t m : {1U, 3U, 5U}) {
    EXPECT_EQ(pfaff::determinant(oracle::random_rational_array(m, GeneratorMode::Skew, rng)),
              Rational(0));
  }
}

TEST(Determinant, DoublePivoting) {
  const TriangularArray<double> arr(3, GeneratorMode::Symmetric, {1e-20, 2.0, 3.0});
  const auto exact = oracle::leibniz_det(oracle::full_matrix(arr));
  EXPECT_NEAR(pfaff::determinant(arr), exact, 1e-9);
}
