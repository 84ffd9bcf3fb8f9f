#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "pfaff/determinant.hpp"
#include "pfaff/kernel.hpp"
#include "pfaff/pfaffian.hpp"
#include "pfaff/verify.hpp"

using pfaff::Kernel;
using pfaff::Poly;
using pfaff::Rational;

namespace {

Poly x(int i) { return Poly::pos(i); }

pfaff::TriangularArray<Poly> square_diff_array(std::size_t m) {
  return pfaff::TriangularArray<Poly>::generate(m, pfaff::GeneratorMode::Symmetric,
                                                [](int i, int j) { return pfaff::pow(x(i) - x(j), 2); });
}

Poly square_diff_det(std::size_t m) { return pfaff::determinant(square_diff_array(m)); }

}  // namespace

TEST(Kernel, BuiltinsAreSymmetricAndTranslationInvariant) {
  for (const auto& k : {Kernel::square_diff(), Kernel::cosine()}) {
    EXPECT_TRUE(k.is_symmetric());
    EXPECT_TRUE(k.is_translation_invariant());
  }
  EXPECT_EQ(Kernel::square_diff().collapse_constant(), Rational(0));
  EXPECT_EQ(Kernel::cosine().collapse_constant(), Rational(1));
}

TEST(Kernel, CustomChecks) {
  const Kernel shifted = Kernel::custom(pfaff::pow(x(1) - x(2), 2) + Poly(3));
  EXPECT_TRUE(shifted.is_symmetric());
  EXPECT_TRUE(shifted.is_translation_invariant());
  EXPECT_EQ(shifted.collapse_constant(), Rational(3));
  EXPECT_FALSE(Kernel::custom(x(1) - x(2)).is_symmetric());
  EXPECT_FALSE(Kernel::custom(x(1) * x(2)).is_translation_invariant());
  EXPECT_THROW(Kernel::custom(x(3)), std::invalid_argument);
}

TEST(Kernel, ArrayErrors) {
  EXPECT_THROW(pfaff::kernel_array(Kernel::square_diff(), pfaff::symbolic_positions(3)),
               std::invalid_argument);
  EXPECT_THROW(pfaff::kernel_array(Kernel::cosine(), pfaff::symbolic_positions(4)),
               std::invalid_argument);
}

TEST(GPoly, CycleProduct) {
  EXPECT_EQ(pfaff::g_poly(2), -pfaff::pow(x(1) - x(2), 2));
  EXPECT_EQ(pfaff::g_poly(4), (x(1) - x(2)) * (x(2) - x(3)) * (x(3) - x(4)) * (x(4) - x(1)));
}

TEST(Theorem3, Constants) {
  EXPECT_EQ(pfaff::square_diff_constant(1), Rational(-1));
  EXPECT_EQ(pfaff::square_diff_constant(2), Rational(2));
  EXPECT_EQ(pfaff::square_diff_constant(3), Rational(-4));
}

TEST(Theorem3, IntegerValues) {
  const std::vector<int> expected{1, -6, 20, -56, 144};
  for (std::size_t n = 1; n <= 5; ++n) {
    EXPECT_EQ(pfaff::square_diff_value_at_integers(n), Rational(expected[n - 1]));
    std::vector<Rational> xs;
    for (std::size_t k = 1; k <= 2 * n; ++k) xs.emplace_back(static_cast<long>(k));
    const auto arr = pfaff::kernel_array(Kernel::square_diff(), xs);
    EXPECT_EQ(pfaff::pfaffian_memoized(arr), Rational(expected[n - 1]));
    if (n <= 4) EXPECT_EQ(oracle::brute_pfaffian(arr), Rational(expected[n - 1]));
  }
}

TEST(Theorem3, Symbolic) {
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto report = pfaff::verify_theorem3(n);
    EXPECT_TRUE(report.pass) << report.lhs << " vs " << report.rhs;
  }
}

TEST(Theorem2, SquareDiffAllHooks) {
  for (std::size_t two_n : {2U, 4U, 6U}) {
    for (int s = 1; s <= static_cast<int>(two_n); ++s) {
      const auto r = pfaff::verify_theorem2(Kernel::square_diff(), pfaff::symbolic_positions(two_n), s);
      EXPECT_TRUE(r.pass) << "2n=" << two_n << " s=" << s;
    }
  }
}

TEST(Theorem2, CosineAllHooks) {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  for (std::size_t two_n : {4U, 6U}) {
    std::vector<double> xs(two_n);
    for (auto& v : xs) v = angle(rng);
    for (int s = 1; s <= static_cast<int>(two_n); ++s) {
      EXPECT_TRUE(pfaff::verify_theorem2(Kernel::cosine(), xs, s).pass) << s;
    }
  }
}

TEST(Theorem2, CustomKernelWithConstant) {
  const Kernel k = Kernel::custom(pfaff::pow(x(1) - x(2), 2) + Poly(Rational(5, 2)));
  for (int s = 1; s <= 4; ++s) {
    EXPECT_TRUE(pfaff::verify_theorem2(k, pfaff::symbolic_positions(4), s).pass) << s;
  }
}

TEST(Theorem2, Preconditions) {
  EXPECT_THROW(pfaff::verify_theorem2(Kernel::custom(x(1) * x(2)), pfaff::symbolic_positions(4), 1),
               std::invalid_argument);
  EXPECT_THROW(pfaff::verify_theorem2(Kernel::square_diff(), pfaff::symbolic_positions(4), 5),
               std::out_of_range);
}

TEST(Theorem4, MatchesBruteForceOracle) {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  for (std::size_t n = 1; n <= 4; ++n) {
    std::vector<double> xs(2 * n);
    for (auto& v : xs) v = angle(rng);
    const auto arr = pfaff::kernel_array(Kernel::cosine(), xs);
    double alt = 0.0;
    for (std::size_t k = 0; k < xs.size(); ++k) alt += (k % 2 == 0 ? 1.0 : -1.0) * xs[k];
    EXPECT_NEAR(oracle::brute_pfaffian(arr), std::cos(alt), 1e-12);
    EXPECT_TRUE(pfaff::verify_theorem4(n, xs, 1e-12).pass);
  }
}

TEST(Theorem4, HandValueOrderTwo) {
  const std::vector<double> xs{0.1, 0.3, 0.2, 0.2};
  const auto r = pfaff::verify_theorem4(2, xs, 1e-15);
  EXPECT_TRUE(r.pass);
  EXPECT_NEAR(std::cos(-0.2), 0.9800665778412416, 1e-16);
}

TEST(Theorem4, SweepIsDeterministic) {
  const auto a = pfaff::sweep_theorem4(3, 10, 99, 1e-12);
  const auto b = pfaff::sweep_theorem4(3, 10, 99, 1e-12);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].lhs, b[i].lhs);
}

TEST(TrigLemma1, Sweep) {
  for (const auto& r : pfaff::sweep_trig_lemma1(200, 5)) EXPECT_TRUE(r.pass) << r.residual;
}

// Independent evaluation of the two alternating sums.
TEST(TrigLemma2, SineIdentityAndTrueCosineValue) {
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  for (std::size_t n = 1; n <= 8; ++n) {
    std::vector<double> a(n);
    for (auto& v : a) v = angle(rng);
    auto partial = [&](std::size_t from, std::size_t to) {
      double s = 0.0;
      for (std::size_t j = from; j <= to; ++j) s += ((j % 2 == 0) ? 1.0 : -1.0) * a[j - 1];
      return s;
    };
    double sines = 0.0;
    double cosines = 0.0;
    for (std::size_t i = 1; i <= n; ++i) {
      const double sgn = (i % 2 == 0) ? 1.0 : -1.0;
      const double inner = std::sin(partial(1, i - 1) - partial(i + 1, n));
      sines += sgn * std::sin(a[i - 1]) * inner;
      cosines += sgn * std::cos(a[i - 1]) * inner;
    }
    EXPECT_NEAR(sines, 0.0, 1e-12);
    const double expected = n % 2 == 1 ? 0.0 : std::sin(partial(1, n));
    EXPECT_NEAR(cosines, expected, 1e-12) << "n=" << n;

    const auto report = pfaff::verify_trig_lemma2(a);
    if (n % 2 == 1 || std::abs(std::sin(partial(1, n))) < 1e-13) {
      EXPECT_TRUE(report.pass);
    } else {
      EXPECT_FALSE(report.pass);
    }
  }
}

TEST(SquareDiffDeterminants, Values) {
  const Poly d12 = x(1) - x(2);
  EXPECT_EQ(square_diff_det(2), -pfaff::pow(d12, 4));
  EXPECT_NE(square_diff_det(2), -pfaff::pow(d12, 2));
  const Poly cyc = (x(1) - x(2)) * (x(2) - x(3)) * (x(3) - x(1));
  EXPECT_EQ(square_diff_det(3), Poly(2) * cyc * cyc);
  EXPECT_TRUE(square_diff_det(4).is_zero());
  EXPECT_TRUE(square_diff_det(5).is_zero());
  EXPECT_EQ(square_diff_det(3), oracle::leibniz_det(oracle::full_matrix(square_diff_array(3))));
}
