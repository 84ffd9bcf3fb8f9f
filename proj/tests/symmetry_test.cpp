#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "pfaff/kernel.hpp"
#include "pfaff/symmetry.hpp"

using pfaff::ActionMode;
using pfaff::Permutation;
using pfaff::Poly;

namespace {

std::set<Permutation> as_set(const std::vector<Permutation>& v) { return {v.begin(), v.end()}; }

Poly random_gen_poly(std::size_t m, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> idx(1, static_cast<int>(m));
  std::uniform_int_distribution<int> expo(1, 3);
  Poly p;
  for (int t = 0; t < 4; ++t) {
    Poly term(oracle::random_rational(rng));
    for (int f = 0; f < 2; ++f) {
      const int i = idx(rng);
      const int j = idx(rng);
      if (i != j) term *= pfaff::pow(Poly::gen(std::min(i, j), std::max(i, j)), expo(rng));
    }
    p += term;
  }
  return p;
}

}  // namespace

// Pins the convention: the image of a(i,j) is a(p^{-1}(i), p^{-1}(j)).
TEST(Action, ConventionRegression) {
  const Permutation p({2, 3, 1});
  EXPECT_EQ(pfaff::act(p, Poly::gen(1, 2), ActionMode::SymmetricGens), Poly::gen(1, 3));
  EXPECT_EQ(pfaff::act(p, Poly::gen(1, 2), ActionMode::SkewGens), -Poly::gen(1, 3));
  EXPECT_EQ(pfaff::act(p, pfaff::pow(Poly::gen(1, 2), 2), ActionMode::SkewGens),
            pfaff::pow(Poly::gen(1, 3), 2));
}

TEST(Action, IndexOutOfRange) {
  EXPECT_THROW(pfaff::act(Permutation({2, 1}), Poly::gen(1, 3), ActionMode::SymmetricGens),
               std::out_of_range);
}

TEST(Action, RightActionLaw) {
  std::mt19937_64 rng(31);
  const auto all = pfaff::enumerate_sym(4);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  for (int t = 0; t < 60; ++t) {
    const Poly f = random_gen_poly(4, rng);
    const auto& p = all[pick(rng)];
    const auto& q = all[pick(rng)];
    for (auto mode : {ActionMode::SymmetricGens, ActionMode::SkewGens}) {
      EXPECT_EQ(pfaff::act(p, pfaff::act(q, f, mode), mode),
                pfaff::act(pfaff::compose(q, p), f, mode));
    }
  }
}

TEST(Action, IsARingMap) {
  std::mt19937_64 rng(32);
  const Permutation p({3, 1, 4, 2});
  for (int t = 0; t < 30; ++t) {
    const Poly f = random_gen_poly(4, rng);
    const Poly g = random_gen_poly(4, rng);
    for (auto mode : {ActionMode::SymmetricGens, ActionMode::SkewGens}) {
      EXPECT_EQ(pfaff::act(p, f * g, mode), pfaff::act(p, f, mode) * pfaff::act(p, g, mode));
      EXPECT_EQ(pfaff::act(p, f + g, mode), pfaff::act(p, f, mode) + pfaff::act(p, g, mode));
    }
  }
}

TEST(SymmetryGroup, SymmetricPfaffianIsDihedral) {
  for (std::size_t two_n : {4U, 6U}) {
    const auto report = pfaff::symmetry_group(pfaff::symbolic_pfaffian(two_n), two_n,
                                              ActionMode::SymmetricGens, false);
    EXPECT_TRUE(report.equals_dihedral);
    EXPECT_EQ(report.order, 2 * two_n);
    EXPECT_EQ(as_set(report.elements), as_set(pfaff::dihedral_subgroup(two_n)));
    EXPECT_TRUE(pfaff::is_dihedral(report, two_n));
  }
}

TEST(SymmetryGroup, OrderTwoCase) {
  const auto report =
      pfaff::symmetry_group(pfaff::symbolic_pfaffian(2), 2, ActionMode::SymmetricGens, false);
  EXPECT_EQ(report.order, 2U);
  EXPECT_TRUE(report.equals_dihedral);
}

TEST(SymmetryGroup, SkewSignedIsEverything) {
  for (std::size_t two_n : {2U, 4U, 6U}) {
    const Poly pf = pfaff::symbolic_pfaffian(two_n);
    const auto report = pfaff::symmetry_group(pf, two_n, ActionMode::SkewGens, true);
    std::size_t fact = 1;
    for (std::size_t k = 2; k <= two_n; ++k) fact *= k;
    EXPECT_EQ(report.order, fact);
    pfaff::for_each_permutation(two_n, [&](const Permutation& p) {
      EXPECT_EQ(pfaff::act(p, pf, ActionMode::SkewGens), Poly(p.sign()) * pf);
    });
  }
}

TEST(SymmetryGroup, ParallelMatchesSequential) {
  const Poly pf = pfaff::symbolic_pfaffian(6);
  const auto seq = pfaff::symmetry_group(pf, 6, ActionMode::SymmetricGens, false);
  const auto par =
      pfaff::symmetry_group(pf, 6, ActionMode::SymmetricGens, false, pfaff::Execution::Parallel);
  EXPECT_EQ(seq.elements, par.elements);
}

TEST(SymmetryGroup, WitnessOnMismatch) {
  const auto report = pfaff::symmetry_group(Poly::gen(1, 2), 4, ActionMode::SymmetricGens, false);
  EXPECT_FALSE(report.equals_dihedral);
  ASSERT_TRUE(report.witness.has_value());
  EXPECT_EQ(report.order, 4U);
}

TEST(SymmetryGroup, FromElementsRejectsNonGroups) {
  EXPECT_THROW(pfaff::GroupReport::from_elements({Permutation({2, 3, 1})}, 3), std::logic_error);
  EXPECT_THROW(pfaff::GroupReport::from_elements({Permutation({1, 2, 3}), Permutation({2, 3, 1})}, 3),
               std::logic_error);
}

TEST(SymmetryGroup, CapIsEnforced) {
  EXPECT_THROW(pfaff::symmetry_group(Poly::gen(1, 2), 10, ActionMode::SymmetricGens, false),
               pfaff::CapExceeded);
}

TEST(SymOfG, Dihedral) {
  for (std::size_t two_n : {4U, 6U}) {
    const auto report = pfaff::sym_of_g(two_n);
    EXPECT_TRUE(report.equals_dihedral) << two_n;
    EXPECT_EQ(report.order, 2 * two_n);
  }
}
