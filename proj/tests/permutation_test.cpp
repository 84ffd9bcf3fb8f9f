#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "oracles.hpp"
#include "pfaff/permutation.hpp"

using pfaff::Permutation;

namespace {

Permutation perm(std::vector<int> v) { return Permutation(std::move(v)); }

Permutation random_perm(std::size_t m, std::mt19937_64& rng) {
  std::vector<int> v(m);
  std::iota(v.begin(), v.end(), 1);
  std::shuffle(v.begin(), v.end(), rng);
  return Permutation(v);
}

}  // namespace

TEST(Permutation, RejectsNonBijections) {
  EXPECT_THROW(perm({1, 1, 3}), std::invalid_argument);
  EXPECT_THROW(perm({0, 1}), std::invalid_argument);
  EXPECT_THROW(perm({1, 4, 2}), std::invalid_argument);
  EXPECT_NO_THROW(perm({}));
}

TEST(Permutation, ComposeAppliesRightFirst) {
  const auto p = perm({2, 3, 1});
  const auto q = perm({1, 3, 2});
  const auto pq = pfaff::compose(p, q);
  for (int k = 1; k <= 3; ++k) EXPECT_EQ(pq(k), p(q(k)));
  EXPECT_EQ(pq, perm({2, 1, 3}));
}

TEST(Permutation, SignExamples) {
  EXPECT_EQ(perm({1, 2, 3, 4}).sign(), 1);
  EXPECT_EQ(perm({2, 1, 3, 4}).sign(), -1);
  EXPECT_EQ(perm({2, 3, 1}).sign(), 1);
  EXPECT_EQ(perm({4, 3, 2, 1}).sign(), 1);
  EXPECT_EQ(perm({1, 3, 2, 4}).inversions(), 1U);
}

TEST(Permutation, SignMatchesInversionCount) {
  for (int m = 1; m <= 6; ++m) {
    for (const auto& images : oracle::all_permutations(m)) {
      EXPECT_EQ(Permutation(images).sign(), oracle::inversion_sign(images));
    }
  }
}

TEST(Permutation, InverseExamples) {
  EXPECT_EQ(pfaff::inverse(perm({2, 3, 1})), perm({3, 1, 2}));
  EXPECT_EQ(pfaff::inverse(perm({1, 4, 3, 2})), perm({1, 4, 3, 2}));
}

TEST(Permutation, GroupLawsRandomized) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t m = 1 + trial % 8;
    const auto p = random_perm(m, rng);
    const auto q = random_perm(m, rng);
    const auto r = random_perm(m, rng);
    EXPECT_EQ(pfaff::compose(pfaff::compose(p, q), r), pfaff::compose(p, pfaff::compose(q, r)));
    EXPECT_EQ(pfaff::inverse(pfaff::inverse(p)), p);
    EXPECT_TRUE(pfaff::compose(p, pfaff::inverse(p)).is_identity());
    EXPECT_EQ(pfaff::compose(p, q).sign(), p.sign() * q.sign());
  }
}

TEST(Permutation, ToString) { EXPECT_EQ(pfaff::to_string(perm({1, 4, 3, 2})), "(1,4,3,2)"); }

TEST(SymmetricGroupStream, EnumeratesFactorialManyDistinct) {
  for (std::size_t m = 1; m <= 6; ++m) {
    const auto all = pfaff::enumerate_sym(m);
    std::set<Permutation> distinct(all.begin(), all.end());
    std::size_t fact = 1;
    for (std::size_t k = 2; k <= m; ++k) fact *= k;
    EXPECT_EQ(all.size(), fact);
    EXPECT_EQ(distinct.size(), fact);
  }
}

TEST(SymmetricGroupStream, CapIsEnforced) {
  EXPECT_THROW(pfaff::enumerate_sym(0), std::invalid_argument);
  EXPECT_THROW(pfaff::SymmetricGroupStream(10, 9), pfaff::CapExceeded);
}

TEST(SymmetricGroupStream, PinnedFirstImage) {
  pfaff::SymmetricGroupStream s(5, 3, 9);
  std::size_t count = 0;
  while (auto p = s.next()) {
    EXPECT_EQ((*p)(1), 3);
    ++count;
  }
  EXPECT_EQ(count, 24U);
}

TEST(Dihedral, GeneratorShapes) {
  const auto g = pfaff::dihedral_generators(6);
  EXPECT_EQ(g.rotation, perm({2, 3, 4, 5, 6, 1}));
  EXPECT_EQ(g.reflection, perm({1, 6, 5, 4, 3, 2}));
  EXPECT_THROW(pfaff::dihedral_generators(5), std::invalid_argument);
}

TEST(Dihedral, SubgroupOrders) {
  EXPECT_EQ(pfaff::dihedral_subgroup(2).size(), 2U);
  EXPECT_EQ(pfaff::dihedral_subgroup(4).size(), 8U);
  EXPECT_EQ(pfaff::dihedral_subgroup(6).size(), 12U);
  EXPECT_EQ(pfaff::dihedral_subgroup(8).size(), 16U);
}

TEST(Dihedral, CyclicSubgroupOfRotation) {
  const std::vector<Permutation> gens{pfaff::dihedral_generators(6).rotation};
  EXPECT_EQ(pfaff::generate_subgroup(gens, 6).size(), 6U);
}

TEST(Dihedral, ReflectionConjugatesRotationToInverse) {
  for (std::size_t m : {4U, 6U, 8U}) {
    const auto g = pfaff::dihedral_generators(m);
    const auto lhs = pfaff::compose(pfaff::compose(g.reflection, g.rotation), g.reflection);
    EXPECT_EQ(lhs, pfaff::inverse(g.rotation));
  }
}

TEST(RunClassifier, AgreesWithMembership) {
  for (std::size_t m : {4U, 6U, 8U}) {
    const auto d = pfaff::dihedral_subgroup(m);
    const std::set<Permutation> members(d.begin(), d.end());
    pfaff::for_each_permutation(m, [&](const Permutation& p) {
      const auto rt = pfaff::classify_runs(p);
      EXPECT_EQ(rt.tag != pfaff::RunTag::NotDihedral, members.count(p) == 1) << pfaff::to_string(p);
    });
  }
}

TEST(RunClassifier, Examples) {
  EXPECT_EQ(pfaff::classify_runs(perm({1, 2, 3, 4})).tag, pfaff::RunTag::OneUpRun);
  EXPECT_EQ(pfaff::classify_runs(perm({4, 3, 2, 1})).tag, pfaff::RunTag::OneDownRun);
  const auto up = pfaff::classify_runs(perm({3, 4, 1, 2}));
  EXPECT_EQ(up.tag, pfaff::RunTag::TwoUpRuns);
  EXPECT_EQ(up.split, 3);
  const auto down = pfaff::classify_runs(perm({2, 1, 4, 3}));
  EXPECT_EQ(down.tag, pfaff::RunTag::TwoDownRuns);
  EXPECT_EQ(pfaff::classify_runs(perm({1, 3, 2, 4})).tag, pfaff::RunTag::NotDihedral);
}
