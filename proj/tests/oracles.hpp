#pragma once

// Independent reference implementations used only by tests.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "pfaff/permutation.hpp"
#include "pfaff/poly.hpp"
#include "pfaff/rational.hpp"
#include "pfaff/triangular_array.hpp"

namespace oracle {

inline int inversion_sign(const std::vector<int>& images) {
  int inv = 0;
  for (std::size_t i = 0; i < images.size(); ++i) {
    for (std::size_t j = i + 1; j < images.size(); ++j) inv += images[i] > images[j];
  }
  return inv % 2 == 0 ? 1 : -1;
}

inline std::vector<std::vector<int>> all_permutations(int m) {
  std::vector<int> p(static_cast<std::size_t>(m));
  std::iota(p.begin(), p.end(), 1);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// sigma(2k-1) < sigma(2k) and sigma(1) < sigma(3) < ... < sigma(2n-1).
inline bool is_pfaff(const std::vector<int>& p) {
  for (std::size_t k = 0; k + 1 < p.size(); k += 2) {
    if (p[k] > p[k + 1]) return false;
    if (k >= 2 && p[k - 2] > p[k]) return false;
  }
  return true;
}

inline std::vector<std::vector<int>> brute_pfaff(int two_n) {
  std::vector<std::vector<int>> out;
  for (auto& p : all_permutations(two_n)) {
    if (is_pfaff(p)) out.push_back(p);
  }
  return out;
}

template <class Scalar>
Scalar brute_pfaffian(const pfaff::TriangularArray<Scalar>& arr) {
  const int two_n = static_cast<int>(arr.size());
  if (two_n == 0) return Scalar(1);
  Scalar total(0);
  for (const auto& p : brute_pfaff(two_n)) {
    Scalar term(inversion_sign(p));
    for (std::size_t k = 0; k < p.size(); k += 2) term *= arr.entry(p[k], p[k + 1]);
    total += term;
  }
  return total;
}

// Leibniz expansion over the full matrix built entry by entry.
template <class Scalar>
Scalar leibniz_det(const std::vector<std::vector<Scalar>>& a) {
  const int m = static_cast<int>(a.size());
  if (m == 0) return Scalar(1);
  Scalar total(0);
  for (const auto& p : all_permutations(m)) {
    Scalar term(inversion_sign(p));
    for (int i = 0; i < m; ++i) term *= a[i][p[i] - 1];
    total += term;
  }
  return total;
}

template <class Scalar>
std::vector<std::vector<Scalar>> full_matrix(const pfaff::TriangularArray<Scalar>& arr) {
  const int m = static_cast<int>(arr.size());
  std::vector<std::vector<Scalar>> a(m, std::vector<Scalar>(m, Scalar(0)));
  for (int i = 1; i <= m; ++i) {
    for (int j = i + 1; j <= m; ++j) {
      a[i - 1][j - 1] = arr.entry(i, j);
      if (arr.mode() == pfaff::GeneratorMode::Skew) {
        a[j - 1][i - 1] = -arr.entry(i, j);
      } else {
        a[j - 1][i - 1] = arr.entry(i, j);
      }
    }
  }
  return a;
}

inline pfaff::Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 5);
  pfaff::Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

inline pfaff::TriangularArray<pfaff::Rational> random_rational_array(std::size_t two_n,
                                                                     pfaff::GeneratorMode mode,
                                                                     std::mt19937_64& rng) {
  std::vector<pfaff::Rational> upper;
  for (std::size_t k = 0; k < pfaff::TriangularArray<pfaff::Rational>::entry_count(two_n); ++k) {
    upper.push_back(random_rational(rng));
  }
  return {two_n, mode, std::move(upper)};
}

inline pfaff::TriangularArray<pfaff::Rational> random_integer_array(std::size_t two_n,
                                                                    pfaff::GeneratorMode mode,
                                                                    std::mt19937_64& rng) {
  std::uniform_int_distribution<int> val(-20, 20);
  std::vector<pfaff::Rational> upper;
  for (std::size_t k = 0; k < pfaff::TriangularArray<pfaff::Rational>::entry_count(two_n); ++k) {
    upper.emplace_back(val(rng));
  }
  return {two_n, mode, std::move(upper)};
}

// Hand-expanded generic pfaffian of order 6 (15 terms).
inline pfaff::Poly pf6_by_hand() {
  using pfaff::Poly;
  auto a = [](int i, int j) { return Poly::gen(i, j); };
  return a(1, 2) * (a(3, 4) * a(5, 6) - a(3, 5) * a(4, 6) + a(3, 6) * a(4, 5)) -
         a(1, 3) * (a(2, 4) * a(5, 6) - a(2, 5) * a(4, 6) + a(2, 6) * a(4, 5)) +
         a(1, 4) * (a(2, 3) * a(5, 6) - a(2, 5) * a(3, 6) + a(2, 6) * a(3, 5)) -
         a(1, 5) * (a(2, 3) * a(4, 6) - a(2, 4) * a(3, 6) + a(2, 6) * a(3, 4)) +
         a(1, 6) * (a(2, 3) * a(4, 5) - a(2, 4) * a(3, 5) + a(2, 5) * a(3, 4));
}

}  // namespace oracle
