#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <type_traits>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pfaff/poly.hpp"
#include "pfaff/rational.hpp"
#include "pfaff/triangular_array.hpp"

namespace pfaff {

/// Dense row-major square matrix, just enough for determinants.
template <class Scalar>
struct SquareMatrix {
  std::size_t n = 0;
  std::vector<Scalar> cells;

  explicit SquareMatrix(std::size_t size) : n(size), cells(size * size, Scalar(0)) {}

  Scalar& at(std::size_t r, std::size_t c) { return cells[r * n + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return cells[r * n + c]; }
};

/// Full matrix from the completion rule of a Symmetric or Skew array.
template <class Scalar>
SquareMatrix<Scalar> complete_matrix(const TriangularArray<Scalar>& arr) {
  if (arr.mode() == GeneratorMode::Plain) {
    throw std::logic_error("determinant: plain triangular arrays have no completion rule");
  }
  SquareMatrix<Scalar> m(arr.size());
  for (std::size_t r = 0; r < m.n; ++r) {
    for (std::size_t c = 0; c < m.n; ++c) {
      m.at(r, c) = arr.lookup(static_cast<int>(r) + 1, static_cast<int>(c) + 1);
    }
  }
  return m;
}

/// Fraction-free Bareiss elimination with row swaps on zero pivots. Every
/// division is exact for integer input; for doubles the largest pivot is
/// chosen instead.
template <class Scalar>
Scalar bareiss_determinant(SquareMatrix<Scalar> m) {
  const std::size_t n = m.n;
  if (n == 0) return Scalar(1);
  Scalar previous(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pivot_row = k;
    if constexpr (std::is_floating_point_v<Scalar>) {
      for (std::size_t r = k + 1; r < n; ++r) {
        if (std::abs(m.at(r, k)) > std::abs(m.at(pivot_row, k))) pivot_row = r;
      }
    } else {
      while (pivot_row < n && m.at(pivot_row, k) == 0) ++pivot_row;
    }
    if (pivot_row == n || m.at(pivot_row, k) == 0) return Scalar(0);
    if (pivot_row != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m.at(k, c), m.at(pivot_row, c));
      sign = -sign;
    }
    for (std::size_t r = k + 1; r < n; ++r) {
      for (std::size_t c = k + 1; c < n; ++c) {
        m.at(r, c) = (m.at(r, c) * m.at(k, k) - m.at(r, k) * m.at(k, c)) / previous;
      }
      m.at(r, k) = Scalar(0);
    }
    previous = m.at(k, k);
  }
  Scalar det = m.at(n - 1, n - 1);
  if (sign < 0) det = -det;
  return det;
}

/// Laplace expansion along successive rows, memoized on the set of columns
/// still in play. Needs only ring operations, so it serves polynomial entries.
template <class Scalar>
Scalar cofactor_determinant(const SquareMatrix<Scalar>& m) {
  const std::size_t n = m.n;
  if (n > 20) throw std::invalid_argument("cofactor_determinant: size too large");
  std::unordered_map<std::uint32_t, Scalar> memo;
  const auto minor = [&](auto&& self, std::size_t row, std::uint32_t cols) -> Scalar {
    if (row == n) return Scalar(1);
    if (auto it = memo.find(cols); it != memo.end()) return it->second;
    Scalar total(0);
    int rank = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if ((cols >> c & 1U) == 0) continue;
      const Scalar& a = m.at(row, c);
      if (!(a == Scalar(0))) {
        Scalar term = a * self(self, row + 1, cols & ~(1U << c));
        if (rank % 2 == 0) {
          total += term;
        } else {
          total -= term;
        }
      }
      ++rank;
    }
    memo.emplace(cols, total);
    return total;
  };
  return minor(minor, 0, n == 0 ? 0U : ((1U << n) - 1U));
}

/// Exact determinant of the completed matrix of a Symmetric or Skew array.
/// Bareiss for numbers, cofactor expansion for polynomials. Odd sizes are
/// accepted.
template <class Scalar>
Scalar determinant(const TriangularArray<Scalar>& arr) {
  auto m = complete_matrix(arr);
  if constexpr (std::is_same_v<Scalar, Poly>) {
    return cofactor_determinant(m);
  } else {
    return bareiss_determinant(std::move(m));
  }
}

}  // namespace pfaff
