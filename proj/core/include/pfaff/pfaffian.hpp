#pragma once

#include <cstddef>
#include <cstdint>
#include <future>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "pfaff/limits.hpp"
#include "pfaff/matching.hpp"
#include "pfaff/triangular_array.hpp"

namespace pfaff {

/// H(s) = 1 for s > 0, else 0.
constexpr int heaviside(int s) noexcept { return s > 0 ? 1 : 0; }

namespace detail {

inline void require_even(std::size_t size, const char* what) {
  if (size % 2 != 0) {
    throw std::invalid_argument(std::string(what) + ": pfaffian needs an even size, got " +
                                std::to_string(size));
  }
}

template <class Scalar>
Scalar sum_aggregates(const TriangularArray<Scalar>& arr, PfaffStream stream) {
  Scalar total(0);
  while (stream.advance()) {
    Scalar aggregate(1);
    for (const auto& [i, j] : stream.pairs()) aggregate *= arr.entry(i, j);
    if (stream.sign() > 0) {
      total += aggregate;
    } else {
      total -= aggregate;
    }
  }
  return total;
}

inline constexpr int sign_of_power(int e) noexcept { return (e % 2 == 0) ? 1 : -1; }

}  // namespace detail

/// Signed sum of Pfaff aggregates. Reads only the stored upper triangle, so
/// every generator mode is accepted. The empty array has pfaffian 1.
///
/// Parallel execution splits the matching stream by the partner of index 1
/// and sums the partial results exactly.
template <class Scalar>
Scalar pfaffian_direct(const TriangularArray<Scalar>& arr, Execution exec = Execution::Sequential,
                       std::size_t cap = kDefaultPfaffCap) {
  detail::require_even(arr.size(), "pfaffian_direct");
  if (arr.size() > cap) throw CapExceeded("pfaffian_direct", arr.size(), cap);
  if (arr.size() == 0) return Scalar(1);
  if (exec == Execution::Sequential || arr.size() <= 4) {
    return detail::sum_aggregates(arr, PfaffStream(arr.size(), cap));
  }
  std::vector<std::future<Scalar>> parts;
  for (int partner = 2; partner <= static_cast<int>(arr.size()); ++partner) {
    parts.push_back(std::async(std::launch::async, [&arr, partner, cap] {
      return detail::sum_aggregates(arr, PfaffStream(arr.size(), partner, cap));
    }));
  }
  Scalar total(0);
  for (auto& part : parts) total += part.get();
  return total;
}

namespace detail {

// Expansion along hook s of the sub-array on `indices`; sub-pfaffians recurse
// along their first hook. Positions inside `indices` play the role of the
// relabeled indices 1..k.
template <class Scalar>
Scalar hook_recurse(const TriangularArray<Scalar>& arr, const std::vector<int>& indices,
                    std::size_t s_pos) {
  const std::size_t k = indices.size();
  if (k == 0) return Scalar(1);
  Scalar total(0);
  const int s = static_cast<int>(s_pos) + 1;
  for (std::size_t j_pos = 0; j_pos < k; ++j_pos) {
    if (j_pos == s_pos) continue;
    const int j = static_cast<int>(j_pos) + 1;
    std::vector<int> rest;
    rest.reserve(k - 2);
    for (std::size_t t = 0; t < k; ++t) {
      if (t != s_pos && t != j_pos) rest.push_back(indices[t]);
    }
    const Scalar sub = hook_recurse(arr, rest, 0);
    const int orig_s = indices[s_pos];
    const int orig_j = indices[j_pos];
    Scalar term = arr.lookup(orig_s, orig_j) * sub;
    int exponent = s + j + 1;
    if (arr.mode() == GeneratorMode::Skew) exponent += heaviside(s - j);
    if (sign_of_power(exponent) > 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

template <class Scalar>
Scalar hook_expand(const TriangularArray<Scalar>& arr, int s, GeneratorMode expected,
                   const char* what) {
  if (arr.mode() != expected) {
    throw std::logic_error(std::string(what) + ": array mode is " + to_string(arr.mode()) +
                           ", expected " + to_string(expected));
  }
  require_even(arr.size(), what);
  if (s < 1 || s > static_cast<int>(arr.size())) {
    throw std::out_of_range(std::string(what) + ": hook index " + std::to_string(s) +
                            " outside 1.." + std::to_string(arr.size()));
  }
  std::vector<int> indices(arr.size());
  for (std::size_t t = 0; t < indices.size(); ++t) indices[t] = static_cast<int>(t) + 1;
  return hook_recurse(arr, indices, static_cast<std::size_t>(s - 1));
}

}  // namespace detail

/// sum_{j != s} (-1)^{s+j+1} a_{s,j} pf(A without hooks s, j), with
/// a_{s,j} = a_{j,s} for j < s.
template <class Scalar>
Scalar hook_expand_symmetric(const TriangularArray<Scalar>& arr, int s) {
  return detail::hook_expand(arr, s, GeneratorMode::Symmetric, "hook_expand_symmetric");
}

/// sum_{j != s} (-1)^{s+j+1+H(s-j)} a_{s,j} pf(A without hooks s, j), with
/// a_{s,j} = -a_{j,s} for j < s.
template <class Scalar>
Scalar hook_expand_skew(const TriangularArray<Scalar>& arr, int s) {
  return detail::hook_expand(arr, s, GeneratorMode::Skew, "hook_expand_skew");
}

/// First-hook recursion memoized on the bitmask of remaining indices;
/// O(2^{2n} * 2n) products instead of (2n-1)!!.
template <class Scalar>
Scalar pfaffian_memoized(const TriangularArray<Scalar>& arr, std::size_t cap = kDefaultPfaffCap) {
  detail::require_even(arr.size(), "pfaffian_memoized");
  if (arr.size() > cap) throw CapExceeded("pfaffian_memoized", arr.size(), cap);
  std::unordered_map<std::uint32_t, Scalar> memo;
  const auto solve = [&](auto&& self, std::uint32_t mask) -> Scalar {
    if (mask == 0) return Scalar(1);
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    const int low = __builtin_ctz(mask);
    const std::uint32_t rest = mask & ~(1U << low);
    Scalar total(0);
    int rank = 0;
    for (int j = low + 1; j < static_cast<int>(arr.size()); ++j) {
      if ((rest >> j & 1U) == 0) continue;
      Scalar term = arr.entry(low + 1, j + 1) * self(self, rest & ~(1U << j));
      if (rank % 2 == 0) {
        total += term;
      } else {
        total -= term;
      }
      ++rank;
    }
    memo.emplace(mask, total);
    return total;
  };
  const std::uint32_t full =
      arr.size() == 32 ? ~0U : ((1U << static_cast<unsigned>(arr.size())) - 1U);
  return solve(solve, full);
}

}  // namespace pfaff
