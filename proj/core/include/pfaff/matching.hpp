#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pfaff/limits.hpp"
#include "pfaff/permutation.hpp"

namespace pfaff {

/// An ordered perfect matching (i_1,j_1)...(i_n,j_n) of {1..2n} with
/// i_1 < ... < i_n and i_s < j_s.
class PfaffPermutation {
 public:
  using Pair = std::pair<int, int>;

  PfaffPermutation() = default;
  /// Validates the normal form; throws std::invalid_argument on violation.
  explicit PfaffPermutation(std::vector<Pair> pairs);

  const std::vector<Pair>& pairs() const noexcept { return pairs_; }
  std::size_t order() const noexcept { return pairs_.size(); }
  std::size_t two_n() const noexcept { return 2 * pairs_.size(); }

  /// (i_1, j_1, ..., i_n, j_n) as an element of S_{2n}.
  Permutation flatten() const;

  auto operator<=>(const PfaffPermutation&) const = default;
  bool operator==(const PfaffPermutation&) const = default;

 private:
  std::vector<Pair> pairs_;
};

/// Sign of the flattened one-line sequence.
int matching_sign(const PfaffPermutation& m);

std::string to_string(const PfaffPermutation& m);

struct SignedMatching {
  PfaffPermutation matching;
  int sign = 1;
};

/// Lazy enumeration of all Pfaff permutations of {1..2n} together with
/// their signs, lexicographic in the flattened sequence.
///
/// The smallest free index is always paired next, so the normal form holds
/// by construction. Pairing it with the k-th remaining free index (0-based)
/// contributes exactly k inversions, which is how the sign is tracked.
class PfaffStream {
 public:
  explicit PfaffStream(std::size_t two_n, std::size_t cap = kDefaultPfaffCap);

  /// Only the matchings whose first pair is (1, first_partner).
  PfaffStream(std::size_t two_n, int first_partner, std::size_t cap);

  /// Advances; false once the stream is exhausted.
  bool advance();

  /// Valid after advance() returned true.
  std::span<const std::pair<int, int>> pairs() const noexcept { return pairs_; }
  int sign() const noexcept { return (parity_ & 1U) != 0 ? -1 : 1; }

  std::optional<SignedMatching> next();

 private:
  bool fill_from(std::size_t level);
  int next_free_above(int index) const;

  std::size_t two_n_ = 0;
  std::size_t levels_ = 0;
  std::uint32_t used_ = 0;
  std::vector<std::pair<int, int>> pairs_;
  std::vector<unsigned> skips_;  // k per level
  unsigned parity_ = 0;
  bool started_ = false;
  bool done_ = false;
  bool pinned_ = false;
};

/// (2n-1)!!; exact up to 2n = 16.
std::uint64_t double_factorial_odd(std::size_t two_n);

std::vector<SignedMatching> enumerate_pfaff(std::size_t two_n,
                                            std::size_t cap = kDefaultPfaffCap);

}  // namespace pfaff
