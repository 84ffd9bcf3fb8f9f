#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pfaff/limits.hpp"

namespace pfaff {

/// A permutation of {1..m} in one-line notation: images()[k-1] == p(k).
///
/// Values are immutable once built; the constructor rejects anything that is
/// not a bijection of {1..m}.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);
  Permutation(std::initializer_list<int> images) : Permutation(std::vector<int>(images)) {}

  static Permutation identity(std::size_t m);

  std::size_t size() const noexcept { return images_.size(); }
  const std::vector<int>& images() const noexcept { return images_; }

  /// p(k) for 1 <= k <= size().
  int operator()(int k) const { return images_.at(static_cast<std::size_t>(k - 1)); }

  /// +1 or -1, the parity of the inversion count.
  int sign() const;
  std::size_t inversions() const;
  bool is_identity() const;

  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

/// (p o q)(k) = p(q(k)). Throws std::invalid_argument on a size mismatch.
Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);

std::string to_string(const Permutation& p);
std::ostream& operator<<(std::ostream& os, const Permutation& p);

/// Lazily walks S_m in lexicographic order of one-line notation.
class SymmetricGroupStream {
 public:
  explicit SymmetricGroupStream(std::size_t m, std::size_t cap = kDefaultSymCap);

  /// Restricts the walk to permutations with p(1) == first_image.
  SymmetricGroupStream(std::size_t m, int first_image, std::size_t cap);

  std::optional<Permutation> next();

 private:
  std::vector<int> current_;
  bool started_ = false;
  bool done_ = false;
  bool pin_first_ = false;
};

/// Visits every element of S_m in lexicographic order. Refuses m > cap.
void for_each_permutation(std::size_t m, const std::function<void(const Permutation&)>& visit,
                          std::size_t cap = kDefaultSymCap);

std::vector<Permutation> enumerate_sym(std::size_t m, std::size_t cap = kDefaultSymCap);

struct DihedralGenerators {
  Permutation rotation;    // k -> k+1, m -> 1
  Permutation reflection;  // 1 -> 1, k -> m+2-k
};

/// Throws std::invalid_argument unless m is even and positive.
DihedralGenerators dihedral_generators(std::size_t m);

/// Closure of {identity} U gens under composition, sorted lexicographically.
/// An empty generator list needs the degree, hence the explicit m.
std::vector<Permutation> generate_subgroup(std::span<const Permutation> gens, std::size_t m);

/// <rotation, reflection> inside S_m, sorted.
std::vector<Permutation> dihedral_subgroup(std::size_t m);

enum class RunTag { OneUpRun, OneDownRun, TwoUpRuns, TwoDownRuns, NotDihedral };

struct RunType {
  RunTag tag = RunTag::NotDihedral;
  std::optional<int> split;  // s for the two-run shapes

  bool operator==(const RunType&) const = default;
};

std::string to_string(RunTag tag);

/// Matches the one-line shape against the four dihedral run patterns:
///   one up-run    1 2 ... m
///   one down-run  m ... 2 1
///   two up-runs   s s+1 ... m 1 ... s-1        (1 < s <= m)
///   two down-runs s s-1 ... 1 m ... s+1        (1 <= s < m)
/// Identity and full reversal are always reported as one-run shapes.
RunType classify_runs(const Permutation& p);

}  // namespace pfaff
