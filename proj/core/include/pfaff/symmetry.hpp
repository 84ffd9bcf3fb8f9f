#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pfaff/limits.hpp"
#include "pfaff/permutation.hpp"
#include "pfaff/poly.hpp"

namespace pfaff {

/// How a(j,i) with j > i is folded back onto the stored generator a(i,j).
enum class ActionMode { SymmetricGens, SkewGens };

std::string to_string(ActionMode mode);
ActionMode parse_action_mode(const std::string& text);

/// p . a(i,j) = a(p^{-1}(i), p^{-1}(j)) and p . x(i) = x(p^{-1}(i)), extended
/// multiplicatively. Under SkewGens each generator whose indices come out
/// reversed picks up a factor -1.
///
/// With the inverse on indices this is a right action:
/// act(p, act(q, f)) == act(compose(q, p), f).
Poly act(const Permutation& p, const Poly& poly, ActionMode mode);

/// A subgroup of S_m found by search, stored sorted.
struct GroupReport {
  std::size_t degree = 0;
  std::vector<Permutation> elements;
  std::size_t order = 0;
  bool equals_dihedral = false;
  /// On a dihedral mismatch, one permutation in the symmetric difference.
  std::optional<Permutation> witness;

  /// Sorts, checks identity membership and closure under composition
  /// (std::logic_error otherwise) and fills the dihedral comparison.
  static GroupReport from_elements(std::vector<Permutation> elements, std::size_t degree);
};

/// Brute force over S_m: {p : act(p, f) == f}, or with is_signed,
/// {p : act(p, f) == sign(p) f}. The zero polynomial yields all of S_m.
GroupReport symmetry_group(const Poly& poly, std::size_t m, ActionMode mode, bool is_signed,
                           Execution exec = Execution::Sequential,
                           std::size_t cap = kDefaultSymCap);

/// True iff the report's elements are exactly <rotation, reflection> in S_two_n.
bool is_dihedral(const GroupReport& report, std::size_t two_n);

/// Permutations p with g(x_{p(1)}, ..., x_{p(2n)}) == g(x_1, ..., x_{2n}) for
/// the cycle product g = (x1-x2)(x2-x3)...(x_{2n}-x1).
GroupReport sym_of_g(std::size_t two_n, std::size_t cap = kDefaultSymCap);

/// Generic pfaffian of order two_n in the generators a(i,j).
Poly symbolic_pfaffian(std::size_t two_n, Execution exec = Execution::Sequential);

}  // namespace pfaff
