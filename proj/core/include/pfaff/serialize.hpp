#pragma once

#include <nlohmann/json.hpp>

#include <stdexcept>
#include <string>
#include <variant>

#include "pfaff/matching.hpp"
#include "pfaff/permutation.hpp"
#include "pfaff/poly.hpp"
#include "pfaff/rational.hpp"
#include "pfaff/symmetry.hpp"
#include "pfaff/triangular_array.hpp"
#include "pfaff/verify.hpp"

namespace pfaff {

using json = nlohmann::json;

/// Malformed input document; key() names the offending field.
class SchemaError : public std::runtime_error {
 public:
  SchemaError(std::string key, const std::string& message)
      : std::runtime_error("schema error at '" + key + "': " + message), key_(std::move(key)) {}

  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

// [1,4,3,2]
json to_json(const Permutation& p);
Permutation permutation_from_json(const json& j);

// [[1,3],[2,4]]
json to_json(const PfaffPermutation& m);
PfaffPermutation matching_from_json(const json& j);

// [{"coeff": "p/q", "vars": [["x", i, e], ["a", i, j, e]]}, ...]
json to_json(const Poly& p);
Poly poly_from_json(const json& j);

json scalar_to_json(const Rational& v);
json scalar_to_json(double v);
json scalar_to_json(const Poly& v);

using AnyArray =
    std::variant<TriangularArray<Rational>, TriangularArray<double>, TriangularArray<Poly>>;

/// {"two_n": 4, "mode": "symmetric", "entries": {"1,2": "1", ...}}
///
/// Entries may be rational strings or JSON integers (exact), non-integral
/// JSON numbers (double), or polynomial records (Poly). The array takes the
/// widest kind present; doubles and polynomials cannot be mixed. Odd two_n
/// is accepted here so determinant inputs can use the same format.
AnyArray array_from_json(const json& j);

template <class Scalar>
json to_json(const TriangularArray<Scalar>& arr) {
  json entries = json::object();
  std::size_t k = 0;
  for (int i = 1; i <= static_cast<int>(arr.size()); ++i) {
    for (int jj = i + 1; jj <= static_cast<int>(arr.size()); ++jj) {
      entries[std::to_string(i) + "," + std::to_string(jj)] = scalar_to_json(arr.upper()[k++]);
    }
  }
  return json{{"two_n", arr.size()}, {"mode", to_string(arr.mode())}, {"entries", entries}};
}

// {"order": 8, "equals_dihedral": true, "elements": [[...], ...]}
json to_json(const GroupReport& report, bool include_elements = true);

// {"check", "n", "mode", "pass", "residual", "lhs", "rhs", "seed"}
json to_json(const VerificationReport& report);

}  // namespace pfaff
