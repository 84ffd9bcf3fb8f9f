#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pfaff/rational.hpp"

namespace pfaff {

/// A polynomial variable: a position x(i) or a generator a(i,j) with i < j.
///
/// The derived ordering puts every Pos before every Gen, then compares
/// indices lexicographically.
struct Var {
  enum class Family : std::uint8_t { Pos = 0, Gen = 1 };

  Family family = Family::Pos;
  int i = 1;
  int j = 0;  // unused for Pos

  static Var pos(int i);
  /// Requires 1 <= i < j; the action code is responsible for normalizing.
  static Var gen(int i, int j);

  bool is_pos() const noexcept { return family == Family::Pos; }
  bool is_gen() const noexcept { return family == Family::Gen; }

  auto operator<=>(const Var&) const = default;
  bool operator==(const Var&) const = default;
};

std::string to_string(const Var& v);

using Exponent = std::uint32_t;

/// Sorted product of variables with positive exponents.
class Monomial {
 public:
  using Factor = std::pair<Var, Exponent>;

  Monomial() = default;
  explicit Monomial(Var v, Exponent e = 1);
  /// Merges duplicates and drops zero exponents.
  static Monomial from_factors(std::vector<Factor> factors);

  const std::vector<Factor>& factors() const noexcept { return factors_; }
  bool is_one() const noexcept { return factors_.empty(); }
  Exponent degree() const noexcept;
  Exponent exponent_of(const Var& v) const noexcept;
  int max_index() const noexcept;

  friend Monomial operator*(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial&) const = default;

 private:
  std::vector<Factor> factors_;
};

/// Graded-lex term order: higher total degree first, then the monomial with
/// the larger exponent on the earliest variable where they differ.
struct TermOrder {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept;
};

/// Sparse multivariate polynomial with rational coefficients.
///
/// Terms live in a map keyed by monomial; zero coefficients are never
/// stored, so structural equality is mathematical equality.
class Poly {
 public:
  using Terms = std::map<Monomial, Rational, TermOrder>;

  Poly() = default;
  Poly(int constant);  // NOLINT(google-explicit-constructor): scalar literals in generic code
  Poly(const Rational& constant);  // NOLINT(google-explicit-constructor)
  explicit Poly(const Var& v);
  Poly(const Monomial& m, const Rational& coeff);

  static Poly pos(int i) { return Poly(Var::pos(i)); }
  static Poly gen(int i, int j) { return Poly(Var::gen(i, j)); }

  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  /// Constant term (zero if absent).
  Rational constant_term() const;
  /// Total degree; -1 for the zero polynomial.
  int degree() const noexcept;
  std::vector<Var> variables() const;

  /// Adds coeff * m in place.
  void add_term(const Monomial& m, const Rational& coeff);

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a);

  bool operator==(const Poly& rhs) const;

 private:
  Terms terms_;
};

Poly add(const Poly& p, const Poly& q);
Poly mul(const Poly& p, const Poly& q);
Poly neg(const Poly& p);
Poly scale(const Rational& c, const Poly& p);
Poly pow(const Poly& p, unsigned k);

using Substitution = std::map<Var, Poly>;

/// Ring homomorphism fixing every variable not in the map.
Poly substitute(const Poly& p, const Substitution& map);

/// Throws std::out_of_range naming the first variable the assignment lacks.
Rational eval_rational(const Poly& p, const std::map<Var, Rational>& assignment);
double eval_float(const Poly& p, const std::map<Var, double>& assignment);

/// Canonical text: "-2 * x1^2 * a(1,3) + x2", coefficient omitted when it is 1.
std::string to_string(const Poly& p);

/// Compact a(i,j)/x_i notation: "a(1,2)a(3,4) - a(1,3)a(2,4) + a(1,4)a(2,3)".
std::string to_compact_string(const Poly& p);

/// Accepts either text form. Throws std::invalid_argument with a position.
Poly parse_poly(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace pfaff
