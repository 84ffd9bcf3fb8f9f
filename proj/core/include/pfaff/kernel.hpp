#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pfaff/poly.hpp"
#include "pfaff/rational.hpp"
#include "pfaff/triangular_array.hpp"

namespace pfaff {

/// Two-point kernel psi(x, y) used to fill a_{i,j} = psi(x_i, x_j).
class Kernel {
 public:
  enum class Tag { SquareDiff, Cosine, CustomSymbolic };

  /// (x - y)^2
  static Kernel square_diff();
  /// cos(x - y); numeric only.
  static Kernel cosine();
  /// Any polynomial in x(1) (for x) and x(2) (for y).
  static Kernel custom(Poly psi);

  Tag tag() const noexcept { return tag_; }
  std::string name() const;

  /// psi as a polynomial in x(1), x(2); Cosine has none.
  const Poly& expression() const;
  bool is_symbolic() const noexcept { return tag_ != Tag::Cosine; }

  /// psi(0, 0).
  Rational collapse_constant() const;

  /// psi(x,y) == psi(y,x), checked by swapping the variables.
  bool is_symmetric() const;
  /// psi(x+z, y+z) == psi(x,y), checked by substituting a fresh shift x(3).
  bool is_translation_invariant() const;

  Poly apply(const Poly& x, const Poly& y) const;
  Rational apply(const Rational& x, const Rational& y) const;
  double apply(double x, double y) const;

 private:
  Kernel(Tag tag, Poly psi) : tag_(tag), psi_(std::move(psi)) {}

  Tag tag_;
  Poly psi_;
};

/// Symmetric array of psi(x_i, x_j). Odd lengths are rejected because the
/// result feeds a pfaffian; Cosine rejects symbolic and rational positions.
TriangularArray<Poly> kernel_array(const Kernel& k, const std::vector<Poly>& xs);
TriangularArray<Rational> kernel_array(const Kernel& k, const std::vector<Rational>& xs);
TriangularArray<double> kernel_array(const Kernel& k, const std::vector<double>& xs);

/// x(1), ..., x(count).
std::vector<Poly> symbolic_positions(std::size_t count);

/// (x1-x2)(x2-x3)...(x_{2n-1}-x_{2n})(x_{2n}-x1), expanded.
Poly g_poly(std::size_t two_n);

}  // namespace pfaff
