#include "pfaff/kernel.hpp"

#include <cmath>
#include <stdexcept>

namespace pfaff {

namespace {

const Var kX = Var::pos(1);
const Var kY = Var::pos(2);

void require_even_length(std::size_t n) {
  if (n % 2 != 0) {
    throw std::invalid_argument("kernel_array: needs an even number of positions, got " +
                                std::to_string(n));
  }
}

}  // namespace

Kernel Kernel::square_diff() {
  const Poly d = Poly::pos(1) - Poly::pos(2);
  return Kernel(Tag::SquareDiff, d * d);
}

Kernel Kernel::cosine() { return Kernel(Tag::Cosine, Poly{}); }

Kernel Kernel::custom(Poly psi) {
  for (const auto& v : psi.variables()) {
    if (!(v == kX || v == kY)) {
      throw std::invalid_argument("custom kernel may only use x1 (for x) and x2 (for y), found " +
                                  to_string(v));
    }
  }
  return Kernel(Tag::CustomSymbolic, std::move(psi));
}

std::string Kernel::name() const {
  switch (tag_) {
    case Tag::SquareDiff: return "square-diff";
    case Tag::Cosine: return "cosine";
    case Tag::CustomSymbolic: return "custom(" + to_string(psi_) + ")";
  }
  return "?";
}

const Poly& Kernel::expression() const {
  if (tag_ == Tag::Cosine) throw std::logic_error("cosine kernel has no polynomial form");
  return psi_;
}

Rational Kernel::collapse_constant() const {
  if (tag_ == Tag::Cosine) return Rational(1);
  return substitute(psi_, {{kX, Poly(0)}, {kY, Poly(0)}}).constant_term();
}

bool Kernel::is_symmetric() const {
  if (tag_ == Tag::Cosine) return true;
  return substitute(psi_, {{kX, Poly(kY)}, {kY, Poly(kX)}}) == psi_;
}

bool Kernel::is_translation_invariant() const {
  if (tag_ == Tag::Cosine) return true;
  const Poly shift = Poly::pos(3);
  return substitute(psi_, {{kX, Poly(kX) + shift}, {kY, Poly(kY) + shift}}) == psi_;
}

Poly Kernel::apply(const Poly& x, const Poly& y) const {
  if (tag_ == Tag::Cosine) {
    throw std::invalid_argument("cosine kernel is numeric only; got symbolic positions");
  }
  return substitute(psi_, {{kX, x}, {kY, y}});
}

Rational Kernel::apply(const Rational& x, const Rational& y) const {
  if (tag_ == Tag::Cosine) {
    throw std::invalid_argument("cosine kernel is numeric only; use double positions");
  }
  return eval_rational(psi_, {{kX, x}, {kY, y}});
}

double Kernel::apply(double x, double y) const {
  if (tag_ == Tag::Cosine) return std::cos(x - y);
  return eval_float(psi_, {{kX, x}, {kY, y}});
}

TriangularArray<Poly> kernel_array(const Kernel& k, const std::vector<Poly>& xs) {
  require_even_length(xs.size());
  if (k.tag() == Kernel::Tag::Cosine) {
    throw std::invalid_argument("cosine kernel is numeric only; got symbolic positions");
  }
  return TriangularArray<Poly>::generate(xs.size(), GeneratorMode::Symmetric, [&](int i, int j) {
    return k.apply(xs[static_cast<std::size_t>(i - 1)], xs[static_cast<std::size_t>(j - 1)]);
  });
}

TriangularArray<Rational> kernel_array(const Kernel& k, const std::vector<Rational>& xs) {
  require_even_length(xs.size());
  if (k.tag() == Kernel::Tag::Cosine) {
    throw std::invalid_argument("cosine kernel is numeric only; use double positions");
  }
  return TriangularArray<Rational>::generate(xs.size(), GeneratorMode::Symmetric,
                                             [&](int i, int j) {
                                               return k.apply(xs[static_cast<std::size_t>(i - 1)],
                                                              xs[static_cast<std::size_t>(j - 1)]);
                                             });
}

TriangularArray<double> kernel_array(const Kernel& k, const std::vector<double>& xs) {
  require_even_length(xs.size());
  return TriangularArray<double>::generate(xs.size(), GeneratorMode::Symmetric, [&](int i, int j) {
    return k.apply(xs[static_cast<std::size_t>(i - 1)], xs[static_cast<std::size_t>(j - 1)]);
  });
}

std::vector<Poly> symbolic_positions(std::size_t count) {
  std::vector<Poly> out;
  out.reserve(count);
  for (std::size_t k = 1; k <= count; ++k) out.push_back(Poly::pos(static_cast<int>(k)));
  return out;
}

Poly g_poly(std::size_t two_n) {
  if (two_n < 2 || two_n % 2 != 0) {
    throw std::invalid_argument("g_poly: needs an even size >= 2, got " + std::to_string(two_n));
  }
  Poly out(1);
  const int m = static_cast<int>(two_n);
  for (int k = 1; k <= m; ++k) out *= Poly::pos(k) - Poly::pos(k == m ? 1 : k + 1);
  return out;
}

}  // namespace pfaff
