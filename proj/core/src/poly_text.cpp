#include <cctype>
#include <sstream>
#include <stdexcept>

#include "pfaff/poly.hpp"

namespace pfaff {

namespace {

std::string factor_text(const Var& v, Exponent e) {
  std::string out = to_string(v);
  if (e != 1) out += "^" + std::to_string(e);
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Poly parse() {
    Poly out;
    skip_ws();
    if (at_end()) fail("empty polynomial");
    out += parse_term();
    while (true) {
      skip_ws();
      if (at_end()) break;
      const char c = peek();
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      ++pos_;
      Poly term = parse_term();
      if (c == '-') {
        out -= term;
      } else {
        out += term;
      }
    }
    return out;
  }

 private:
  Poly parse_term() {
    Rational coeff(1);
    skip_ws();
    while (!at_end() && (peek() == '-' || peek() == '+')) {
      if (peek() == '-') coeff = -coeff;
      ++pos_;
      skip_ws();
    }
    std::vector<Monomial::Factor> factors;
    bool any = false;
    while (true) {
      skip_ws();
      if (at_end()) break;
      const char c = peek();
      if (c == '*') {
        if (!any) fail("'*' before any factor");
        ++pos_;
        skip_ws();
        if (at_end()) fail("dangling '*'");
      }
      const char d = peek();
      if (std::isdigit(static_cast<unsigned char>(d))) {
        coeff *= parse_number();
      } else if (d == 'x') {
        ++pos_;
        const int i = parse_int();
        factors.emplace_back(Var::pos(i), parse_exponent());
      } else if (d == 'a') {
        ++pos_;
        expect('(');
        const int i = parse_int();
        expect(',');
        const int j = parse_int();
        expect(')');
        if (i >= j) fail("generator a(" + std::to_string(i) + "," + std::to_string(j) +
                         ") must have i < j");
        factors.emplace_back(Var::gen(i, j), parse_exponent());
      } else if (d == '+' || d == '-') {
        break;
      } else {
        fail(std::string("unexpected character '") + d + "'");
      }
      any = true;
    }
    if (!any) fail("expected a term");
    return Poly(Monomial::from_factors(std::move(factors)), coeff);
  }

  Rational parse_number() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (!at_end() && peek() == '/') {
      ++pos_;
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("bad denominator");
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    }
    try {
      return parse_rational(text_.substr(start, pos_ - start));
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
  }

  int parse_int() {
    skip_ws();
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected an index");
    if (pos_ - start > 6) fail("index too large");
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  Exponent parse_exponent() {
    if (at_end() || peek() != '^') return 1;
    ++pos_;
    const int e = parse_int();
    if (e < 1) fail("exponent must be positive");
    return static_cast<Exponent>(e);
  }

  void expect(char c) {
    skip_ws();
    if (at_end() || peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos_) + ": " +
                                why);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    if (!first) os << " + ";
    first = false;
    if (m.is_one()) {
      os << to_string(c);
      continue;
    }
    if (c == -1) {
      os << '-';
    } else if (c != 1) {
      os << to_string(c) << " * ";
    }
    bool first_factor = true;
    for (const auto& [v, e] : m.factors()) {
      if (!first_factor) os << " * ";
      first_factor = false;
      os << factor_text(v, e);
    }
  }
  return os.str();
}

std::string to_compact_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool negative = c < 0;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const Rational magnitude = abs(c);
    if (m.is_one() || magnitude != 1) os << to_string(magnitude);
    for (const auto& [v, e] : m.factors()) os << factor_text(v, e);
  }
  return os.str();
}

Poly parse_poly(std::string_view text) { return Parser(text).parse(); }

}  // namespace pfaff
