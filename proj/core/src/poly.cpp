#include "pfaff/poly.hpp"

#include <algorithm>
#include <stdexcept>
#include <type_traits>

namespace pfaff {

Var Var::pos(int i) {
  if (i < 1) throw std::invalid_argument("x(" + std::to_string(i) + "): index must be >= 1");
  return Var{Family::Pos, i, 0};
}

Var Var::gen(int i, int j) {
  if (i < 1 || j <= i) {
    throw std::invalid_argument("a(" + std::to_string(i) + "," + std::to_string(j) +
                                "): generators need 1 <= i < j");
  }
  return Var{Family::Gen, i, j};
}

std::string to_string(const Var& v) {
  if (v.is_pos()) return "x" + std::to_string(v.i);
  return "a(" + std::to_string(v.i) + "," + std::to_string(v.j) + ")";
}

Monomial::Monomial(Var v, Exponent e) {
  if (e > 0) factors_.emplace_back(v, e);
}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const Factor& a, const Factor& b) { return a.first < b.first; });
  Monomial out;
  for (const auto& [v, e] : factors) {
    if (e == 0) continue;
    if (!out.factors_.empty() && out.factors_.back().first == v) {
      out.factors_.back().second += e;
    } else {
      out.factors_.emplace_back(v, e);
    }
  }
  return out;
}

Exponent Monomial::degree() const noexcept {
  Exponent d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

Exponent Monomial::exponent_of(const Var& v) const noexcept {
  for (const auto& [w, e] : factors_) {
    if (w == v) return e;
  }
  return 0;
}

int Monomial::max_index() const noexcept {
  int out = 0;
  for (const auto& [v, e] : factors_) out = std::max({out, v.i, v.j});
  return out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto ia = a.factors_.begin();
  auto ib = b.factors_.begin();
  while (ia != a.factors_.end() && ib != b.factors_.end()) {
    if (ia->first < ib->first) {
      out.factors_.push_back(*ia++);
    } else if (ib->first < ia->first) {
      out.factors_.push_back(*ib++);
    } else {
      out.factors_.emplace_back(ia->first, ia->second + ib->second);
      ++ia;
      ++ib;
    }
  }
  out.factors_.insert(out.factors_.end(), ia, a.factors_.end());
  out.factors_.insert(out.factors_.end(), ib, b.factors_.end());
  return out;
}

bool TermOrder::operator()(const Monomial& a, const Monomial& b) const noexcept {
  const auto da = a.degree();
  const auto db = b.degree();
  if (da != db) return da > db;
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  const std::size_t n = std::min(fa.size(), fb.size());
  for (std::size_t k = 0; k < n; ++k) {
    if (fa[k].first != fb[k].first) return fa[k].first < fb[k].first;
    if (fa[k].second != fb[k].second) return fa[k].second > fb[k].second;
  }
  return fa.size() > fb.size();
}

Poly::Poly(int constant) {
  if (constant != 0) terms_.emplace(Monomial{}, Rational(constant));
}

Poly::Poly(const Rational& constant) {
  if (constant != 0) terms_.emplace(Monomial{}, constant);
}

Poly::Poly(const Var& v) { terms_.emplace(Monomial(v), Rational(1)); }

Poly::Poly(const Monomial& m, const Rational& coeff) {
  if (coeff != 0) terms_.emplace(m, coeff);
}

bool Poly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Poly::constant_term() const {
  if (auto it = terms_.find(Monomial{}); it != terms_.end()) return it->second;
  return Rational(0);
}

int Poly::degree() const noexcept {
  if (terms_.empty()) return -1;
  return static_cast<int>(terms_.begin()->first.degree());
}

std::vector<Var> Poly::variables() const {
  std::vector<Var> out;
  for (const auto& [m, c] : terms_) {
    for (const auto& [v, e] : m.factors()) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void Poly::add_term(const Monomial& m, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

Poly& Poly::operator+=(const Poly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

Poly& Poly::operator*=(const Poly& rhs) {
  *this = *this * rhs;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

Poly operator-(const Poly& a) {
  Poly out = a;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

bool Poly::operator==(const Poly& rhs) const {
  if (terms_.size() != rhs.terms_.size()) return false;
  auto it = rhs.terms_.begin();
  for (const auto& [m, c] : terms_) {
    if (!(m == it->first) || c != it->second) return false;
    ++it;
  }
  return true;
}

Poly add(const Poly& p, const Poly& q) { return p + q; }
Poly mul(const Poly& p, const Poly& q) { return p * q; }
Poly neg(const Poly& p) { return -p; }

Poly scale(const Rational& c, const Poly& p) {
  if (c == 0) return Poly{};
  Poly out;
  for (const auto& [m, coeff] : p.terms()) out.add_term(m, coeff * c);
  return out;
}

Poly pow(const Poly& p, unsigned k) {
  Poly result(1);
  Poly base = p;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return result;
}

Poly substitute(const Poly& p, const Substitution& map) {
  Poly out;
  std::map<std::pair<Var, Exponent>, Poly> powers;
  for (const auto& [m, c] : p.terms()) {
    Poly term(Monomial{}, c);
    Monomial kept;
    for (const auto& [v, e] : m.factors()) {
      auto it = map.find(v);
      if (it == map.end()) {
        kept = kept * Monomial(v, e);
        continue;
      }
      auto [pit, fresh] = powers.try_emplace({v, e});
      if (fresh) pit->second = pow(it->second, e);
      term *= pit->second;
    }
    if (!kept.is_one()) term *= Poly(kept, Rational(1));
    out += term;
  }
  return out;
}

namespace {

template <class Value, class Assignment>
Value evaluate(const Poly& p, const Assignment& assignment) {
  Value total(0);
  for (const auto& [m, c] : p.terms()) {
    Value term;
    if constexpr (std::is_floating_point_v<Value>) {
      term = c.get_d();
    } else {
      term = c;
    }
    for (const auto& [v, e] : m.factors()) {
      auto it = assignment.find(v);
      if (it == assignment.end()) {
        throw std::out_of_range("evaluation: no value assigned to " + to_string(v));
      }
      for (Exponent k = 0; k < e; ++k) term *= it->second;
    }
    total += term;
  }
  return total;
}

}  // namespace

Rational eval_rational(const Poly& p, const std::map<Var, Rational>& assignment) {
  return evaluate<Rational>(p, assignment);
}

double eval_float(const Poly& p, const std::map<Var, double>& assignment) {
  return evaluate<double>(p, assignment);
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << to_string(p); }

}  // namespace pfaff
