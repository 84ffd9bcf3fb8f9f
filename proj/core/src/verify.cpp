#include "pfaff/verify.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include "pfaff/limits.hpp"
#include "pfaff/pfaffian.hpp"

namespace pfaff {

namespace {

std::string num(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

double exact_residual(const Poly& lhs, const Poly& rhs) {
  return static_cast<double>((lhs - rhs).size());
}

template <class Position>
std::vector<Position> collapse_positions(const std::vector<Position>& xs, int s) {
  std::vector<Position> out = xs;
  const auto two_n = static_cast<int>(xs.size());
  if (s < two_n) {
    out[static_cast<std::size_t>(s)] = xs[static_cast<std::size_t>(s - 1)];
  } else {
    out[0] = xs[static_cast<std::size_t>(two_n - 1)];
  }
  return out;
}

template <class Position>
std::vector<Position> drop_collapsed_pair(const std::vector<Position>& xs, int s) {
  const auto two_n = static_cast<int>(xs.size());
  const int partner = s < two_n ? s + 1 : 1;
  std::vector<Position> out;
  for (int k = 1; k <= two_n; ++k) {
    if (k != s && k != partner) out.push_back(xs[static_cast<std::size_t>(k - 1)]);
  }
  return out;
}

void check_collapse_args(std::size_t two_n, int s) {
  if (two_n < 2 || two_n % 2 != 0) {
    throw std::invalid_argument("verify_theorem2: needs an even number of positions");
  }
  if (s < 1 || s > static_cast<int>(two_n)) {
    throw std::out_of_range("verify_theorem2: s=" + std::to_string(s) + " outside 1.." +
                            std::to_string(two_n));
  }
}

void check_kernel_preconditions(const Kernel& k) {
  if (!k.is_symmetric()) {
    throw std::invalid_argument("kernel " + k.name() + " is not symmetric: psi(x,y) != psi(y,x)");
  }
  if (!k.is_translation_invariant()) {
    throw std::invalid_argument("kernel " + k.name() +
                                " is not translation invariant: psi(x+z,y+z) != psi(x,y)");
  }
}

double alternating_sum(const std::vector<double>& xs, int first_sign) {
  double total = 0.0;
  int sign = first_sign;
  for (double x : xs) {
    total += sign * x;
    sign = -sign;
  }
  return total;
}

}  // namespace

double cosine_pfaffian_tolerance(std::size_t n) { return n <= 5 ? 1e-12 : 1e-10; }

Rational square_diff_constant(std::size_t n) {
  Rational c(-1);
  for (std::size_t k = 1; k < n; ++k) c *= -2;
  return c;
}

Rational square_diff_value_at_integers(std::size_t n) {
  return -square_diff_constant(n) * static_cast<long>(2 * n - 1);
}

VerificationReport verify_theorem3(std::size_t n, bool symbolic) {
  if (n < 1) throw std::invalid_argument("verify_theorem3: n must be >= 1");
  VerificationReport report;
  report.check = "theorem3";
  report.n = static_cast<int>(n);
  report.mode = symbolic ? "symbolic+numeric" : "numeric";
  const Kernel k = Kernel::square_diff();
  const std::size_t two_n = 2 * n;

  bool pass = true;
  double residual = 0.0;
  if (symbolic) {
    if (n > kTheorem3SymbolicCap) throw CapExceeded("verify_theorem3", n, kTheorem3SymbolicCap);
    const Poly lhs = pfaffian_direct(kernel_array(k, symbolic_positions(two_n)));
    const Poly rhs = scale(square_diff_constant(n), g_poly(two_n));
    residual += exact_residual(lhs, rhs);
    pass = pass && lhs == rhs;
    report.lhs = to_string(lhs);
    report.rhs = to_string(rhs);
  }

  std::vector<Rational> integers;
  for (std::size_t k2 = 1; k2 <= two_n; ++k2) integers.emplace_back(static_cast<long>(k2));
  const Rational value = pfaffian_direct(kernel_array(k, integers));
  const Rational expected = square_diff_value_at_integers(n);
  const Rational gap = value - expected;
  residual += std::abs(gap.get_d());
  pass = pass && gap == 0;
  const std::string at = "pf(1..2n) = " + to_string(value);
  const std::string at_expected = "pf(1..2n) = " + to_string(expected);
  report.lhs = report.lhs.empty() ? at : report.lhs + " | " + at;
  report.rhs = report.rhs.empty() ? at_expected : report.rhs + " | " + at_expected;

  report.pass = pass;
  report.residual = residual;
  return report;
}

VerificationReport verify_theorem2(const Kernel& k, const std::vector<Poly>& xs, int s) {
  check_collapse_args(xs.size(), s);
  check_kernel_preconditions(k);
  const Poly lhs = pfaffian_direct(kernel_array(k, collapse_positions(xs, s)));
  const Poly rhs =
      scale(k.collapse_constant(), pfaffian_direct(kernel_array(k, drop_collapsed_pair(xs, s))));
  VerificationReport report;
  report.check = "theorem2";
  report.n = static_cast<int>(xs.size() / 2);
  report.mode = k.name() + " s=" + std::to_string(s);
  report.pass = lhs == rhs;
  report.residual = exact_residual(lhs, rhs);
  report.lhs = to_string(lhs);
  report.rhs = to_string(rhs);
  return report;
}

VerificationReport verify_theorem2(const Kernel& k, const std::vector<double>& xs, int s,
                                   double tol) {
  check_collapse_args(xs.size(), s);
  check_kernel_preconditions(k);
  const double lhs = pfaffian_direct(kernel_array(k, collapse_positions(xs, s)));
  const double c = k.collapse_constant().get_d();
  const double rhs = c * pfaffian_direct(kernel_array(k, drop_collapsed_pair(xs, s)));
  VerificationReport report;
  report.check = "theorem2";
  report.n = static_cast<int>(xs.size() / 2);
  report.mode = k.name() + " s=" + std::to_string(s);
  report.residual = std::abs(lhs - rhs);
  report.pass = report.residual <= tol;
  report.lhs = num(lhs);
  report.rhs = num(rhs);
  return report;
}

VerificationReport verify_theorem4(std::size_t n, const std::vector<double>& xs, double tol) {
  if (n < 1) throw std::invalid_argument("verify_theorem4: n must be >= 1");
  if (n > kTheorem4Cap) throw CapExceeded("verify_theorem4", n, kTheorem4Cap);
  if (xs.size() != 2 * n) {
    throw std::invalid_argument("verify_theorem4: expected " + std::to_string(2 * n) +
                                " positions, got " + std::to_string(xs.size()));
  }
  const double lhs = pfaffian_direct(kernel_array(Kernel::cosine(), xs));
  const double rhs = std::cos(alternating_sum(xs, +1));
  VerificationReport report;
  report.check = "theorem4";
  report.n = static_cast<int>(n);
  report.mode = "cosine";
  report.residual = std::abs(lhs - rhs);
  report.pass = report.residual <= tol;
  report.lhs = num(lhs);
  report.rhs = num(rhs);
  return report;
}

VerificationReport verify_trig_lemma1(double alpha, double beta, double theta, double tol) {
  const double lhs =
      -std::cos(alpha) * std::cos(theta - alpha) + std::cos(beta) * std::cos(theta - beta);
  const double rhs = std::sin(alpha - beta) * std::sin(alpha + beta - theta);
  VerificationReport report;
  report.check = "trig_lemma1";
  report.mode = "numeric";
  report.residual = std::abs(lhs - rhs);
  report.pass = report.residual <= tol;
  report.lhs = num(lhs);
  report.rhs = num(rhs);
  return report;
}

VerificationReport verify_trig_lemma2(const std::vector<double>& alphas, double tol) {
  const std::size_t n = alphas.size();
  if (n == 0) throw std::invalid_argument("verify_trig_lemma2: needs at least one angle");

  // signed[j-1] = (-1)^j alpha_j
  std::vector<double> signed_alpha(n);
  for (std::size_t j = 1; j <= n; ++j) {
    signed_alpha[j - 1] = (j % 2 == 0 ? 1.0 : -1.0) * alphas[j - 1];
  }
  double sine_sum = 0.0;
  double cosine_sum = 0.0;
  for (std::size_t i = 1; i <= n; ++i) {
    double before = 0.0;
    double after = 0.0;
    for (std::size_t j = 1; j < i; ++j) before += signed_alpha[j - 1];
    for (std::size_t j = i + 1; j <= n; ++j) after += signed_alpha[j - 1];
    const double inner = std::sin(before - after);
    const double sign = i % 2 == 0 ? 1.0 : -1.0;
    sine_sum += sign * std::sin(alphas[i - 1]) * inner;
    cosine_sum += sign * std::cos(alphas[i - 1]) * inner;
  }
  double total = 0.0;
  for (double v : signed_alpha) total += v;
  const double stated_cosine = n % 2 == 1 ? 0.0 : -std::sin(total);

  VerificationReport report;
  report.check = "trig_lemma2";
  report.n = static_cast<int>(n);
  report.mode = "numeric";
  const double sine_gap = std::abs(sine_sum);
  const double cosine_gap = std::abs(cosine_sum - stated_cosine);
  report.residual = std::max(sine_gap, cosine_gap);
  report.pass = report.residual <= tol;
  report.lhs = "sine_sum=" + num(sine_sum) + " cosine_sum=" + num(cosine_sum);
  report.rhs = "sine_sum=0 cosine_sum=" + num(stated_cosine);
  if (sine_gap > tol) report.witnesses.push_back("sine identity off by " + num(sine_gap));
  if (cosine_gap > tol) {
    report.witnesses.push_back("cosine identity off by " + num(cosine_gap) +
                               "; sin(sum (-1)^j alpha_j) = " + num(std::sin(total)));
  }
  return report;
}

std::vector<VerificationReport> sweep_theorem4(std::size_t n, std::size_t cases, std::uint64_t seed,
                                               double tol) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  std::vector<VerificationReport> out;
  out.reserve(cases);
  for (std::size_t c = 0; c < cases; ++c) {
    std::vector<double> xs(2 * n);
    for (auto& x : xs) x = angle(rng);
    auto report = verify_theorem4(n, xs, tol);
    report.seed = seed;
    out.push_back(std::move(report));
  }
  return out;
}

std::vector<VerificationReport> sweep_trig_lemma1(std::size_t cases, std::uint64_t seed,
                                                  double tol) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  std::vector<VerificationReport> out;
  out.reserve(cases);
  for (std::size_t c = 0; c < cases; ++c) {
    const double a = angle(rng);
    const double b = angle(rng);
    const double t = angle(rng);
    auto report = verify_trig_lemma1(a, b, t, tol);
    report.seed = seed;
    out.push_back(std::move(report));
  }
  return out;
}

std::vector<VerificationReport> sweep_trig_lemma2(std::size_t cases, std::size_t max_len,
                                                  std::uint64_t seed, double tol) {
  if (max_len < 1) throw std::invalid_argument("sweep_trig_lemma2: max_len must be >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  std::uniform_int_distribution<std::size_t> length(1, max_len);
  std::vector<VerificationReport> out;
  out.reserve(cases);
  for (std::size_t c = 0; c < cases; ++c) {
    std::vector<double> alphas(length(rng));
    for (auto& a : alphas) a = angle(rng);
    auto report = verify_trig_lemma2(alphas, tol);
    report.seed = seed;
    out.push_back(std::move(report));
  }
  return out;
}

VerificationReport summarize(const std::string& check, int n,
                             const std::vector<VerificationReport>& reports) {
  VerificationReport out;
  out.check = check;
  out.n = n;
  out.pass = true;
  if (reports.empty()) return out;
  out.mode = reports.front().mode;
  out.seed = reports.front().seed;
  std::size_t worst = 0;
  std::size_t failures = 0;
  for (std::size_t k = 0; k < reports.size(); ++k) {
    const auto& r = reports[k];
    if (r.residual > reports[worst].residual) worst = k;
    if (!r.pass) {
      out.pass = false;
      if (failures++ < 5) {
        std::string line = "case " + std::to_string(k) + " (n=" + std::to_string(r.n) +
                           "): lhs " + r.lhs + " rhs " + r.rhs;
        for (const auto& w : r.witnesses) line += "; " + w;
        out.witnesses.push_back(std::move(line));
      }
    }
  }
  if (failures > 0) {
    out.witnesses.push_back(std::to_string(failures) + " of " + std::to_string(reports.size()) +
                            " cases failed");
  }
  out.residual = reports[worst].residual;
  out.lhs = reports[worst].lhs;
  out.rhs = reports[worst].rhs;
  return out;
}

}  // namespace pfaff
