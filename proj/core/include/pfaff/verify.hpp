#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pfaff/kernel.hpp"
#include "pfaff/poly.hpp"

namespace pfaff {

/// Outcome of one identity check. Both sides are kept so a failure can be
/// read off directly. For exact checks the residual is the number of terms in
/// lhs - rhs (0 on success).
struct VerificationReport {
  std::string check;
  int n = 0;
  std::string mode;
  bool pass = false;
  double residual = 0.0;
  std::string lhs;
  std::string rhs;
  std::optional<std::uint64_t> seed;
  std::vector<std::string> witnesses;
};

inline constexpr double kTrigTolerance = 1e-12;
inline constexpr double kTrigLemma1Tolerance = 1e-13;
inline constexpr std::size_t kTheorem3SymbolicCap = 4;
inline constexpr std::size_t kTheorem4Cap = 8;

/// Default residual bound for the cosine pfaffian: 1e-12 up to n = 5, 1e-10 above.
double cosine_pfaffian_tolerance(std::size_t n);

/// -(-2)^{n-1}
Rational square_diff_constant(std::size_t n);

/// (-2)^{n-1}(2n-1)
Rational square_diff_value_at_integers(std::size_t n);

/// pf((x_i - x_j)^2) == -(-2)^{n-1} g_{2n} symbolically (skipped when
/// symbolic is false) and pf at x = (1..2n) == (-2)^{n-1}(2n-1).
VerificationReport verify_theorem3(std::size_t n, bool symbolic = true);

/// Collapse identity: with x_{s+1} := x_s (x_1 := x_{2n} when s = 2n),
/// pf_{2n} == psi(0,0) * pf_{2n-2} on the positions other than s, s+1.
/// Exact for symbolic kernels.
VerificationReport verify_theorem2(const Kernel& k, const std::vector<Poly>& xs, int s);
/// Numeric variant; Cosine only meaningful here. Tolerance 1e-12.
VerificationReport verify_theorem2(const Kernel& k, const std::vector<double>& xs, int s,
                                   double tol = kTrigTolerance);

/// |pf(cos(x_i - x_j)) - cos(x_1 - x_2 + ... - x_{2n})| <= tol.
VerificationReport verify_theorem4(std::size_t n, const std::vector<double>& xs, double tol);

/// -cos a cos(t-a) + cos b cos(t-b) == sin(a-b) sin(a+b-t).
VerificationReport verify_trig_lemma1(double alpha, double beta, double theta,
                                      double tol = kTrigLemma1Tolerance);

/// The two alternating sums of sin(alpha_i) resp. cos(alpha_i) against
/// sin(sum_{j<i} (-1)^j alpha_j - sum_{j>i} (-1)^j alpha_j): the sine sum is 0, the
/// cosine sum is 0 for odd n and -sin(sum_j (-1)^j alpha_j) for even n.
VerificationReport verify_trig_lemma2(const std::vector<double>& alphas,
                                      double tol = kTrigTolerance);

/// Random sweeps with a seeded std::mt19937_64. Each returns one report per case.
std::vector<VerificationReport> sweep_theorem4(std::size_t n, std::size_t cases,
                                               std::uint64_t seed, double tol);
std::vector<VerificationReport> sweep_trig_lemma1(std::size_t cases, std::uint64_t seed,
                                                  double tol = kTrigLemma1Tolerance);
std::vector<VerificationReport> sweep_trig_lemma2(std::size_t cases, std::size_t max_len,
                                                  std::uint64_t seed,
                                                  double tol = kTrigTolerance);

/// Folds a batch into one report: pass iff all pass, worst residual, first
/// failing case kept as witness.
VerificationReport summarize(const std::string& check, int n,
                             const std::vector<VerificationReport>& reports);

}  // namespace pfaff
