#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "pfaff/limits.hpp"
#include "pfaff/verify.hpp"

namespace pfaff::cli {

/// Options shared by every `verify` check.
struct CheckOptions {
  std::uint64_t seed = 1;
  std::size_t cases = 0;  // 0: per-check default
  double tol = 0.0;       // 0: per-check default
  bool expensive = false;
  Execution exec = Execution::Sequential;
  std::size_t sym_cap = kDefaultSymCap;
  std::size_t pfaff_cap = kDefaultPfaffCap;
};

/// Names accepted by `pf verify`, in the order `verify all` runs them.
const std::vector<std::string>& check_names();

/// Whether the named check depends on the order n at all.
bool check_uses_order(const std::string& name);

/// Runs one check at order n (ignored by order-free checks). Returns an empty
/// vector when n lies outside what the check supports under the options.
std::vector<VerificationReport> run_check(const std::string& name, std::size_t n,
                                          const CheckOptions& opts);

/// Parses "a..b" or "a" into an inclusive range. Throws std::invalid_argument.
std::pair<std::size_t, std::size_t> parse_order_range(const std::string& text);

/// Entry point behind the `pf` executable. args excludes the program name.
/// Exit code 0 iff the command succeeded and every requested check passed.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pfaff::cli
