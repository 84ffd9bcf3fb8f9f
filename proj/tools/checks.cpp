#include <algorithm>
#include <numbers>
#include <random>
#include <set>
#include <stdexcept>

#include "cli.hpp"
#include "pfaff/determinant.hpp"
#include "pfaff/kernel.hpp"
#include "pfaff/matching.hpp"
#include "pfaff/pfaffian.hpp"
#include "pfaff/symmetry.hpp"

namespace pfaff::cli {

namespace {

const std::vector<std::string> kChecks = {
    "matchings",   "pf4-golden", "hook",         "skew-det",    "theorem1",
    "ssym",        "dihedral-invariance",        "theorem2",    "theorem3",
    "theorem4",    "lemma-g",    "det-examples", "trig-lemma1", "trig-lemma2"};

VerificationReport make(const std::string& check, std::size_t n, std::string mode) {
  VerificationReport r;
  r.check = check;
  r.n = static_cast<int>(n);
  r.mode = std::move(mode);
  return r;
}

std::size_t or_default(std::size_t value, std::size_t fallback) { return value ? value : fallback; }

std::size_t max_symmetry_degree(const CheckOptions& opts) {
  return std::min<std::size_t>(opts.expensive ? 8 : 6, opts.sym_cap);
}

TriangularArray<Rational> random_rational_array(std::size_t two_n, GeneratorMode mode,
                                                std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 5);
  return TriangularArray<Rational>::generate(two_n, mode, [&](int, int) {
    Rational r(num(rng), den(rng));
    r.canonicalize();
    return r;
  });
}

std::vector<VerificationReport> check_matchings(std::size_t n, const CheckOptions& opts) {
  const std::size_t two_n = 2 * n;
  if (two_n > std::min(opts.pfaff_cap, kHardPfaffCap)) return {};
  std::set<PfaffPermutation> seen;
  std::size_t count = 0;
  bool signs_ok = true;
  PfaffStream stream(two_n, opts.pfaff_cap);
  while (auto m = stream.next()) {
    ++count;
    if (two_n <= 10) {
      seen.insert(m->matching);
      signs_ok = signs_ok && m->sign == matching_sign(m->matching);
    }
  }
  auto r = make("matchings", n, "enumeration");
  const auto expected = double_factorial_odd(two_n);
  r.lhs = "count=" + std::to_string(count);
  r.rhs = "(2n-1)!!=" + std::to_string(expected);
  r.pass = count == expected && signs_ok && (two_n > 10 || seen.size() == count);
  if (two_n <= 8 && two_n <= opts.sym_cap) {
    std::set<PfaffPermutation> filtered;
    for_each_permutation(two_n, [&](const Permutation& p) {
      std::vector<PfaffPermutation::Pair> pairs;
      bool ok = true;
      for (std::size_t s = 0; s < n; ++s) {
        const int i = p.images()[2 * s];
        const int j = p.images()[2 * s + 1];
        ok = ok && i < j && (s == 0 || pairs.back().first < i);
        pairs.emplace_back(i, j);
      }
      if (ok) filtered.insert(PfaffPermutation(pairs));
    }, opts.sym_cap);
    r.mode = "enumeration+brute-force";
    r.pass = r.pass && filtered == seen;
    if (filtered != seen) r.witnesses.push_back("enumerated set differs from filtered S_2n");
  }
  if (!signs_ok) r.witnesses.push_back("incremental sign disagrees with inversion count");
  r.residual = r.pass ? 0.0 : 1.0;
  return {r};
}

std::vector<VerificationReport> check_pf4_golden() {
  const Poly pf4 = symbolic_pfaffian(4);
  const Poly golden = parse_poly("a(1,2)a(3,4) - a(1,3)a(2,4) + a(1,4)a(2,3)");
  auto r = make("pf4-golden", 2, "symbolic");
  r.lhs = to_compact_string(pf4);
  r.rhs = to_compact_string(golden);
  r.pass = pf4 == golden;
  r.residual = static_cast<double>((pf4 - golden).size());
  return {r};
}

std::vector<VerificationReport> check_hook(std::size_t n, const CheckOptions& opts) {
  const std::size_t two_n = 2 * n;
  if (two_n > 10) return {};
  const std::size_t cases = or_default(opts.cases, 20);
  std::vector<VerificationReport> out;
  for (const auto mode : {GeneratorMode::Symmetric, GeneratorMode::Skew}) {
    std::mt19937_64 rng(opts.seed);
    auto r = make("hook", n, to_string(mode));
    r.seed = opts.seed;
    std::size_t mismatches = 0;
    for (std::size_t c = 0; c < cases; ++c) {
      const auto arr = random_rational_array(two_n, mode, rng);
      const Rational direct = pfaffian_direct(arr);
      for (int s = 1; s <= static_cast<int>(two_n); ++s) {
        const Rational hooked = mode == GeneratorMode::Symmetric ? hook_expand_symmetric(arr, s)
                                                                 : hook_expand_skew(arr, s);
        if (hooked != direct) {
          if (mismatches++ == 0) {
            r.lhs = to_string(hooked);
            r.rhs = to_string(direct);
            r.witnesses.push_back("case " + std::to_string(c) + " hook " + std::to_string(s));
          }
        }
      }
    }
    r.pass = mismatches == 0;
    r.residual = static_cast<double>(mismatches);
    if (r.pass) r.lhs = r.rhs = std::to_string(cases) + " arrays, all hooks agree";
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<VerificationReport> check_skew_det(std::size_t n, const CheckOptions& opts) {
  const std::size_t two_n = 2 * n;
  if (two_n > 10) return {};
  const std::size_t cases = or_default(opts.cases, 20);
  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<int> entry(-9, 9);
  auto r = make("skew-det", n, "skew");
  r.seed = opts.seed;
  std::size_t mismatches = 0;
  for (std::size_t c = 0; c < cases; ++c) {
    const auto arr = TriangularArray<Rational>::generate(
        two_n, GeneratorMode::Skew, [&](int, int) { return Rational(entry(rng)); });
    const Rational pf = pfaffian_direct(arr);
    const Rational det = determinant(arr);
    if (det != pf * pf && mismatches++ == 0) {
      r.lhs = "det=" + to_string(det);
      r.rhs = "pf^2=" + to_string(Rational(pf * pf));
    }
  }
  r.pass = mismatches == 0;
  r.residual = static_cast<double>(mismatches);
  if (r.pass) r.lhs = r.rhs = std::to_string(cases) + " arrays, det == pf^2";
  return {r};
}

std::vector<VerificationReport> check_theorem1(std::size_t n, const CheckOptions& opts) {
  const std::size_t two_n = 2 * n;
  if (two_n > max_symmetry_degree(opts)) return {};
  const auto report = symmetry_group(symbolic_pfaffian(two_n), two_n, ActionMode::SymmetricGens,
                                     false, opts.exec, opts.sym_cap);
  auto r = make("theorem1", n, "symmetric");
  r.pass = report.equals_dihedral;
  r.lhs = "|Sym pf| = " + std::to_string(report.order);
  r.rhs = "|<rotation,reflection>| = " + std::to_string(dihedral_subgroup(two_n).size());
  r.residual = r.pass ? 0.0 : 1.0;
  if (report.witness) r.witnesses.push_back("witness " + to_string(*report.witness));
  return {r};
}

std::vector<VerificationReport> check_ssym(std::size_t n, const CheckOptions& opts) {
  const std::size_t two_n = 2 * n;
  if (two_n > max_symmetry_degree(opts)) return {};
  const Poly pf = symbolic_pfaffian(two_n);
  const Poly negated = -pf;
  auto r = make("ssym", n, "skew");
  std::size_t failures = 0;
  for_each_permutation(two_n, [&](const Permutation& p) {
    const Poly image = act(p, pf, ActionMode::SkewGens);
    if (!(image == (p.sign() > 0 ? pf : negated)) && failures++ == 0) {
      r.witnesses.push_back("witness " + to_string(p));
    }
  }, opts.sym_cap);
  r.pass = failures == 0;
  r.residual = static_cast<double>(failures);
  r.lhs = "act(p, pf) for all p in S_" + std::to_string(two_n);
  r.rhs = "sign(p) pf";
  return {r};
}

std::vector<VerificationReport> check_dihedral_invariance(std::size_t n, const CheckOptions&) {
  const std::size_t two_n = 2 * n;
  if (two_n > 10) return {};
  const Poly pf = symbolic_pfaffian(two_n);
  auto r = make("dihedral-invariance", n, "symmetric");
  std::size_t failures = 0;
  for (const auto& d : dihedral_subgroup(two_n)) {
    if (!(act(d, pf, ActionMode::SymmetricGens) == pf) && failures++ == 0) {
      r.witnesses.push_back("witness " + to_string(d));
    }
  }
  r.pass = failures == 0;
  r.residual = static_cast<double>(failures);
  r.lhs = "act(d, pf) for d in D";
  r.rhs = "pf";
  return {r};
}

std::vector<VerificationReport> check_theorem2(std::size_t n, const CheckOptions& opts) {
  const std::size_t two_n = 2 * n;
  if (two_n > 8) return {};
  std::vector<VerificationReport> symbolic;
  const auto xs = symbolic_positions(two_n);
  for (int s = 1; s <= static_cast<int>(two_n); ++s) {
    symbolic.push_back(verify_theorem2(Kernel::square_diff(), xs, s));
  }
  std::vector<VerificationReport> numeric;
  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  const std::size_t cases = or_default(opts.cases, 20);
  const double tol = opts.tol > 0 ? opts.tol : kTrigTolerance;
  for (std::size_t c = 0; c < cases; ++c) {
    std::vector<double> ys(two_n);
    for (auto& y : ys) y = angle(rng);
    for (int s = 1; s <= static_cast<int>(two_n); ++s) {
      numeric.push_back(verify_theorem2(Kernel::cosine(), ys, s, tol));
    }
  }
  auto a = summarize("theorem2", static_cast<int>(n), symbolic);
  a.mode = "square-diff all s";
  auto b = summarize("theorem2", static_cast<int>(n), numeric);
  b.mode = "cosine all s";
  b.seed = opts.seed;
  return {a, b};
}

std::vector<VerificationReport> check_theorem3(std::size_t n, const CheckOptions& opts) {
  if (2 * n > std::min(opts.pfaff_cap, kHardPfaffCap)) return {};
  const std::size_t symbolic_cap = opts.expensive ? kTheorem3SymbolicCap : 3;
  return {verify_theorem3(n, n <= symbolic_cap)};
}

std::vector<VerificationReport> check_theorem4(std::size_t n, const CheckOptions& opts) {
  if (n > kTheorem4Cap || 2 * n > opts.pfaff_cap) return {};
  const double tol = opts.tol > 0 ? opts.tol : cosine_pfaffian_tolerance(n);
  return {summarize("theorem4", static_cast<int>(n),
                    sweep_theorem4(n, or_default(opts.cases, 100), opts.seed, tol))};
}

std::vector<VerificationReport> check_lemma_g(std::size_t n, const CheckOptions& opts) {
  const std::size_t two_n = 2 * n;
  std::vector<VerificationReport> out;
  if (two_n <= max_symmetry_degree(opts)) {
    const auto report = sym_of_g(two_n, opts.sym_cap);
    auto r = make("lemma-g", n, "sym(g)");
    r.pass = report.equals_dihedral;
    r.lhs = "|Sym g| = " + std::to_string(report.order);
    r.rhs = "|<rotation,reflection>| = " + std::to_string(dihedral_subgroup(two_n).size());
    r.residual = r.pass ? 0.0 : 1.0;
    out.push_back(std::move(r));
  }
  if (two_n <= std::min<std::size_t>(8, opts.sym_cap)) {
    const auto dihedral = dihedral_subgroup(two_n);
    auto r = make("lemma-g", n, "run-classifier");
    std::size_t disagreements = 0;
    for_each_permutation(two_n, [&](const Permutation& p) {
      const bool classified = classify_runs(p).tag != RunTag::NotDihedral;
      const bool member = std::binary_search(dihedral.begin(), dihedral.end(), p);
      if (classified != member && disagreements++ == 0) {
        r.witnesses.push_back("witness " + to_string(p));
      }
    }, opts.sym_cap);
    r.pass = disagreements == 0;
    r.residual = static_cast<double>(disagreements);
    r.lhs = "classify_runs != NotDihedral";
    r.rhs = "membership in <rotation,reflection>";
    out.push_back(std::move(r));
  }
  return out;
}

TriangularArray<Poly> square_diff_matrix(std::size_t size) {
  return TriangularArray<Poly>::generate(size, GeneratorMode::Symmetric, [](int i, int j) {
    const Poly d = Poly::pos(i) - Poly::pos(j);
    return d * d;
  });
}

std::vector<VerificationReport> check_det_examples() {
  const Poly x1 = Poly::pos(1);
  const Poly x2 = Poly::pos(2);
  const Poly x3 = Poly::pos(3);
  struct Case {
    std::size_t size;
    Poly expected;
    std::string label;
  };
  const Poly cyc = (x1 - x2) * (x2 - x3) * (x3 - x1);
  const std::vector<Case> cases = {
      {2, -((x1 - x2) * (x1 - x2)), "det A_2 == -(x1-x2)^2"},
      {3, scale(2, cyc * cyc), "det A_3 == 2((x1-x2)(x2-x3)(x3-x1))^2"},
      {4, Poly(0), "det A_4 == 0"},
  };
  std::vector<VerificationReport> out;
  for (const auto& c : cases) {
    const Poly det = determinant(square_diff_matrix(c.size));
    auto r = make("det-examples", c.size, c.label);
    r.lhs = to_string(det);
    r.rhs = to_string(c.expected);
    r.pass = det == c.expected;
    r.residual = static_cast<double>((det - c.expected).size());
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<VerificationReport> check_trig_lemma1(const CheckOptions& opts) {
  const double tol = opts.tol > 0 ? opts.tol : kTrigLemma1Tolerance;
  return {summarize("trig-lemma1", 0, sweep_trig_lemma1(or_default(opts.cases, 1000), opts.seed, tol))};
}

std::vector<VerificationReport> check_trig_lemma2(const CheckOptions& opts) {
  const double tol = opts.tol > 0 ? opts.tol : kTrigTolerance;
  return {summarize("trig-lemma2", 0,
                    sweep_trig_lemma2(or_default(opts.cases, 1000), 8, opts.seed, tol))};
}

}  // namespace

const std::vector<std::string>& check_names() { return kChecks; }

bool check_uses_order(const std::string& name) {
  return name != "pf4-golden" && name != "det-examples" && name != "trig-lemma1" &&
         name != "trig-lemma2";
}

std::vector<VerificationReport> run_check(const std::string& name, std::size_t n,
                                          const CheckOptions& opts) {
  if (check_uses_order(name) && n < 1) throw std::invalid_argument("order n must be >= 1");
  if (name == "matchings") return check_matchings(n, opts);
  if (name == "pf4-golden") return check_pf4_golden();
  if (name == "hook") return check_hook(n, opts);
  if (name == "skew-det") return check_skew_det(n, opts);
  if (name == "theorem1") return check_theorem1(n, opts);
  if (name == "ssym") return check_ssym(n, opts);
  if (name == "dihedral-invariance") return check_dihedral_invariance(n, opts);
  if (name == "theorem2") return check_theorem2(n, opts);
  if (name == "theorem3") return check_theorem3(n, opts);
  if (name == "theorem4") return check_theorem4(n, opts);
  if (name == "lemma-g") return check_lemma_g(n, opts);
  if (name == "det-examples") return check_det_examples();
  if (name == "trig-lemma1") return check_trig_lemma1(opts);
  if (name == "trig-lemma2") return check_trig_lemma2(opts);
  throw std::invalid_argument("unknown check '" + name + "'");
}

std::pair<std::size_t, std::size_t> parse_order_range(const std::string& text) {
  const auto bad = [&] { throw std::invalid_argument("bad order range '" + text + "' (use a or a..b)"); };
  const auto to_size = [&](const std::string& s) -> std::size_t {
    if (s.empty() || s.size() > 3 || !std::all_of(s.begin(), s.end(), ::isdigit)) bad();
    return static_cast<std::size_t>(std::stoul(s));
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const auto v = to_size(text);
    return {v, v};
  }
  const auto lo = to_size(text.substr(0, dots));
  const auto hi = to_size(text.substr(dots + 2));
  if (lo > hi) bad();
  return {lo, hi};
}

}  // namespace pfaff::cli
