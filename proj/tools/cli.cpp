#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <variant>

#include "pfaff/determinant.hpp"
#include "pfaff/kernel.hpp"
#include "pfaff/matching.hpp"
#include "pfaff/pfaffian.hpp"
#include "pfaff/serialize.hpp"
#include "pfaff/symmetry.hpp"

namespace pfaff::cli {

namespace {

struct Global {
  std::string format = "text";
  bool parallel = false;
  bool expensive = false;
  std::size_t sym_cap = kDefaultSymCap;
  std::size_t pfaff_cap = kDefaultPfaffCap;

  bool json() const { return format == "json"; }
  Execution exec() const { return parallel ? Execution::Parallel : Execution::Sequential; }
};

// PF_CAP moves both enumeration caps; matchings stay hard-limited at 2n = 16.
void apply_cap_env(Global& g) {
  const char* raw = std::getenv("PF_CAP");
  if (raw == nullptr || *raw == '\0') return;
  char* end = nullptr;
  const unsigned long value = std::strtoul(raw, &end, 10);
  if (*end != '\0' || value == 0) {
    throw std::invalid_argument(std::string("PF_CAP must be a positive integer, got '") + raw + "'");
  }
  g.sym_cap = value;
  g.pfaff_cap = std::min<std::size_t>(value, kHardPfaffCap);
}

std::string number_text(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

std::string scalar_text(const Rational& v) { return to_string(v); }
std::string scalar_text(double v) { return number_text(v); }
std::string scalar_text(const Poly& v) { return to_compact_string(v); }

AnyArray load_array(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open array file '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw SchemaError("<root>", std::string("invalid JSON: ") + e.what());
  }
  return array_from_json(doc);
}

int cmd_eval(const Global& g, const std::string& path, const std::string& method, int hook,
             std::ostream& out) {
  const AnyArray any = load_array(path);
  return std::visit(
      [&](const auto& arr) {
        using Scalar = std::decay_t<decltype(arr.upper().front())>;
        if (arr.size() % 2 != 0) {
          throw std::invalid_argument("eval: pfaffian needs an even two_n, got " +
                                      std::to_string(arr.size()));
        }
        Scalar value;
        if (method == "direct") {
          value = pfaffian_direct(arr, g.exec(), g.pfaff_cap);
        } else if (method == "memo") {
          value = pfaffian_memoized(arr, g.pfaff_cap);
        } else if (method == "hook") {
          if (arr.size() > g.pfaff_cap) throw CapExceeded("eval", arr.size(), g.pfaff_cap);
          if (arr.mode() == GeneratorMode::Plain) {
            throw std::logic_error("hook expansion needs a symmetric or skew array, got plain");
          }
          value = arr.mode() == GeneratorMode::Symmetric ? hook_expand_symmetric(arr, hook)
                                                         : hook_expand_skew(arr, hook);
        } else {
          throw std::invalid_argument("unknown method '" + method + "'");
        }
        if (g.json()) {
          out << json{{"two_n", arr.size()},
                      {"mode", to_string(arr.mode())},
                      {"method", method},
                      {"value", scalar_to_json(value)}}
                     .dump()
              << '\n';
        } else {
          out << scalar_text(value) << '\n';
        }
        return 0;
      },
      any);
}

int cmd_det(const Global& g, const std::string& path, std::ostream& out) {
  const AnyArray any = load_array(path);
  return std::visit(
      [&](const auto& arr) {
        const auto value = determinant(arr);
        if (g.json()) {
          out << json{{"size", arr.size()},
                      {"mode", to_string(arr.mode())},
                      {"determinant", scalar_to_json(value)}}
                     .dump()
              << '\n';
        } else {
          out << scalar_text(value) << '\n';
        }
        return 0;
      },
      any);
}

int cmd_expand(const Global& g, std::size_t two_n, const std::string& kernel, std::ostream& out) {
  if (two_n % 2 != 0) throw std::invalid_argument("expand: two_n must be even");
  if (two_n > g.pfaff_cap) throw CapExceeded("expand", two_n, g.pfaff_cap);
  Poly pf;
  if (kernel == "generic") {
    pf = symbolic_pfaffian(two_n, g.exec());
  } else if (kernel == "square-diff") {
    pf = pfaffian_direct(kernel_array(Kernel::square_diff(), symbolic_positions(two_n)), g.exec(),
                         g.pfaff_cap);
  } else {
    throw std::invalid_argument("unknown kernel '" + kernel + "' (generic|square-diff)");
  }
  if (g.json()) {
    out << json{{"two_n", two_n}, {"kernel", kernel}, {"terms", pf.size()}, {"poly", to_json(pf)}}
               .dump()
        << '\n';
  } else {
    out << to_compact_string(pf) << '\n';
  }
  return 0;
}

int cmd_matchings(const Global& g, std::size_t two_n, std::ostream& out) {
  PfaffStream stream(two_n, g.pfaff_cap);
  if (g.json()) out << "[\n";
  bool first = true;
  while (auto m = stream.next()) {
    if (g.json()) {
      if (!first) out << ",\n";
      out << json{{"pairs", to_json(m->matching)}, {"sign", m->sign}}.dump();
    } else {
      out << to_string(m->matching) << ' ' << (m->sign > 0 ? "+1" : "-1") << '\n';
    }
    first = false;
  }
  if (g.json()) out << (first ? "]\n" : "\n]\n");
  return 0;
}

int cmd_sym(const Global& g, std::size_t pfaffian_order, std::size_t g_order,
            const std::string& array_path, const std::string& mode_text, bool is_signed,
            bool elements, std::ostream& out) {
  const int targets = (pfaffian_order > 0) + (g_order > 0) + !array_path.empty();
  if (targets != 1) {
    throw std::invalid_argument("sym: give exactly one of --pfaffian, --g, --array");
  }
  GroupReport report;
  std::string target;
  if (g_order > 0) {
    report = sym_of_g(g_order, g.sym_cap);
    target = "g_" + std::to_string(g_order);
  } else {
    Poly poly;
    std::size_t degree = 0;
    if (pfaffian_order > 0) {
      if (pfaffian_order % 2 != 0) throw std::invalid_argument("sym: --pfaffian needs an even order");
      if (pfaffian_order > g.sym_cap) throw CapExceeded("sym", pfaffian_order, g.sym_cap);
      poly = symbolic_pfaffian(pfaffian_order, g.exec());
      degree = pfaffian_order;
      target = "pf_" + std::to_string(pfaffian_order);
    } else {
      const AnyArray any = load_array(array_path);
      const auto* arr = std::get_if<TriangularArray<Poly>>(&any);
      if (arr == nullptr) {
        const auto* exact = std::get_if<TriangularArray<Rational>>(&any);
        if (exact == nullptr) throw std::invalid_argument("sym: array entries must be exact");
        poly = Poly(pfaffian_direct(*exact, g.exec(), g.pfaff_cap));
        degree = exact->size();
      } else {
        if (arr->size() % 2 != 0) throw std::invalid_argument("sym: array needs an even two_n");
        poly = pfaffian_direct(*arr, g.exec(), g.pfaff_cap);
        degree = arr->size();
      }
      target = "pf(" + array_path + ")";
    }
    report = symmetry_group(poly, degree, parse_action_mode(mode_text), is_signed, g.exec(),
                            g.sym_cap);
  }
  if (g.json()) {
    json doc = to_json(report, elements);
    doc["target"] = target;
    doc["mode"] = g_order > 0 ? "positions" : mode_text;
    doc["signed"] = is_signed;
    out << doc.dump() << '\n';
  } else {
    out << (is_signed ? "SSym " : "Sym ") << target << " in S_" << report.degree
        << ": order " << report.order << ", equals <rotation,reflection>: "
        << (report.equals_dihedral ? "yes" : "no") << '\n';
    if (report.witness) out << "witness " << to_string(*report.witness) << '\n';
    if (elements) {
      for (const auto& p : report.elements) out << to_string(p) << '\n';
    }
  }
  return 0;
}

int cmd_verify(const Global& g, const std::string& which, const std::string& range,
               const CheckOptions& base, std::ostream& out, std::ostream& err) {
  const auto [lo, hi] = parse_order_range(range);
  std::vector<std::string> names;
  if (which == "all") {
    names = check_names();
  } else {
    names.push_back(which);
  }
  CheckOptions opts = base;
  opts.expensive = g.expensive;
  opts.exec = g.exec();
  opts.sym_cap = g.sym_cap;
  opts.pfaff_cap = g.pfaff_cap;

  bool all_pass = true;
  std::size_t emitted = 0;
  for (const auto& name : names) {
    std::vector<std::size_t> orders;
    if (check_uses_order(name)) {
      for (std::size_t n = lo; n <= hi; ++n) orders.push_back(n);
    } else {
      orders.push_back(0);
    }
    for (std::size_t n : orders) {
      const auto reports = run_check(name, n, opts);
      if (reports.empty() && which != "all") {
        err << "note: " << name << " skipped at n=" << n << " (outside supported range"
            << (g.expensive ? "" : "; try --expensive") << ")\n";
      }
      for (const auto& r : reports) {
        ++emitted;
        all_pass = all_pass && r.pass;
        if (g.json()) {
          out << to_json(r).dump() << '\n';
        } else {
          out << (r.pass ? "PASS " : "FAIL ") << r.check;
          if (check_uses_order(name)) out << " n=" << r.n;
          out << " [" << r.mode << "] residual=" << number_text(r.residual);
          if (r.seed) out << " seed=" << *r.seed;
          out << '\n';
          if (!r.pass) {
            out << "    lhs: " << r.lhs << "\n    rhs: " << r.rhs << '\n';
            for (const auto& w : r.witnesses) out << "    " << w << '\n';
          }
        }
      }
    }
  }
  if (emitted == 0) {
    err << "no checks ran for n in " << range << '\n';
    return 1;
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact pfaffians, symmetry groups and identity checks", "pf"};
  app.require_subcommand(1);
  app.fallthrough();

  Global g;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_flag("--parallel", g.parallel, "Enable parallel enumeration paths");
  app.add_flag("--expensive", g.expensive, "Include 2n=8 symmetry searches and n=4 symbolic checks");

  std::string path;
  std::string method = "direct";
  int hook = 1;
  auto* eval = app.add_subcommand("eval", "Pfaffian of a triangular array file");
  eval->add_option("file", path, "Array JSON file")->required();
  eval->add_option("--method", method, "direct | hook | memo")
      ->check(CLI::IsMember({"direct", "hook", "memo"}))
      ->capture_default_str();
  eval->add_option("--hook", hook, "Hook index for --method hook")->capture_default_str();

  std::size_t two_n = 0;
  std::string kernel = "generic";
  auto* expand = app.add_subcommand("expand", "Symbolic pfaffian of order two_n");
  expand->add_option("two_n", two_n, "Even order")->required();
  expand->add_option("--kernel", kernel, "generic | square-diff")->capture_default_str();

  auto* matchings = app.add_subcommand("matchings", "List Pfaff permutations with signs");
  matchings->add_option("two_n", two_n, "Even order")->required();

  auto* det = app.add_subcommand("det", "Determinant of the completed matrix of an array file");
  det->add_option("file", path, "Array JSON file")->required();

  std::size_t pf_order = 0;
  std::size_t g_order = 0;
  std::string mode = "symmetric";
  bool is_signed = false;
  bool elements = false;
  auto* sym = app.add_subcommand("sym", "Brute-force symmetry group");
  sym->add_option("--pfaffian", pf_order, "Generic pfaffian of this even order");
  sym->add_option("--g", g_order, "Cycle product g of this even order (position action)");
  sym->add_option("--array", path, "Pfaffian of an array file");
  sym->add_option("--mode", mode, "symmetric | skew")
      ->check(CLI::IsMember({"symmetric", "skew"}))
      ->capture_default_str();
  sym->add_flag("--signed", is_signed, "Compute SSym (fixed up to sign)");
  sym->add_flag("--elements", elements, "List every element");

  std::string which;
  std::string range = "1..3";
  CheckOptions check_opts;
  auto* verify = app.add_subcommand("verify", "Run identity checks");
  std::vector<std::string> allowed = check_names();
  allowed.emplace_back("all");
  verify->add_option("check", which, "Check name or 'all'")
      ->required()
      ->check(CLI::IsMember(allowed));
  verify->add_option("--n", range, "Order range a..b")->capture_default_str();
  verify->add_option("--seed", check_opts.seed, "RNG seed")->capture_default_str();
  verify->add_option("--cases", check_opts.cases, "Random cases per check (0: default)");
  verify->add_option("--tol", check_opts.tol, "Tolerance override for numeric checks");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    apply_cap_env(g);
    if (*eval) return cmd_eval(g, path, method, hook, out);
    if (*expand) return cmd_expand(g, two_n, kernel, out);
    if (*matchings) return cmd_matchings(g, two_n, out);
    if (*det) return cmd_det(g, path, out);
    if (*sym) return cmd_sym(g, pf_order, g_order, path, mode, is_signed, elements, out);
    if (*verify) return cmd_verify(g, which, range, check_opts, out, err);
  } catch (const SchemaError& e) {
    err << "pf: " << e.what() << '\n';
    return 2;
  } catch (const CapExceeded& e) {
    err << "pf: " << e.what() << " (raise with PF_CAP, hard limit 16 for matchings)\n";
    return 3;
  } catch (const std::exception& e) {
    err << "pf: " << e.what() << '\n';
    return 2;
  }
  return 1;
}

}  // namespace pfaff::cli
