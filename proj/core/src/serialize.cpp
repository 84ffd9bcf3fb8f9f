#include "pfaff/serialize.hpp"

#include <optional>
#include <set>

namespace pfaff {

json to_json(const Permutation& p) { return json(p.images()); }

Permutation permutation_from_json(const json& j) {
  if (!j.is_array()) throw SchemaError("permutation", "expected an array of 1-based images");
  std::vector<int> images;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw SchemaError("permutation", "images must be integers");
    images.push_back(v.get<int>());
  }
  try {
    return Permutation(std::move(images));
  } catch (const std::invalid_argument& e) {
    throw SchemaError("permutation", e.what());
  }
}

json to_json(const PfaffPermutation& m) {
  json out = json::array();
  for (const auto& [i, j] : m.pairs()) out.push_back({i, j});
  return out;
}

PfaffPermutation matching_from_json(const json& j) {
  if (!j.is_array()) throw SchemaError("matching", "expected a list of [i,j] pairs");
  std::vector<PfaffPermutation::Pair> pairs;
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() ||
        !p[1].is_number_integer()) {
      throw SchemaError("matching", "each pair must be [i,j] with integer entries");
    }
    pairs.emplace_back(p[0].get<int>(), p[1].get<int>());
  }
  try {
    return PfaffPermutation(std::move(pairs));
  } catch (const std::invalid_argument& e) {
    throw SchemaError("matching", e.what());
  }
}

json to_json(const Poly& p) {
  json out = json::array();
  for (const auto& [m, c] : p.terms()) {
    json vars = json::array();
    for (const auto& [v, e] : m.factors()) {
      if (v.is_pos()) {
        vars.push_back({"x", v.i, e});
      } else {
        vars.push_back({"a", v.i, v.j, e});
      }
    }
    out.push_back({{"coeff", to_string(c)}, {"vars", vars}});
  }
  return out;
}

Poly poly_from_json(const json& j) {
  if (!j.is_array()) throw SchemaError("poly", "expected a list of term records");
  Poly out;
  for (std::size_t t = 0; t < j.size(); ++t) {
    const auto& term = j[t];
    const std::string where = "poly[" + std::to_string(t) + "]";
    if (!term.is_object()) throw SchemaError(where, "term must be an object");
    if (!term.contains("coeff") || !term["coeff"].is_string()) {
      throw SchemaError(where + ".coeff", "expected a rational string \"p/q\"");
    }
    if (!term.contains("vars") || !term["vars"].is_array()) {
      throw SchemaError(where + ".vars", "expected a list of variable records");
    }
    Rational coeff;
    try {
      coeff = parse_rational(term["coeff"].get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw SchemaError(where + ".coeff", e.what());
    }
    std::vector<Monomial::Factor> factors;
    for (const auto& rec : term["vars"]) {
      const auto bad = [&](const std::string& why) { throw SchemaError(where + ".vars", why); };
      if (!rec.is_array() || rec.empty() || !rec[0].is_string()) bad("malformed variable record");
      const auto family = rec[0].get<std::string>();
      for (std::size_t k = 1; k < rec.size(); ++k) {
        if (!rec[k].is_number_integer()) bad("indices and exponents must be integers");
      }
      try {
        if (family == "x" && rec.size() == 3) {
          const int e = rec[2].get<int>();
          if (e < 1) bad("exponent must be positive");
          factors.emplace_back(Var::pos(rec[1].get<int>()), static_cast<Exponent>(e));
        } else if (family == "a" && rec.size() == 4) {
          const int e = rec[3].get<int>();
          if (e < 1) bad("exponent must be positive");
          factors.emplace_back(Var::gen(rec[1].get<int>(), rec[2].get<int>()),
                               static_cast<Exponent>(e));
        } else {
          bad("expected [\"x\", i, e] or [\"a\", i, j, e]");
        }
      } catch (const std::invalid_argument& e) {
        bad(e.what());
      }
    }
    out.add_term(Monomial::from_factors(std::move(factors)), coeff);
  }
  return out;
}

json scalar_to_json(const Rational& v) { return to_string(v); }
json scalar_to_json(double v) { return v; }
json scalar_to_json(const Poly& v) { return to_json(v); }

namespace {

enum class Kind { Exact, Float, Symbolic };

struct Cell {
  Kind kind = Kind::Exact;
  Rational exact;
  double real = 0.0;
  Poly symbolic;
};

Cell parse_cell(const json& v, const std::string& key) {
  Cell cell;
  if (v.is_number_integer()) {
    cell.exact = Rational(std::to_string(v.get<long long>()));
    return cell;
  }
  if (v.is_number_float()) {
    cell.kind = Kind::Float;
    cell.real = v.get<double>();
    return cell;
  }
  if (v.is_string()) {
    const auto text = v.get<std::string>();
    try {
      cell.exact = parse_rational(text);
      return cell;
    } catch (const std::invalid_argument&) {
    }
    try {
      cell.kind = Kind::Symbolic;
      cell.symbolic = parse_poly(text);
      return cell;
    } catch (const std::invalid_argument& e) {
      throw SchemaError(key, std::string("not a rational or polynomial: ") + e.what());
    }
  }
  if (v.is_array()) {
    cell.kind = Kind::Symbolic;
    try {
      cell.symbolic = poly_from_json(v);
    } catch (const SchemaError& e) {
      throw SchemaError(key, e.what());
    }
    return cell;
  }
  throw SchemaError(key, "unsupported scalar type " + std::string(v.type_name()));
}

}  // namespace

AnyArray array_from_json(const json& j) {
  if (!j.is_object()) throw SchemaError("<root>", "expected an object");
  if (!j.contains("two_n")) throw SchemaError("two_n", "missing");
  if (!j["two_n"].is_number_unsigned() && !j["two_n"].is_number_integer()) {
    throw SchemaError("two_n", "expected a non-negative integer");
  }
  const auto size_signed = j["two_n"].get<long long>();
  if (size_signed < 0 || size_signed > 64) throw SchemaError("two_n", "out of range 0..64");
  const auto size = static_cast<std::size_t>(size_signed);

  GeneratorMode mode = GeneratorMode::Symmetric;
  if (j.contains("mode")) {
    if (!j["mode"].is_string()) throw SchemaError("mode", "expected a string");
    try {
      mode = parse_generator_mode(j["mode"].get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw SchemaError("mode", e.what());
    }
  }
  for (const auto& [key, value] : j.items()) {
    if (key != "two_n" && key != "mode" && key != "entries") {
      throw SchemaError(key, "unknown key");
    }
  }
  if (!j.contains("entries") || !j["entries"].is_object()) {
    throw SchemaError("entries", "expected an object keyed by \"i,j\"");
  }
  const auto& entries = j["entries"];

  std::set<std::string> expected;
  for (std::size_t a = 1; a <= size; ++a) {
    for (std::size_t b = a + 1; b <= size; ++b) expected.insert(std::to_string(a) + "," + std::to_string(b));
  }
  for (const auto& [key, value] : entries.items()) {
    if (!expected.count(key)) {
      throw SchemaError("entries." + key, "not an index pair i,j with 1 <= i < j <= " +
                                              std::to_string(size));
    }
  }

  std::vector<Cell> cells;
  bool any_float = false;
  bool any_symbolic = false;
  for (std::size_t a = 1; a <= size; ++a) {
    for (std::size_t b = a + 1; b <= size; ++b) {
      const std::string key = std::to_string(a) + "," + std::to_string(b);
      if (!entries.contains(key)) throw SchemaError("entries." + key, "missing entry");
      cells.push_back(parse_cell(entries[key], "entries." + key));
      any_float = any_float || cells.back().kind == Kind::Float;
      any_symbolic = any_symbolic || cells.back().kind == Kind::Symbolic;
    }
  }
  if (any_float && any_symbolic) {
    throw SchemaError("entries", "cannot mix floating-point and polynomial entries");
  }
  if (any_symbolic) {
    std::vector<Poly> upper;
    for (auto& c : cells) upper.push_back(c.kind == Kind::Symbolic ? c.symbolic : Poly(c.exact));
    return TriangularArray<Poly>(size, mode, std::move(upper));
  }
  if (any_float) {
    std::vector<double> upper;
    for (auto& c : cells) upper.push_back(c.kind == Kind::Float ? c.real : c.exact.get_d());
    return TriangularArray<double>(size, mode, std::move(upper));
  }
  std::vector<Rational> upper;
  for (auto& c : cells) upper.push_back(c.exact);
  return TriangularArray<Rational>(size, mode, std::move(upper));
}

json to_json(const GroupReport& report, bool include_elements) {
  json out{{"degree", report.degree},
           {"order", report.order},
           {"equals_dihedral", report.equals_dihedral}};
  if (report.witness) out["witness"] = to_json(*report.witness);
  if (include_elements) {
    json elements = json::array();
    for (const auto& p : report.elements) elements.push_back(to_json(p));
    out["elements"] = std::move(elements);
  }
  return out;
}

json to_json(const VerificationReport& report) {
  json out{{"check", report.check},
           {"n", report.n},
           {"mode", report.mode},
           {"pass", report.pass},
           {"residual", report.residual},
           {"lhs", report.lhs},
           {"rhs", report.rhs},
           {"seed", report.seed ? json(*report.seed) : json(nullptr)}};
  if (!report.witnesses.empty()) out["witnesses"] = report.witnesses;
  return out;
}

}  // namespace pfaff
