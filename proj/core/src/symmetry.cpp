#include "pfaff/symmetry.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>

#include "pfaff/kernel.hpp"
#include "pfaff/pfaffian.hpp"

namespace pfaff {

std::string to_string(ActionMode mode) {
  return mode == ActionMode::SymmetricGens ? "symmetric" : "skew";
}

ActionMode parse_action_mode(const std::string& text) {
  if (text == "symmetric" || text == "SymmetricGens") return ActionMode::SymmetricGens;
  if (text == "skew" || text == "SkewGens") return ActionMode::SkewGens;
  throw std::invalid_argument("unknown action mode '" + text + "' (expected symmetric|skew)");
}

Poly act(const Permutation& p, const Poly& poly, ActionMode mode) {
  const Permutation pinv = inverse(p);
  const int m = static_cast<int>(p.size());
  Poly out;
  std::vector<Monomial::Factor> factors;
  for (const auto& [mono, coeff] : poly.terms()) {
    factors.clear();
    bool flip = false;
    for (const auto& [v, e] : mono.factors()) {
      if (v.i > m || v.j > m) {
        throw std::out_of_range("act: " + to_string(v) + " outside S_" + std::to_string(m));
      }
      if (v.is_pos()) {
        factors.emplace_back(Var::pos(pinv(v.i)), e);
        continue;
      }
      int a = pinv(v.i);
      int b = pinv(v.j);
      if (a > b) {
        std::swap(a, b);
        if (mode == ActionMode::SkewGens && e % 2 == 1) flip = !flip;
      }
      factors.emplace_back(Var::gen(a, b), e);
    }
    out.add_term(Monomial::from_factors(factors), flip ? Rational(-coeff) : coeff);
  }
  return out;
}

namespace {

bool contains(const std::vector<Permutation>& sorted, const Permutation& p) {
  return std::binary_search(sorted.begin(), sorted.end(), p);
}

// Greedily picks generators from the set and grows the subgroup they
// generate; the set is closed iff that subgroup never leaves it.
bool is_closed(const std::vector<Permutation>& sorted, std::size_t degree) {
  std::vector<Permutation> gens;
  std::vector<Permutation> generated{Permutation::identity(degree)};
  for (const auto& g : sorted) {
    if (contains(generated, g)) continue;
    gens.push_back(g);
    generated = generate_subgroup(gens, degree);
    if (generated.size() > sorted.size()) return false;
    for (const auto& h : generated) {
      if (!contains(sorted, h)) return false;
    }
  }
  return generated.size() == sorted.size();
}

}  // namespace

GroupReport GroupReport::from_elements(std::vector<Permutation> elements, std::size_t degree) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  for (const auto& p : elements) {
    if (p.size() != degree) throw std::invalid_argument("GroupReport: element of wrong degree");
  }
  if (!contains(elements, Permutation::identity(degree))) {
    throw std::logic_error("GroupReport: identity missing");
  }
  if (!is_closed(elements, degree)) {
    throw std::logic_error("GroupReport: element set is not closed under composition");
  }
  GroupReport report;
  report.degree = degree;
  report.order = elements.size();
  report.elements = std::move(elements);
  if (degree >= 2 && degree % 2 == 0) {
    const auto dihedral = dihedral_subgroup(degree);
    report.equals_dihedral = report.elements == dihedral;
    if (!report.equals_dihedral) {
      std::vector<Permutation> diff;
      std::set_symmetric_difference(report.elements.begin(), report.elements.end(),
                                    dihedral.begin(), dihedral.end(), std::back_inserter(diff));
      if (!diff.empty()) report.witness = diff.front();
    }
  }
  return report;
}

GroupReport symmetry_group(const Poly& poly, std::size_t m, ActionMode mode, bool is_signed,
                           Execution exec, std::size_t cap) {
  if (m > cap) throw CapExceeded("symmetry_group", m, cap);
  const Poly negated = -poly;
  const auto fixes = [&](const Permutation& p) {
    const Poly image = act(p, poly, mode);
    if (!is_signed || p.sign() > 0) return image == poly;
    return image == negated;
  };
  const auto scan = [&](SymmetricGroupStream stream) {
    std::vector<Permutation> found;
    while (auto p = stream.next()) {
      if (fixes(*p)) found.push_back(std::move(*p));
    }
    return found;
  };

  std::vector<Permutation> elements;
  if (exec == Execution::Parallel && m > 3) {
    std::vector<std::future<std::vector<Permutation>>> parts;
    for (int first = 1; first <= static_cast<int>(m); ++first) {
      parts.push_back(std::async(std::launch::async, [&, first] {
        return scan(SymmetricGroupStream(m, first, cap));
      }));
    }
    for (auto& part : parts) {
      auto found = part.get();
      elements.insert(elements.end(), found.begin(), found.end());
    }
  } else {
    elements = scan(SymmetricGroupStream(m, cap));
  }
  return GroupReport::from_elements(std::move(elements), m);
}

bool is_dihedral(const GroupReport& report, std::size_t two_n) {
  if (report.degree != two_n) {
    throw std::invalid_argument("is_dihedral: report over S_" + std::to_string(report.degree) +
                                ", asked about S_" + std::to_string(two_n));
  }
  std::vector<Permutation> sorted = report.elements;
  std::sort(sorted.begin(), sorted.end());
  return sorted == dihedral_subgroup(two_n);
}

GroupReport sym_of_g(std::size_t two_n, std::size_t cap) {
  if (two_n > cap) throw CapExceeded("sym_of_g", two_n, cap);
  const Poly g = g_poly(two_n);
  std::vector<Permutation> elements;
  for_each_permutation(
      two_n,
      [&](const Permutation& p) {
        Substitution relabel;
        for (int k = 1; k <= static_cast<int>(two_n); ++k) relabel[Var::pos(k)] = Poly::pos(p(k));
        if (substitute(g, relabel) == g) elements.push_back(p);
      },
      cap);
  return GroupReport::from_elements(std::move(elements), two_n);
}

Poly symbolic_pfaffian(std::size_t two_n, Execution exec) {
  const auto arr = TriangularArray<Poly>::generate(two_n, GeneratorMode::Symmetric,
                                                   [](int i, int j) { return Poly::gen(i, j); });
  return pfaffian_direct(arr, exec);
}

}  // namespace pfaff
