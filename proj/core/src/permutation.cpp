#include "pfaff/permutation.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace pfaff {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 1 || v > static_cast<int>(images_.size()) || seen[static_cast<std::size_t>(v - 1)]) {
      std::ostringstream msg;
      msg << "not a permutation of 1.." << images_.size() << ": [";
      for (std::size_t k = 0; k < images_.size(); ++k) msg << (k ? "," : "") << images_[k];
      msg << "]";
      throw std::invalid_argument(msg.str());
    }
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
}

Permutation Permutation::identity(std::size_t m) {
  std::vector<int> images(m);
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

std::size_t Permutation::inversions() const {
  std::size_t count = 0;
  for (std::size_t a = 0; a < images_.size(); ++a) {
    for (std::size_t b = a + 1; b < images_.size(); ++b) {
      if (images_[a] > images_[b]) ++count;
    }
  }
  return count;
}

int Permutation::sign() const {
  // Cycle decomposition: parity = m - #cycles.
  std::vector<bool> visited(images_.size(), false);
  std::size_t cycles = 0;
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (visited[start]) continue;
    ++cycles;
    for (std::size_t k = start; !visited[k]; k = static_cast<std::size_t>(images_[k] - 1)) {
      visited[k] = true;
    }
  }
  return (images_.size() - cycles) % 2 == 0 ? 1 : -1;
}

bool Permutation::is_identity() const {
  for (std::size_t k = 0; k < images_.size(); ++k) {
    if (images_[k] != static_cast<int>(k) + 1) return false;
  }
  return true;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) {
    throw std::invalid_argument("compose: size mismatch " + std::to_string(p.size()) + " vs " +
                                std::to_string(q.size()));
  }
  std::vector<int> out(p.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = p(q.images()[k]);
  return Permutation(std::move(out));
}

Permutation inverse(const Permutation& p) {
  std::vector<int> out(p.size());
  for (std::size_t k = 0; k < out.size(); ++k) {
    out[static_cast<std::size_t>(p.images()[k] - 1)] = static_cast<int>(k) + 1;
  }
  return Permutation(std::move(out));
}

std::string to_string(const Permutation& p) {
  std::ostringstream os;
  os << p;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) {
  os << '(';
  for (std::size_t k = 0; k < p.size(); ++k) os << (k ? "," : "") << p.images()[k];
  return os << ')';
}

SymmetricGroupStream::SymmetricGroupStream(std::size_t m, std::size_t cap) {
  if (m < 1) throw std::invalid_argument("enumerate_sym: m must be positive");
  if (m > cap) throw CapExceeded("enumerate_sym", m, cap);
  current_.resize(m);
  std::iota(current_.begin(), current_.end(), 1);
}

SymmetricGroupStream::SymmetricGroupStream(std::size_t m, int first_image, std::size_t cap)
    : SymmetricGroupStream(m, cap) {
  if (first_image < 1 || first_image > static_cast<int>(m)) {
    throw std::out_of_range("enumerate_sym: first image out of range");
  }
  std::rotate(current_.begin(), current_.begin() + (first_image - 1), current_.begin() + first_image);
  pin_first_ = true;
}

std::optional<Permutation> SymmetricGroupStream::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    return Permutation(current_);
  }
  const auto tail_begin = pin_first_ ? current_.begin() + 1 : current_.begin();
  if (!std::next_permutation(tail_begin, current_.end())) {
    done_ = true;
    return std::nullopt;
  }
  return Permutation(current_);
}

void for_each_permutation(std::size_t m, const std::function<void(const Permutation&)>& visit,
                          std::size_t cap) {
  SymmetricGroupStream stream(m, cap);
  while (auto p = stream.next()) visit(*p);
}

std::vector<Permutation> enumerate_sym(std::size_t m, std::size_t cap) {
  std::vector<Permutation> out;
  for_each_permutation(m, [&](const Permutation& p) { out.push_back(p); }, cap);
  return out;
}

DihedralGenerators dihedral_generators(std::size_t m) {
  if (m == 0 || m % 2 != 0) {
    throw std::invalid_argument("dihedral_generators: m must be even and positive, got " +
                                std::to_string(m));
  }
  const int mm = static_cast<int>(m);
  std::vector<int> rotation(m);
  std::vector<int> reflection(m);
  for (int k = 1; k <= mm; ++k) {
    rotation[static_cast<std::size_t>(k - 1)] = k < mm ? k + 1 : 1;
    reflection[static_cast<std::size_t>(k - 1)] = k == 1 ? 1 : mm + 2 - k;
  }
  return {Permutation(std::move(rotation)), Permutation(std::move(reflection))};
}

std::vector<Permutation> generate_subgroup(std::span<const Permutation> gens, std::size_t m) {
  for (const auto& g : gens) {
    if (g.size() != m) {
      throw std::invalid_argument("generate_subgroup: generator of size " +
                                  std::to_string(g.size()) + " in S_" + std::to_string(m));
    }
  }
  std::set<Permutation> seen{Permutation::identity(m)};
  std::deque<Permutation> frontier{Permutation::identity(m)};
  while (!frontier.empty()) {
    const Permutation current = frontier.front();
    frontier.pop_front();
    for (const auto& g : gens) {
      Permutation product = compose(current, g);
      if (seen.insert(product).second) frontier.push_back(std::move(product));
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<Permutation> dihedral_subgroup(std::size_t m) {
  const auto [rotation, reflection] = dihedral_generators(m);
  const std::vector<Permutation> gens{rotation, reflection};
  return generate_subgroup(gens, m);
}

std::string to_string(RunTag tag) {
  switch (tag) {
    case RunTag::OneUpRun: return "OneUpRun";
    case RunTag::OneDownRun: return "OneDownRun";
    case RunTag::TwoUpRuns: return "TwoUpRuns";
    case RunTag::TwoDownRuns: return "TwoDownRuns";
    case RunTag::NotDihedral: return "NotDihedral";
  }
  return "?";
}

RunType classify_runs(const Permutation& p) {
  const std::size_t m = p.size();
  if (m == 0 || m % 2 != 0) {
    throw std::invalid_argument("classify_runs: needs an even size, got " + std::to_string(m));
  }
  const int mm = static_cast<int>(m);
  const int s = p(1);

  // Ascending cyclic walk from s: s, s+1, ..., m, 1, ..., s-1.
  bool up = true;
  bool down = true;
  for (int k = 1; k <= mm; ++k) {
    const int expect_up = (s - 1 + (k - 1)) % mm + 1;
    const int expect_down = ((s - 1 - (k - 1)) % mm + mm) % mm + 1;
    up = up && p(k) == expect_up;
    down = down && p(k) == expect_down;
  }
  if (up && s == 1) return {RunTag::OneUpRun, std::nullopt};
  if (down && s == mm) return {RunTag::OneDownRun, std::nullopt};
  if (up) return {RunTag::TwoUpRuns, s};
  if (down) return {RunTag::TwoDownRuns, s};
  return {RunTag::NotDihedral, std::nullopt};
}

}  // namespace pfaff
