#include "pfaff/matching.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace pfaff {

PfaffPermutation::PfaffPermutation(std::vector<Pair> pairs) : pairs_(std::move(pairs)) {
  const int two_n = static_cast<int>(2 * pairs_.size());
  std::vector<bool> seen(static_cast<std::size_t>(two_n), false);
  const auto fail = [&](const std::string& why) {
    throw std::invalid_argument("invalid Pfaff permutation " + to_string(*this) + ": " + why);
  };
  for (std::size_t s = 0; s < pairs_.size(); ++s) {
    const auto [i, j] = pairs_[s];
    if (i < 1 || j < 1 || i > two_n || j > two_n) fail("index out of range");
    if (i >= j) fail("needs i_s < j_s");
    if (s > 0 && pairs_[s - 1].first >= i) fail("first elements must increase");
    for (int v : {i, j}) {
      if (seen[static_cast<std::size_t>(v - 1)]) fail("repeated index " + std::to_string(v));
      seen[static_cast<std::size_t>(v - 1)] = true;
    }
  }
}

Permutation PfaffPermutation::flatten() const {
  std::vector<int> images;
  images.reserve(two_n());
  for (const auto& [i, j] : pairs_) {
    images.push_back(i);
    images.push_back(j);
  }
  return Permutation(std::move(images));
}

int matching_sign(const PfaffPermutation& m) { return m.flatten().sign(); }

std::string to_string(const PfaffPermutation& m) {
  std::ostringstream os;
  for (const auto& [i, j] : m.pairs()) os << '(' << i << ',' << j << ')';
  return os.str();
}

namespace {

std::size_t checked_two_n(std::size_t two_n, std::size_t cap) {
  const std::size_t effective = std::min(cap, kHardPfaffCap);
  if (two_n % 2 != 0) {
    throw std::invalid_argument("enumerate_pfaff: size must be even, got " + std::to_string(two_n));
  }
  if (two_n > effective) throw CapExceeded("enumerate_pfaff", two_n, effective);
  return two_n;
}

}  // namespace

PfaffStream::PfaffStream(std::size_t two_n, std::size_t cap)
    : two_n_(checked_two_n(two_n, cap)),
      levels_(two_n / 2),
      pairs_(levels_),
      skips_(levels_, 0) {}

PfaffStream::PfaffStream(std::size_t two_n, int first_partner, std::size_t cap)
    : PfaffStream(two_n, cap) {
  if (two_n == 0 || first_partner < 2 || first_partner > static_cast<int>(two_n)) {
    throw std::out_of_range("PfaffStream: first partner " + std::to_string(first_partner) +
                            " outside 2.." + std::to_string(two_n));
  }
  pinned_ = true;
  pairs_[0] = {1, first_partner};
  skips_[0] = static_cast<unsigned>(first_partner - 2);
}

int PfaffStream::next_free_above(int index) const {
  for (int v = index + 1; v <= static_cast<int>(two_n_); ++v) {
    if ((used_ >> (v - 1) & 1U) == 0) return v;
  }
  return 0;
}

bool PfaffStream::fill_from(std::size_t level) {
  for (std::size_t l = level; l < levels_; ++l) {
    const int i = next_free_above(0);
    used_ |= 1U << (i - 1);
    const int j = next_free_above(i);
    used_ |= 1U << (j - 1);
    pairs_[l] = {i, j};
    skips_[l] = 0;
  }
  parity_ = 0;
  for (unsigned k : skips_) parity_ += k;
  return true;
}

bool PfaffStream::advance() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    if (pinned_) {
      used_ = (1U << 0) | (1U << (pairs_[0].second - 1));
      return fill_from(1);
    }
    return fill_from(0);
  }
  const std::size_t floor = pinned_ ? 1 : 0;
  for (std::size_t l = levels_; l-- > floor;) {
    auto& [i, j] = pairs_[l];
    used_ &= ~((1U << (i - 1)) | (1U << (j - 1)));
    const int next_j = next_free_above(j);
    if (next_j == 0) continue;
    used_ |= (1U << (i - 1)) | (1U << (next_j - 1));
    j = next_j;
    unsigned between = 0;
    for (int v = i + 1; v < next_j; ++v) {
      if ((used_ >> (v - 1) & 1U) == 0) ++between;
    }
    skips_[l] = between;
    return fill_from(l + 1);
  }
  done_ = true;
  return false;
}

std::optional<SignedMatching> PfaffStream::next() {
  if (!advance()) return std::nullopt;
  return SignedMatching{PfaffPermutation({pairs_.begin(), pairs_.end()}), sign()};
}

std::uint64_t double_factorial_odd(std::size_t two_n) {
  std::uint64_t out = 1;
  for (std::uint64_t k = 1; k + 1 <= two_n; k += 2) out *= k;
  return out;
}

std::vector<SignedMatching> enumerate_pfaff(std::size_t two_n, std::size_t cap) {
  std::vector<SignedMatching> out;
  PfaffStream stream(two_n, cap);
  out.reserve(double_factorial_odd(two_n));
  while (auto m = stream.next()) out.push_back(std::move(*m));
  return out;
}

}  // namespace pfaff
