#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pfaff {

/// How entries below the diagonal are recovered from the stored triangle.
enum class GeneratorMode { Symmetric, Skew, Plain };

std::string to_string(GeneratorMode mode);
GeneratorMode parse_generator_mode(const std::string& text);

/// Upper-triangular data (a_{i,j}), 1 <= i < j <= size, plus a completion
/// rule. Pfaffian code requires an even size; the determinant examples use
/// odd sizes too, so the container itself accepts any size.
template <class Scalar>
class TriangularArray {
 public:
  TriangularArray() = default;

  /// Entries in row-major order of the strict upper triangle:
  /// (1,2), (1,3), ..., (1,m), (2,3), ...
  TriangularArray(std::size_t size, GeneratorMode mode, std::vector<Scalar> upper)
      : size_(size), mode_(mode), upper_(std::move(upper)) {
    if (upper_.size() != entry_count(size_)) {
      throw std::invalid_argument("triangular array of size " + std::to_string(size_) +
                                  " needs " + std::to_string(entry_count(size_)) +
                                  " entries, got " + std::to_string(upper_.size()));
    }
  }

  template <class F>
  static TriangularArray generate(std::size_t size, GeneratorMode mode, F&& entry) {
    std::vector<Scalar> upper;
    upper.reserve(entry_count(size));
    for (int i = 1; i <= static_cast<int>(size); ++i) {
      for (int j = i + 1; j <= static_cast<int>(size); ++j) upper.push_back(Scalar(entry(i, j)));
    }
    return TriangularArray(size, mode, std::move(upper));
  }

  static constexpr std::size_t entry_count(std::size_t m) noexcept { return m * (m - (m > 0)) / 2; }

  std::size_t size() const noexcept { return size_; }
  GeneratorMode mode() const noexcept { return mode_; }
  const std::vector<Scalar>& upper() const noexcept { return upper_; }

  /// Stored a_{i,j} for 1 <= i < j <= size.
  const Scalar& entry(int i, int j) const {
    if (i < 1 || j <= i || j > static_cast<int>(size_)) {
      throw std::out_of_range("entry (" + std::to_string(i) + "," + std::to_string(j) +
                              ") outside the strict upper triangle of size " +
                              std::to_string(size_));
    }
    return upper_[offset(i, j)];
  }

  /// Completed lookup: mirrored (Symmetric), negated (Skew), zero diagonal.
  /// Plain arrays only answer for i < j.
  Scalar lookup(int i, int j) const {
    if (i < j) return entry(i, j);
    if (mode_ == GeneratorMode::Plain) {
      throw std::logic_error("plain triangular array has no entry (" + std::to_string(i) + "," +
                             std::to_string(j) + ")");
    }
    if (i == j) {
      if (i < 1 || i > static_cast<int>(size_)) throw std::out_of_range("diagonal index out of range");
      return Scalar(0);
    }
    if (mode_ == GeneratorMode::Symmetric) return entry(j, i);
    return -entry(j, i);
  }

  /// Row s of the completed matrix (a_{s,s} = 0). Requires a completion rule.
  std::vector<Scalar> hook(int s) const {
    std::vector<Scalar> out;
    out.reserve(size_);
    for (int j = 1; j <= static_cast<int>(size_); ++j) out.push_back(lookup(s, j));
    return out;
  }

  /// Same mode, hooks at the given 1-based indices kept in order and relabeled 1..k.
  TriangularArray restrict_to(const std::vector<int>& keep) const {
    return generate(keep.size(), mode_, [&](int i, int j) {
      return entry(keep[static_cast<std::size_t>(i - 1)], keep[static_cast<std::size_t>(j - 1)]);
    });
  }

  template <class F>
  auto map(F&& f) const -> TriangularArray<decltype(f(std::declval<const Scalar&>()))> {
    using Out = decltype(f(std::declval<const Scalar&>()));
    std::vector<Out> out;
    out.reserve(upper_.size());
    for (const auto& v : upper_) out.push_back(f(v));
    return TriangularArray<Out>(size_, mode_, std::move(out));
  }

  bool operator==(const TriangularArray&) const = default;

 private:
  std::size_t offset(int i, int j) const noexcept {
    const auto m = size_;
    const auto r = static_cast<std::size_t>(i - 1);
    // rows before r contribute (m-1) + (m-2) + ... + (m-r)
    return r * m - r * (r + 1) / 2 + static_cast<std::size_t>(j - i - 1);
  }

  std::size_t size_ = 0;
  GeneratorMode mode_ = GeneratorMode::Symmetric;
  std::vector<Scalar> upper_;
};

}  // namespace pfaff
