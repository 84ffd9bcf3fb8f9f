#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pfaff {

// Default enumeration caps. PF_CAP (read by the CLI) may move them, but the
// matching enumerator never exceeds kHardPfaffCap.
inline constexpr std::size_t kDefaultSymCap = 9;
inline constexpr std::size_t kDefaultPfaffCap = 16;
inline constexpr std::size_t kHardPfaffCap = 16;
inline constexpr std::size_t kDefaultSymmetrySearchCap = 8;

class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(const std::string& what_for, std::size_t requested, std::size_t cap)
      : std::runtime_error(what_for + ": requested size " + std::to_string(requested) +
                           " exceeds cap " + std::to_string(cap)),
        requested_(requested),
        cap_(cap) {}

  std::size_t requested() const noexcept { return requested_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t requested_;
  std::size_t cap_;
};

enum class Execution { Sequential, Parallel };

}  // namespace pfaff
