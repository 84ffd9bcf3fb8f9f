#include "pfaff/triangular_array.hpp"

namespace pfaff {

std::string to_string(GeneratorMode mode) {
  switch (mode) {
    case GeneratorMode::Symmetric: return "symmetric";
    case GeneratorMode::Skew: return "skew";
    case GeneratorMode::Plain: return "plain";
  }
  return "?";
}

GeneratorMode parse_generator_mode(const std::string& text) {
  if (text == "symmetric") return GeneratorMode::Symmetric;
  if (text == "skew") return GeneratorMode::Skew;
  if (text == "plain") return GeneratorMode::Plain;
  throw std::invalid_argument("unknown generator mode '" + text +
                              "' (expected symmetric|skew|plain)");
}

}  // namespace pfaff
