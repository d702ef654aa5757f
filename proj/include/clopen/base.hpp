#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace clopen {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Subset of up to kMaxPoints indexed objects, one bit per index.
using Mask = std::uint32_t;

inline constexpr std::size_t kMaxPoints = 16;

inline constexpr Mask full_mask(std::size_t n) {
  return n == 0 ? 0u : (Mask{1} << n) - 1u;
}

inline constexpr bool mask_contains(Mask m, std::size_t i) {
  return (m >> i) & 1u;
}

inline constexpr bool mask_subset(Mask a, Mask b) { return (a & ~b) == 0; }

inline std::size_t mask_size(Mask m) {
  return static_cast<std::size_t>(std::popcount(m));
}

inline std::vector<std::size_t> mask_indices(Mask m) {
  std::vector<std::size_t> out;
  for (Mask bits = m; bits != 0; bits &= bits - 1)
    out.push_back(static_cast<std::size_t>(std::countr_zero(bits)));
  return out;
}

inline std::size_t lowest_index(Mask m) {
  if (m == 0) throw Error("lowest_index: empty mask");
  return static_cast<std::size_t>(std::countr_zero(m));
}

inline std::string join_names(const std::vector<std::string>& names, Mask m,
                              const std::string& sep) {
  std::string out;
  for (std::size_t i : mask_indices(m)) {
    if (!out.empty()) out += sep;
    out += names[i];
  }
  return out;
}

inline std::string set_to_string(const std::vector<std::string>& names,
                                 Mask m) {
  return "{" + join_names(names, m, ",") + "}";
}

}  // namespace clopen
