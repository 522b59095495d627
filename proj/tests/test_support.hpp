#pragma once

#include <cstdint>
#include <vector>

#include "rearr/config.hpp"

namespace rearr::testing {

// Cell i is bit i of `bits`.
inline Configuration config_from_bits(std::uint32_t bits, std::size_t n) {
  std::vector<Cell> cells(n);
  for (std::size_t i = 0; i < n; ++i) {
    cells[i] = static_cast<Cell>((bits >> i) & 1u);
  }
  return Configuration(std::move(cells));
}

inline std::vector<Configuration> all_configs(std::size_t n) {
  std::vector<Configuration> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
    out.push_back(config_from_bits(bits, n));
  }
  return out;
}

}  // namespace rearr::testing
