#pragma once

#include <cstdint>

namespace orbitlab {

inline constexpr std::uint64_t kDefaultStateBudget = std::uint64_t{1} << 28;

/// Cap on the number of items (pair states, words) an enumeration may touch.
struct Budget {
  std::uint64_t max_states = kDefaultStateBudget;
};

}  // namespace orbitlab
