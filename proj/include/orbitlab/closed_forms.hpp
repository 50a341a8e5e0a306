#pragma once

// Exact evaluation of the orbit-count formula r(Z_p^n), its forward
// difference F(n) = r(n+1) - r(n) in closed and recursive form, the
// telescoped sum, and the p = 2 product form. Indexing: r(p, 1) = 2.

#include <cstdint>
#include <utility>
#include <vector>

#include "orbitlab/exact_int.hpp"

namespace orbitlab {

/// p^(2n-1) + p^(n+1) - p^(n-1) + p^2 - p - 1, for n >= 1.
ExactInt r_numerator(std::uint32_t p, std::int64_t n);

/// r_numerator / (p^2 - 1), exact; r_formula(p, 0) = 1.
ExactInt r_formula(std::uint32_t p, std::int64_t n);

/// (2^n + 1)(2^(n-1) + 1) / 3 for n >= 1.
ExactInt r_p2_product(std::int64_t n);

/// p^(n-1) (p^n + p - 1) for n >= 1.
ExactInt f_closed(std::uint32_t p, std::int64_t n);

/// F(1) = 2p - 1, F(n) = p F(n-1) + p^(2n-2) (p - 1).
ExactInt f_recurrence(std::uint32_t p, std::int64_t n);

/// 2 + sum_{i=1}^{n-1} f_closed(p, i).
ExactInt r_telescoped(std::uint32_t p, std::int64_t n);

/// [(0, 1), (1, r(p,1)), ..., (n_max, r(p,n_max))].
std::vector<std::pair<std::int64_t, ExactInt>> sequence_table(std::uint32_t p,
                                                              std::int64_t n_max);

}  // namespace orbitlab
