#pragma once

// Orbit enumeration for the S/T action on G x G: a visited-sweep BFS, a
// canonical-form census, and a fixed-point (Burnside) average. The three
// share no code path beyond the index codec, so agreement between them is
// a meaningful check.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "orbitlab/budget.hpp"
#include "orbitlab/exact_int.hpp"
#include "orbitlab/residue.hpp"
#include "orbitlab/state_codec.hpp"

namespace orbitlab {

enum class CensusMethod { Bfs, Canonical, Burnside };

std::string_view method_name(CensusMethod method) noexcept;

struct OrbitSummary {
  PairState representative;  // smallest state_index in the orbit
  ExactInt size;
  /// |SL(2,Z_p)| / size; only for uniform prime specs.
  std::optional<ExactInt> stabilizer_order;
};

struct CensusReport {
  GroupSpec spec;
  CensusMethod method = CensusMethod::Bfs;
  ExactInt orbit_count;
  std::optional<std::vector<OrbitSummary>> summaries;
};

/// Closure of {s} under apply_s and apply_t, sorted by state_index.
std::vector<PairState> orbit_of(const PairState& s);

/// Visits every orbit as (smallest index, size), in increasing index order.
/// No budget check; callers decide how much they are willing to sweep.
void for_each_orbit(const StateCodec& codec,
                    const std::function<void(std::uint64_t, std::uint64_t)>& visit);

/// Works for any moduli. with_summaries fills CensusReport::summaries from
/// the same sweep.
CensusReport count_orbits_bfs(const GroupSpec& spec, const Budget& budget = {},
                              bool with_summaries = false);

/// One summary per orbit, ordered by representative index.
std::vector<OrbitSummary> orbit_summaries(const GroupSpec& spec,
                                          const Budget& budget = {});

/// Minimum over A in SL(2,Z_p) of s*A under state_index order.
PairState canonical_form(const PairState& s);

/// Index-level canonical form. group must be enumerate_sl2(p) for the
/// codec's prime.
std::uint64_t canonical_index(const StateCodec& codec, std::span<const Mat2> group,
                              std::uint64_t index) noexcept;

/// Number of indices in [begin, end) that equal their own canonical index.
/// Disjoint ranges add up to the orbit count.
std::uint64_t count_canonical_in_range(const StateCodec& codec,
                                       std::span<const Mat2> group,
                                       std::uint64_t begin, std::uint64_t end);

/// threads == 0 picks std::thread::hardware_concurrency().
CensusReport count_orbits_canonical(const GroupSpec& spec, const Budget& budget = {},
                                    unsigned threads = 1);

/// Sum over A in `group` of #Fix(A) = p^(n * dim ker(A - I)). Partial sums
/// over disjoint subsets add up.
ExactInt burnside_fixed_point_sum(const GroupSpec& spec, std::span<const Mat2> group);

CensusReport count_orbits_burnside(const GroupSpec& spec);

/// |SL(2,Z_p)| = p(p^2 - 1).
ExactInt sl2_order(std::uint32_t p);

}  // namespace orbitlab
