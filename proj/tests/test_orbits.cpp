#include <algorithm>
#include <map>

#include "doctest.h"
#include "oracle.hpp"
#include "orbitlab/error.hpp"
#include "orbitlab/orbits.hpp"

using namespace orbitlab;

namespace {

SpecRef uniform(std::uint32_t p, std::size_t n) { return make_spec(GroupSpec::uniform(p, n)); }

// Orbit counts computed with oracle::orbit_partition and frozen; indexed by n.
const std::map<std::uint32_t, std::vector<int>> kFrozenCounts = {
    {2, {1, 2, 5, 15, 51, 187, 715, 2795, 11051}},
    {3, {1, 2, 7, 40, 301}},
    {5, {1, 2, 11, 156}},
    {7, {1, 2, 15}},
};

std::vector<ExactInt> sizes_of(const std::vector<OrbitSummary>& summaries) {
  std::vector<ExactInt> out;
  for (const auto& s : summaries) out.push_back(s.size);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("frozen counts match the brute-force oracle") {
  for (const auto& [p, counts] : kFrozenCounts) {
    for (std::size_t n = 0; n < counts.size(); ++n) {
      CAPTURE(p);
      CAPTURE(n);
      CHECK(oracle::orbit_partition(static_cast<int>(p), static_cast<int>(n)).orbit_count ==
            counts[n]);
    }
  }
}

TEST_CASE("orbit_of examples") {
  CHECK(orbit_of(PairState::zero(uniform(2, 1))).size() == 1);
  const auto three = orbit_of(PairState::make(uniform(2, 1), {0}, {1}));
  REQUIRE(three.size() == 3);
  CHECK(three[0] == PairState::make(uniform(2, 1), {0}, {1}));
  CHECK(three[1] == PairState::make(uniform(2, 1), {1}, {0}));
  CHECK(three[2] == PairState::make(uniform(2, 1), {1}, {1}));

  // Rows (1,0),(0,1): g = (1,0), k = (0,1), the identity matrix.
  const PairState identity = PairState::make(uniform(2, 2), {1, 0}, {0, 1});
  const auto invertible = orbit_of(identity);
  CHECK(invertible.size() == 6);
  CHECK(std::find(invertible.begin(), invertible.end(), identity) != invertible.end());
}

TEST_CASE("orbit_of agrees with the oracle partition") {
  const auto part = oracle::orbit_partition(3, 2);
  const SpecRef spec = uniform(3, 2);
  for (int s = 0; s < 81; ++s) {
    const auto orbit = orbit_of(state_from_index(s, spec));
    const auto expected = std::count(part.root_of.begin(), part.root_of.end(), part.root_of[s]);
    CHECK(static_cast<long>(orbit.size()) == expected);
    for (const PairState& member : orbit) {
      CHECK(part.root_of[state_index(member)] == part.root_of[s]);
    }
  }
}

TEST_CASE("count_orbits_bfs examples") {
  CHECK(count_orbits_bfs(GroupSpec::uniform(2, 1)).orbit_count == 2);
  CHECK(count_orbits_bfs(GroupSpec::uniform(2, 2)).orbit_count == 5);
  CHECK(count_orbits_bfs(GroupSpec::uniform(3, 2)).orbit_count == 7);
  CHECK(count_orbits_bfs(GroupSpec::uniform(2, 0)).orbit_count == 1);
  CHECK(count_orbits_bfs(GroupSpec()).orbit_count == 1);
}

TEST_CASE("count_orbits_bfs handles composite and mixed moduli") {
  // Z_4: pairs (g,k) up to SL(2,Z_4); orbits are classified by the ideal
  // generated by g and k, {0}, (2), (1): three orbits.
  CHECK(count_orbits_bfs(GroupSpec({4})).orbit_count == 3);
  const auto report = count_orbits_bfs(GroupSpec({2, 3}), {}, true);
  REQUIRE(report.summaries);
  ExactInt total = 0;
  for (const auto& s : *report.summaries) {
    total += s.size;
    CHECK_FALSE(s.stabilizer_order.has_value());
  }
  CHECK(total == 36);
  // Z_2 x Z_3 = Z_6 and SL(2,Z_6) = SL(2,Z_2) x SL(2,Z_3): orbit count 2 * 2.
  CHECK(report.orbit_count == 4);
}

TEST_CASE("budget is enforced") {
  CHECK_THROWS_AS(count_orbits_bfs(GroupSpec::uniform(2, 4), Budget{255}), Error);
  CHECK_NOTHROW(count_orbits_bfs(GroupSpec::uniform(2, 4), Budget{256}));
  try {
    count_orbits_bfs(GroupSpec::uniform(2, 15));
    FAIL("expected a budget error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Budget);
    CHECK(std::string(e.what()).find("268435456") != std::string::npos);
  }
  CHECK_THROWS_AS(count_orbits_canonical(GroupSpec::uniform(3, 4), Budget{100}), Error);
  CHECK_THROWS_AS(orbit_summaries(GroupSpec::uniform(3, 4), Budget{100}), Error);
}

TEST_CASE("canonical_form examples") {
  const SpecRef z2 = uniform(2, 1);
  CHECK(canonical_form(PairState::zero(uniform(3, 2))) == PairState::zero(uniform(3, 2)));
  CHECK(canonical_form(PairState::make(z2, {1}, {1})) == PairState::make(z2, {0}, {1}));

  const SpecRef spec = uniform(2, 2);
  for (std::uint64_t i = 0; i < 16; ++i) {
    const PairState c = canonical_form(state_from_index(i, spec));
    CHECK(canonical_form(c) == c);
  }
}

TEST_CASE("canonical_form rejects non-prime and non-uniform specs") {
  try {
    canonical_form(PairState::zero(uniform(4, 1)));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotPrime);
  }
  try {
    canonical_form(PairState::zero(make_spec(GroupSpec({2, 3}))));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Incompatible);
  }
  CHECK_THROWS_AS(count_orbits_canonical(GroupSpec({2, 3})), Error);
  CHECK_THROWS_AS(count_orbits_burnside(GroupSpec::uniform(6, 1)), Error);
}

TEST_CASE("canonical_form is the oracle's orbit minimum") {
  for (auto [p, n] : {std::pair{2, 3}, std::pair{3, 2}}) {
    const auto part = oracle::orbit_partition(p, n);
    const SpecRef spec = uniform(p, n);
    for (std::size_t s = 0; s < part.root_of.size(); ++s) {
      CHECK(state_index(canonical_form(state_from_index(s, spec))) ==
            static_cast<std::uint64_t>(part.root_of[s]));
    }
  }
}

TEST_CASE("canonical_form is constant on BFS orbits") {
  for (auto [p, n] : {std::pair{2U, 1U}, std::pair{2U, 2U}, std::pair{2U, 3U},
                      std::pair{3U, 1U}, std::pair{3U, 2U}}) {
    const SpecRef spec = uniform(p, n);
    for (const OrbitSummary& summary : orbit_summaries(*spec)) {
      for (const PairState& member : orbit_of(summary.representative)) {
        CHECK(canonical_form(member) == summary.representative);
      }
    }
  }
}

TEST_CASE("count_orbits_canonical examples") {
  CHECK(count_orbits_canonical(GroupSpec::uniform(2, 2)).orbit_count == 5);
  CHECK(count_orbits_canonical(GroupSpec::uniform(2, 0)).orbit_count == 1);
  CHECK(count_orbits_canonical(GroupSpec::uniform(5, 2)).orbit_count ==
        count_orbits_bfs(GroupSpec::uniform(5, 2)).orbit_count);
}

TEST_CASE("canonical census partitions add up") {
  const GroupSpec spec = GroupSpec::uniform(3, 3);
  const StateCodec codec(spec);
  const auto group = enumerate_sl2(3);
  std::uint64_t total = 0;
  for (std::uint64_t begin = 0; begin < codec.state_count(); begin += 100) {
    total += count_canonical_in_range(codec, group, begin, begin + 100);
  }
  CHECK(total == 40);
  for (unsigned threads : {0U, 1U, 2U, 3U, 8U}) {
    CHECK(count_orbits_canonical(GroupSpec::uniform(2, 8), {}, threads).orbit_count == 11051);
  }
}

TEST_CASE("count_orbits_burnside examples") {
  CHECK(count_orbits_burnside(GroupSpec::uniform(2, 1)).orbit_count == 2);
  CHECK(count_orbits_burnside(GroupSpec::uniform(2, 6)).orbit_count == 715);
  CHECK(count_orbits_burnside(GroupSpec::uniform(3, 3)).orbit_count == 40);
  CHECK(count_orbits_burnside(GroupSpec::uniform(3, 0)).orbit_count == 1);
}

TEST_CASE("burnside partial sums over a split group add up") {
  const GroupSpec spec = GroupSpec::uniform(5, 3);
  const auto group = enumerate_sl2(5);
  const std::span<const Mat2> all(group);
  const ExactInt whole = burnside_fixed_point_sum(spec, all);
  const ExactInt split = burnside_fixed_point_sum(spec, all.first(37)) +
                         burnside_fixed_point_sum(spec, all.subspan(37));
  CHECK(whole == split);
  CHECK(whole == 156 * sl2_order(5));
}

TEST_CASE("orbit_summaries examples") {
  const auto n1 = orbit_summaries(GroupSpec::uniform(2, 1));
  CHECK(sizes_of(n1) == std::vector<ExactInt>{1, 3});

  const auto n2 = orbit_summaries(GroupSpec::uniform(2, 2));
  CHECK(sizes_of(n2) == std::vector<ExactInt>{1, 3, 3, 3, 6});
  const auto trivial = std::count_if(n2.begin(), n2.end(), [](const OrbitSummary& s) {
    return s.stabilizer_order == ExactInt(1);
  });
  CHECK(trivial == 1);
  for (const auto& s : n2) {
    if (s.stabilizer_order == ExactInt(1)) CHECK(s.size == 6);
  }
  // Sorted by representative index, each representative the orbit minimum.
  for (std::size_t i = 1; i < n2.size(); ++i) {
    CHECK(state_index(n2[i - 1].representative) < state_index(n2[i].representative));
  }
}

TEST_CASE("the five n=2 classes as orbits") {
  // The four displayed members of the invertible class plus the identity
  // matrix, which the displayed listing leaves out.
  const SpecRef spec = uniform(2, 2);
  auto rows = [&](int r00, int r01, int r10, int r11) {
    return PairState::make(spec, {r00, r10}, {r01, r11});
  };
  const auto orbit = orbit_of(rows(0, 1, 1, 1));
  CHECK(orbit.size() == 6);
  for (const PairState& m : {rows(1, 1, 1, 0), rows(1, 0, 1, 1), rows(1, 1, 0, 1),
                             rows(0, 1, 1, 0), rows(1, 0, 0, 1)}) {
    CHECK(std::find(orbit.begin(), orbit.end(), m) != orbit.end());
  }
  // Class (2): zero first row, nonzero second row.
  const auto class2 = orbit_of(rows(0, 0, 0, 1));
  CHECK(class2.size() == 3);
  CHECK(std::find(class2.begin(), class2.end(), rows(0, 0, 1, 0)) != class2.end());
  CHECK(std::find(class2.begin(), class2.end(), rows(0, 0, 1, 1)) != class2.end());
}

TEST_CASE("method agreement, conservation and divisibility on the desk grid") {
  for (const auto& [p, counts] : kFrozenCounts) {
    for (std::size_t n = 0; n < counts.size(); ++n) {
      CAPTURE(p);
      CAPTURE(n);
      const GroupSpec spec = GroupSpec::uniform(p, n);
      const auto bfs = count_orbits_bfs(spec, {}, true);
      CHECK(bfs.orbit_count == counts[n]);
      CHECK(count_orbits_canonical(spec).orbit_count == counts[n]);
      CHECK(count_orbits_burnside(spec).orbit_count == counts[n]);

      ExactInt total = 0;
      for (const auto& s : *bfs.summaries) {
        total += s.size;
        CHECK(sl2_order(p) % s.size == 0);
        CHECK(*s.stabilizer_order * s.size == sl2_order(p));
      }
      CHECK(total == ipow(p, 2 * n));
    }
  }
}

TEST_CASE("orbit sizes match the oracle partition") {
  for (auto [p, n] : {std::pair{2, 4}, std::pair{3, 3}, std::pair{5, 2}}) {
    const auto part = oracle::orbit_partition(p, n);
    const auto summaries = orbit_summaries(GroupSpec::uniform(p, n));
    std::vector<ExactInt> expected(part.sizes.begin(), part.sizes.end());
    CHECK(sizes_of(summaries) == expected);
    REQUIRE(summaries.size() == part.representatives.size());
    for (std::size_t i = 0; i < summaries.size(); ++i) {
      CHECK(state_index(summaries[i].representative) ==
            static_cast<std::uint64_t>(part.representatives[i]));
    }
  }
}

TEST_CASE("censuses are deterministic") {
  const GroupSpec spec = GroupSpec::uniform(3, 3);
  const auto a = orbit_summaries(spec);
  const auto b = orbit_summaries(spec);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].representative == b[i].representative);
    CHECK(a[i].size == b[i].size);
  }
  CHECK(method_name(CensusMethod::Burnside) == "burnside");
}
