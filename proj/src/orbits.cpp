#include "orbitlab/orbits.hpp"

#include <algorithm>
#include <thread>
#include <unordered_set>

#include "orbitlab/error.hpp"

namespace orbitlab {

namespace {

std::uint32_t require_uniform_prime(const GroupSpec& spec) {
  if (auto p = spec.uniform_prime()) return *p;
  const auto moduli = spec.moduli();
  const bool uniform = !moduli.empty() &&
                       std::all_of(moduli.begin(), moduli.end(),
                                   [&](std::uint32_t d) { return d == moduli.front(); });
  if (uniform) {
    throw Error(ErrorCode::NotPrime, "modulus " + std::to_string(moduli.front()) +
                                         " is not prime; only the BFS census applies");
  }
  throw Error(ErrorCode::Incompatible,
              "this method needs a uniform prime group Z_p^n; only the BFS census applies");
}

// Visits orbits in increasing order of their smallest index. Since the sweep
// walks indices in order, the state that opens an orbit is its minimum.
template <typename OnOrbit>
void sweep_orbits(const StateCodec& codec, OnOrbit&& on_orbit) {
  const std::uint64_t total = codec.state_count();
  std::vector<bool> visited(total, false);
  std::vector<std::uint64_t> stack;
  for (std::uint64_t start = 0; start < total; ++start) {
    if (visited[start]) continue;
    visited[start] = true;
    stack.push_back(start);
    std::uint64_t size = 0;
    while (!stack.empty()) {
      const std::uint64_t cur = stack.back();
      stack.pop_back();
      ++size;
      for (const std::uint64_t next : {codec.apply_s(cur), codec.apply_t(cur)}) {
        if (!visited[next]) {
          visited[next] = true;
          stack.push_back(next);
        }
      }
    }
    on_orbit(start, size);
  }
}

// Dimension of {x : x A = x} for row vectors x over Z_p.
unsigned fixed_space_dimension(const Mat2& A) {
  const std::uint64_t p = A.modulus();
  const std::uint64_t a = (A.a() + p - 1) % p;
  const std::uint64_t b = A.b();
  const std::uint64_t c = A.c();
  const std::uint64_t d = (A.d() + p - 1) % p;
  if (a == 0 && b == 0 && c == 0 && d == 0) return 2;
  if ((a * d + p * p - b * c) % p == 0) return 1;
  return 0;
}

}  // namespace

std::string_view method_name(CensusMethod method) noexcept {
  switch (method) {
    case CensusMethod::Bfs: return "bfs";
    case CensusMethod::Canonical: return "canonical";
    case CensusMethod::Burnside: return "burnside";
  }
  return "unknown";
}

ExactInt sl2_order(std::uint32_t p) {
  return ExactInt(p) * (ExactInt(p) * p - 1);
}

void for_each_orbit(const StateCodec& codec,
                    const std::function<void(std::uint64_t, std::uint64_t)>& visit) {
  sweep_orbits(codec, visit);
}

std::vector<PairState> orbit_of(const PairState& s) {
  const StateCodec codec(s.spec());
  const std::uint64_t start = state_index(s);
  std::unordered_set<std::uint64_t> seen{start};
  std::vector<std::uint64_t> frontier{start};
  while (!frontier.empty()) {
    const std::uint64_t cur = frontier.back();
    frontier.pop_back();
    for (const std::uint64_t next : {codec.apply_s(cur), codec.apply_t(cur)}) {
      if (seen.insert(next).second) frontier.push_back(next);
    }
  }
  std::vector<std::uint64_t> sorted(seen.begin(), seen.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<PairState> out;
  out.reserve(sorted.size());
  for (const std::uint64_t index : sorted) out.push_back(state_from_index(index, s.spec_ref()));
  return out;
}

CensusReport count_orbits_bfs(const GroupSpec& spec, const Budget& budget,
                              bool with_summaries) {
  if (with_summaries) {
    std::vector<OrbitSummary> summaries = orbit_summaries(spec, budget);
    ExactInt count(summaries.size());
    return CensusReport{spec, CensusMethod::Bfs, std::move(count), std::move(summaries)};
  }
  check_state_budget(spec, budget.max_states);
  const StateCodec codec(spec);
  std::uint64_t count = 0;
  sweep_orbits(codec, [&](std::uint64_t, std::uint64_t) { ++count; });
  return CensusReport{spec, CensusMethod::Bfs, ExactInt(count), std::nullopt};
}

std::vector<OrbitSummary> orbit_summaries(const GroupSpec& spec, const Budget& budget) {
  check_state_budget(spec, budget.max_states);
  const StateCodec codec(spec);
  const SpecRef ref = make_spec(spec);
  const auto prime = spec.uniform_prime();
  const std::optional<ExactInt> group_order =
      prime ? std::optional<ExactInt>(sl2_order(*prime)) : std::nullopt;

  std::vector<OrbitSummary> out;
  sweep_orbits(codec, [&](std::uint64_t rep, std::uint64_t size) {
    OrbitSummary summary{state_from_index(rep, ref), ExactInt(size), std::nullopt};
    if (group_order) summary.stabilizer_order = exact_div(*group_order, summary.size);
    out.push_back(std::move(summary));
  });
  return out;
}

std::uint64_t canonical_index(const StateCodec& codec, std::span<const Mat2> group,
                              std::uint64_t index) noexcept {
  std::uint64_t best = index;
  for (const Mat2& A : group) best = std::min(best, codec.apply_mat(index, A));
  return best;
}

PairState canonical_form(const PairState& s) {
  const std::uint32_t p = require_uniform_prime(s.spec());
  const StateCodec codec(s.spec());
  const std::vector<Mat2> group = enumerate_sl2(p);
  return state_from_index(canonical_index(codec, group, state_index(s)), s.spec_ref());
}

std::uint64_t count_canonical_in_range(const StateCodec& codec, std::span<const Mat2> group,
                                       std::uint64_t begin, std::uint64_t end) {
  end = std::min(end, codec.state_count());
  std::uint64_t count = 0;
  for (std::uint64_t index = begin; index < end; ++index) {
    const bool minimal = std::none_of(group.begin(), group.end(), [&](const Mat2& A) {
      return codec.apply_mat(index, A) < index;
    });
    if (minimal) ++count;
  }
  return count;
}

CensusReport count_orbits_canonical(const GroupSpec& spec, const Budget& budget,
                                    unsigned threads) {
  const std::uint32_t p = require_uniform_prime(spec);
  check_state_budget(spec, budget.max_states);
  const StateCodec codec(spec);
  const std::vector<Mat2> group = enumerate_sl2(p);

  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  const std::uint64_t total = codec.state_count();
  // Small spaces are not worth a thread each.
  threads = static_cast<unsigned>(
      std::min<std::uint64_t>(threads, std::max<std::uint64_t>(1, total / 4096)));

  std::uint64_t count = 0;
  if (threads <= 1) {
    count = count_canonical_in_range(codec, group, 0, total);
  } else {
    std::vector<std::uint64_t> partial(threads, 0);
    {
      std::vector<std::jthread> workers;
      const std::uint64_t chunk = (total + threads - 1) / threads;
      for (unsigned t = 0; t < threads; ++t) {
        workers.emplace_back([&, t] {
          partial[t] = count_canonical_in_range(codec, group, t * chunk, (t + 1) * chunk);
        });
      }
    }
    for (const std::uint64_t c : partial) count += c;
  }
  return CensusReport{spec, CensusMethod::Canonical, ExactInt(count), std::nullopt};
}

ExactInt burnside_fixed_point_sum(const GroupSpec& spec, std::span<const Mat2> group) {
  const std::uint32_t p = require_uniform_prime(spec);
  // p^(n * dim) for dim in {0, 1, 2}
  const ExactInt by_dimension[3] = {1, ipow(p, spec.rank()), ipow(p, 2 * spec.rank())};
  ExactInt sum = 0;
  for (const Mat2& A : group) {
    if (A.modulus() != p) {
      throw Error(ErrorCode::Incompatible, "matrix modulus does not match the group");
    }
    sum += by_dimension[fixed_space_dimension(A)];
  }
  return sum;
}

CensusReport count_orbits_burnside(const GroupSpec& spec) {
  const std::uint32_t p = require_uniform_prime(spec);
  const std::vector<Mat2> group = enumerate_sl2(p);
  const ExactInt total = burnside_fixed_point_sum(spec, group);
  return CensusReport{spec, CensusMethod::Burnside, exact_div(total, sl2_order(p)),
                      std::nullopt};
}

}  // namespace orbitlab
