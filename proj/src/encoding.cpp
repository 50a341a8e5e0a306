#include "orbitlab/encoding.hpp"

#include <unordered_map>

#include "orbitlab/error.hpp"
#include "orbitlab/orbits.hpp"
#include "orbitlab/state_codec.hpp"

namespace orbitlab {

namespace {

constexpr std::uint32_t kBinary = 2;

// Hits are tracked in bitmaps over the index space; a second pass over the
// words names collision pairs only when the first pass saw any.
BridgeReport compare_with_orbits(std::size_t m, const GroupSpec& spec,
                                 const IndexEncoder& encode) {
  const std::uint32_t p = *spec.uniform_prime();
  const StateCodec codec(spec);
  const std::vector<Mat2> group = enumerate_sl2(p);

  BridgeReport report;
  report.m = m;

  std::vector<bool> hit(codec.state_count(), false);
  std::vector<bool> repeated(codec.state_count(), false);
  std::uint64_t words = 0;
  bool any_repeat = false;
  for_each_word(m, [&](std::span<const std::uint8_t> letters) {
    ++words;
    const std::uint64_t image = encode(letters);
    if (image >= codec.state_count()) {
      throw Error(ErrorCode::InvalidArgument, "encoder produced an index outside the group");
    }
    const std::uint64_t canon = canonical_index(codec, group, image);
    if (hit[canon]) {
      repeated[canon] = true;
      any_repeat = true;
    }
    hit[canon] = true;
  });
  report.word_count = words;

  if (any_repeat) {
    std::unordered_map<std::uint64_t, RGWord> first_word;
    for_each_word(m, [&](std::span<const std::uint8_t> letters) {
      const std::uint64_t canon = canonical_index(codec, group, encode(letters));
      if (!repeated[canon]) return;
      RGWord word = RGWord::from_letters({letters.begin(), letters.end()});
      auto [it, inserted] = first_word.try_emplace(canon, word);
      if (!inserted) report.collisions.emplace_back(it->second, std::move(word));
    });
  }

  const SpecRef ref = make_spec(spec);
  std::uint64_t orbits = 0;
  for_each_orbit(codec, [&](std::uint64_t rep, std::uint64_t) {
    ++orbits;
    if (!hit[rep]) report.missed_orbits.push_back(state_from_index(rep, ref));
  });
  report.orbit_count = orbits;
  report.is_injective_on_orbits = report.collisions.empty();
  report.is_surjective_on_orbits = report.missed_orbits.empty();
  return report;
}

}  // namespace

BitRow encode_letter(int letter) {
  switch (letter) {
    case 1: return {0, 0};
    case 2: return {1, 0};
    case 3: return {1, 1};
    case 4: return {0, 1};
    default:
      throw Error(ErrorCode::InvalidArgument,
                  "letter " + std::to_string(letter) + " is outside the alphabet {1,2,3,4}");
  }
}

PairState encode_word(const RGWord& word) {
  if (word.size() == 0) {
    throw Error(ErrorCode::InvalidArgument, "cannot encode the empty word");
  }
  const SpecRef spec = make_spec(GroupSpec::uniform(kBinary, word.size()));
  std::vector<std::int64_t> g, k;
  g.reserve(word.size());
  k.reserve(word.size());
  for (const std::uint8_t letter : word.letters()) {
    const BitRow row = encode_letter(letter);
    g.push_back(row.g);
    k.push_back(row.k);
  }
  return PairState::make(spec, g, k);
}

BridgeReport verify_encoding(std::size_t m, const GroupSpec& target, const IndexEncoder& encode,
                             const Budget& budget) {
  if (!target.is_uniform_prime()) {
    throw Error(ErrorCode::Incompatible, "encoding target must be Z_p^n for a prime p");
  }
  check_state_budget(target, budget.max_states);
  return compare_with_orbits(m, target, encode);
}

BridgeReport verify_bridge(std::size_t m, const Budget& budget) {
  if (m == 0) throw Error(ErrorCode::InvalidArgument, "bridge length must be at least 1");
  const GroupSpec spec = GroupSpec::uniform(kBinary, m);
  // Bit-packed index of the encoded state: row i contributes bit (m-1-i) of
  // each column.
  auto encode = [m](std::span<const std::uint8_t> letters) {
    std::uint64_t g = 0;
    std::uint64_t k = 0;
    for (const std::uint8_t letter : letters) {
      const BitRow row = encode_letter(letter);
      g = (g << 1) | row.g;
      k = (k << 1) | row.k;
    }
    return (g << m) | k;
  };
  return verify_encoding(m, spec, encode, budget);
}

}  // namespace orbitlab
