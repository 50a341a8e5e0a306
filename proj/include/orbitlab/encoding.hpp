#pragma once

// Letter-to-row map 1 -> 00, 2 -> 10, 3 -> 11, 4 -> 01 sending a word of
// length m to a pair state over Z_2^m (first bit in g, second in k), and an
// exhaustive check of how that map meets the SL(2,Z_2) orbits.

#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "orbitlab/budget.hpp"
#include "orbitlab/exact_int.hpp"
#include "orbitlab/residue.hpp"
#include "orbitlab/rg_language.hpp"

namespace orbitlab {

struct BitRow {
  std::uint8_t g;
  std::uint8_t k;
  friend bool operator==(const BitRow&, const BitRow&) = default;
};

BitRow encode_letter(int letter);

/// Throws Error(InvalidArgument) for the empty word.
PairState encode_word(const RGWord& word);

struct BridgeReport {
  std::size_t m = 0;
  ExactInt word_count;
  ExactInt orbit_count;
  bool is_injective_on_orbits = false;
  bool is_surjective_on_orbits = false;
  /// (earlier word, later word) pairs landing in the same orbit.
  std::vector<std::pair<RGWord, RGWord>> collisions;
  /// Canonical representatives of orbits no word reaches.
  std::vector<PairState> missed_orbits;

  bool is_bijective() const noexcept {
    return is_injective_on_orbits && is_surjective_on_orbits;
  }
};

/// Maps a word (as letters) to the state_index of its image.
using IndexEncoder = std::function<std::uint64_t(std::span<const std::uint8_t>)>;

/// Compares the images of all words of length m under `encode` with the
/// orbits of `target` (which must be Z_p^n for a prime p): every word is
/// reduced to its canonical form, repeats become collision certificates and
/// orbits nobody reaches become missed certificates.
BridgeReport verify_encoding(std::size_t m, const GroupSpec& target, const IndexEncoder& encode,
                             const Budget& budget = {});

/// verify_encoding with the letter map above, over Z_2^m.
BridgeReport verify_bridge(std::size_t m, const Budget& budget = {});

}  // namespace orbitlab
