#pragma once

// Restricted-growth words over {1,2,3,4}. An implicit leading 1 is assumed,
// so a word's first letter is 1 or 2 and every later letter is at most one
// more than the largest letter before it.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "orbitlab/budget.hpp"
#include "orbitlab/exact_int.hpp"

namespace orbitlab {

inline constexpr int kAlphabetSize = 4;

class RGWord {
 public:
  RGWord() = default;
  /// Throws Error(InvalidArgument) naming the first violated constraint.
  static RGWord from_letters(std::vector<std::uint8_t> letters);
  /// Digit string such as "234".
  static RGWord parse(std::string_view digits);

  std::span<const std::uint8_t> letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  std::string str() const;

  friend auto operator<=>(const RGWord&, const RGWord&) = default;

 private:
  explicit RGWord(std::vector<std::uint8_t> letters) : letters_(std::move(letters)) {}

  std::vector<std::uint8_t> letters_;
};

bool is_valid_word(std::span<const int> letters) noexcept;
bool is_valid_word(std::string_view digits) noexcept;

/// Description of the first violated constraint, or nullopt for a valid word.
std::optional<std::string> word_violation(std::span<const int> letters);
std::optional<std::string> word_violation(std::string_view digits);

/// Visits every valid word of length m in lexicographic order. The span is
/// only valid during the call.
void for_each_word(std::size_t m,
                   const std::function<void(std::span<const std::uint8_t>)>& visit);

/// Throws Error(Budget) when count_words(m) exceeds the budget.
std::vector<RGWord> enumerate_words(std::size_t m, const Budget& budget = {});

/// Dynamic programme over the running maximum.
ExactInt count_words(std::size_t m);

}  // namespace orbitlab
