#include "orbitlab/rg_language.hpp"

#include <algorithm>
#include <array>

#include "orbitlab/error.hpp"

namespace orbitlab {

namespace {

// Running maximum starts at the dismissed leading 1.
constexpr int kImplicitFirstLetter = 1;

std::optional<std::string> first_violation(std::span<const int> letters) {
  int running_max = kImplicitFirstLetter;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    const int letter = letters[i];
    const std::string where = "letter " + std::to_string(letter) + " at position " +
                              std::to_string(i + 1);
    if (letter < 1 || letter > kAlphabetSize) {
      return where + " is outside the alphabet {1,2,3,4}";
    }
    if (letter > running_max + 1) {
      return where + " breaks the growth bound: it may be at most " +
             std::to_string(running_max + 1) + " (running maximum " +
             std::to_string(running_max) + " plus 1)";
    }
    running_max = std::max(running_max, letter);
  }
  return std::nullopt;
}

// Digits map to their value; anything else maps to -1, which fails the
// alphabet check.
std::vector<int> digits_to_letters(std::string_view digits) {
  std::vector<int> letters;
  letters.reserve(digits.size());
  for (const char ch : digits) letters.push_back(ch >= '0' && ch <= '9' ? ch - '0' : -1);
  return letters;
}

}  // namespace

RGWord RGWord::from_letters(std::vector<std::uint8_t> letters) {
  const std::vector<int> wide(letters.begin(), letters.end());
  if (auto why = first_violation(wide)) throw Error(ErrorCode::InvalidArgument, *why);
  return RGWord(std::move(letters));
}

RGWord RGWord::parse(std::string_view digits) {
  const std::vector<int> letters = digits_to_letters(digits);
  if (auto why = first_violation(letters)) {
    throw Error(ErrorCode::InvalidArgument, "invalid word \"" + std::string(digits) + "\": " + *why);
  }
  return RGWord(std::vector<std::uint8_t>(letters.begin(), letters.end()));
}

std::string RGWord::str() const {
  std::string out;
  out.reserve(letters_.size());
  for (const std::uint8_t letter : letters_) out += static_cast<char>('0' + letter);
  return out;
}

bool is_valid_word(std::span<const int> letters) noexcept {
  int running_max = kImplicitFirstLetter;
  for (const int letter : letters) {
    if (letter < 1 || letter > std::min(kAlphabetSize, running_max + 1)) return false;
    running_max = std::max(running_max, letter);
  }
  return true;
}

bool is_valid_word(std::string_view digits) noexcept {
  int running_max = kImplicitFirstLetter;
  for (const char ch : digits) {
    const int letter = ch - '0';
    if (letter < 1 || letter > std::min(kAlphabetSize, running_max + 1)) return false;
    running_max = std::max(running_max, letter);
  }
  return true;
}

std::optional<std::string> word_violation(std::span<const int> letters) {
  return first_violation(letters);
}

std::optional<std::string> word_violation(std::string_view digits) {
  return first_violation(digits_to_letters(digits));
}

void for_each_word(std::size_t m,
                   const std::function<void(std::span<const std::uint8_t>)>& visit) {
  // Odometer over prefix extensions: position i may take 1..min(4, max_i + 1)
  // where max_i is the running maximum of everything before it.
  std::vector<std::uint8_t> letters(m, 1);
  std::vector<std::uint8_t> prefix_max(m + 1, kImplicitFirstLetter);
  for (;;) {
    visit(letters);
    // Find the rightmost position that can still grow.
    std::size_t pos = m;
    while (pos > 0) {
      const std::size_t i = pos - 1;
      const int limit = std::min(kAlphabetSize, prefix_max[i] + 1);
      if (letters[i] < limit) break;
      --pos;
    }
    if (pos == 0) return;
    const std::size_t i = pos - 1;
    ++letters[i];
    prefix_max[i + 1] = std::max(prefix_max[i], letters[i]);
    for (std::size_t j = i + 1; j < m; ++j) {
      letters[j] = 1;
      prefix_max[j + 1] = prefix_max[j];
    }
  }
}

std::vector<RGWord> enumerate_words(std::size_t m, const Budget& budget) {
  const ExactInt count = count_words(m);
  if (count > budget.max_states) {
    throw Error(ErrorCode::Budget, "length " + std::to_string(m) + " has " + to_decimal(count) +
                                       " words, above the budget of " +
                                       std::to_string(budget.max_states));
  }
  std::vector<RGWord> out;
  out.reserve(static_cast<std::size_t>(count));
  for_each_word(m, [&](std::span<const std::uint8_t> letters) {
    out.push_back(RGWord::from_letters({letters.begin(), letters.end()}));
  });
  return out;
}

ExactInt count_words(std::size_t m) {
  // ways[M-1] = number of prefixes whose running maximum is M.
  std::array<ExactInt, kAlphabetSize> ways{};
  ways[kImplicitFirstLetter - 1] = 1;
  for (std::size_t step = 0; step < m; ++step) {
    std::array<ExactInt, kAlphabetSize> next{};
    for (int max = 1; max <= kAlphabetSize; ++max) {
      const ExactInt& here = ways[max - 1];
      if (here == 0) continue;
      next[max - 1] += here * max;  // any letter 1..max keeps the maximum
      if (max < kAlphabetSize) next[max] += here;  // letter max+1 raises it
    }
    ways = std::move(next);
  }
  ExactInt total = 0;
  for (const ExactInt& w : ways) total += w;
  return total;
}

}  // namespace orbitlab
