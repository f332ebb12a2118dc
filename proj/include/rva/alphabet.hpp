#pragma once

/**
 * @file alphabet.hpp
 * @brief Digit-vector alphabets with a separator letter.
 *
 * A parallel alphabet over base b and dimension d contains the d-vectors
 * of digits plus the separator `*`. Components listed in `fixed` carry the
 * atomic symbol `_` (box) instead of a digit. A sequential alphabet contains
 * the single digits plus `*`; when it is fixed it also carries `_`.
 *
 * Letter order: non-star letters by mixed-radix value over the non-fixed
 * components, component 0 most significant; the box letter of a fixed
 * sequential alphabet follows the digits; `*` is always last.
 */

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace rva {

using StateId = std::uint32_t;
using LetterIndex = std::uint32_t;

/// Symbol value used for the box placeholder of a fixed component.
inline constexpr int kBox = -1;

enum class EncodingKind { parallel, sequential };

inline std::string to_string(EncodingKind kind) {
  return kind == EncodingKind::parallel ? "parallel" : "sequential";
}

/// One letter: either the separator or a vector of symbols (digits or kBox).
/// Sequential letters have exactly one symbol.
struct Letter {
  bool star = false;
  std::vector<int> symbols;

  static Letter separator() { return Letter{true, {}}; }
  static Letter digits(std::vector<int> s) { return Letter{false, std::move(s)}; }

  bool operator==(const Letter&) const = default;
  auto operator<=>(const Letter&) const = default;
};

inline std::string to_string(const Letter& letter) {
  if (letter.star) return "*";
  std::string out;
  for (std::size_t i = 0; i < letter.symbols.size(); ++i) {
    if (i) out += ',';
    out += letter.symbols[i] == kBox ? std::string("_") : std::to_string(letter.symbols[i]);
  }
  return out;
}

class AlphabetSpec {
 public:
  AlphabetSpec() = default;

  AlphabetSpec(int base, int dim, EncodingKind kind, std::vector<int> fixed = {})
      : base_(base), dim_(dim), kind_(kind), fixed_(std::move(fixed)) {
    if (base_ < 2) throw std::invalid_argument("alphabet: base must be >= 2");
    if (dim_ < 1) throw std::invalid_argument("alphabet: dimension must be >= 1");
    std::sort(fixed_.begin(), fixed_.end());
    fixed_.erase(std::unique(fixed_.begin(), fixed_.end()), fixed_.end());
    for (int f : fixed_) {
      if (f < 0 || f >= dim_) throw std::invalid_argument("alphabet: fixed component out of range");
    }
    if (kind_ == EncodingKind::sequential && !fixed_.empty() &&
        (fixed_.size() != 1 || fixed_.front() != dim_ - 1)) {
      throw std::invalid_argument("alphabet: a sequential alphabet can only fix component d-1");
    }
    if (kind_ == EncodingKind::parallel) {
      digit_letters_ = 1;
      for (int i = 0; i < dim_ - static_cast<int>(fixed_.size()); ++i) {
        if (digit_letters_ > (std::size_t{1} << 40) / static_cast<std::size_t>(base_)) {
          throw std::invalid_argument("alphabet: too many letters");
        }
        digit_letters_ *= static_cast<std::size_t>(base_);
      }
    } else {
      digit_letters_ = static_cast<std::size_t>(base_) + (fixed_.empty() ? 0 : 1);
    }
  }

  int base() const { return base_; }
  int dim() const { return dim_; }
  EncodingKind kind() const { return kind_; }
  const std::vector<int>& fixed() const { return fixed_; }
  bool is_fixed(int component) const {
    return std::binary_search(fixed_.begin(), fixed_.end(), component);
  }

  /// Number of non-star letters.
  std::size_t digit_letter_count() const { return digit_letters_; }
  std::size_t size() const { return digit_letters_ + 1; }
  LetterIndex star_index() const { return static_cast<LetterIndex>(digit_letters_); }
  bool is_star(LetterIndex index) const { return index == star_index(); }

  /// Number of symbols in a non-star letter.
  int letter_width() const { return kind_ == EncodingKind::parallel ? dim_ : 1; }

  LetterIndex index_of(const Letter& letter) const {
    if (letter.star) {
      if (!letter.symbols.empty()) throw std::invalid_argument("letter: separator with symbols");
      return star_index();
    }
    if (static_cast<int>(letter.symbols.size()) != letter_width()) {
      throw std::invalid_argument("letter: expected " + std::to_string(letter_width()) +
                                  " component(s), got " + std::to_string(letter.symbols.size()));
    }
    if (kind_ == EncodingKind::sequential) {
      const int s = letter.symbols.front();
      if (s == kBox) {
        if (fixed_.empty()) throw std::invalid_argument("letter: box in an unfixed alphabet");
        return static_cast<LetterIndex>(base_);
      }
      check_digit(s);
      return static_cast<LetterIndex>(s);
    }
    std::size_t index = 0;
    for (int i = 0; i < dim_; ++i) {
      const int s = letter.symbols[static_cast<std::size_t>(i)];
      if (is_fixed(i)) {
        if (s != kBox) throw std::invalid_argument("letter: component " + std::to_string(i) + " must be _");
        continue;
      }
      if (s == kBox) throw std::invalid_argument("letter: _ in non-fixed component " + std::to_string(i));
      check_digit(s);
      index = index * static_cast<std::size_t>(base_) + static_cast<std::size_t>(s);
    }
    return static_cast<LetterIndex>(index);
  }

  Letter letter_at(LetterIndex index) const {
    if (index > star_index()) throw std::out_of_range("letter index out of range");
    if (is_star(index)) return Letter::separator();
    if (kind_ == EncodingKind::sequential) {
      return Letter::digits({static_cast<int>(index) == base_ ? kBox : static_cast<int>(index)});
    }
    std::vector<int> symbols(static_cast<std::size_t>(dim_), kBox);
    std::size_t rest = index;
    for (int i = dim_ - 1; i >= 0; --i) {
      if (is_fixed(i)) continue;
      symbols[static_cast<std::size_t>(i)] = static_cast<int>(rest % static_cast<std::size_t>(base_));
      rest /= static_cast<std::size_t>(base_);
    }
    return Letter::digits(std::move(symbols));
  }

  /// Index of the letter whose every digit component is `digit`.
  LetterIndex uniform_letter(int digit) const {
    std::vector<int> symbols(static_cast<std::size_t>(letter_width()));
    for (int i = 0; i < letter_width(); ++i) {
      symbols[static_cast<std::size_t>(i)] =
          (kind_ == EncodingKind::parallel && is_fixed(i)) ? kBox : digit;
    }
    return index_of(Letter::digits(std::move(symbols)));
  }

  bool operator==(const AlphabetSpec&) const = default;

 private:
  void check_digit(int s) const {
    if (s < 0 || s >= base_) {
      throw std::invalid_argument("letter: digit " + std::to_string(s) + " outside [0," +
                                  std::to_string(base_ - 1) + "]");
    }
  }

  int base_ = 2;
  int dim_ = 1;
  EncodingKind kind_ = EncodingKind::parallel;
  std::vector<int> fixed_;
  std::size_t digit_letters_ = 2;
};

inline LetterIndex letter_index(const Letter& letter, const AlphabetSpec& alphabet) {
  return alphabet.index_of(letter);
}

}  // namespace rva
