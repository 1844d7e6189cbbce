#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nilideal/errors.hpp"
#include "nilideal/letter.hpp"

namespace nilideal {

/// A semigroup element: either the absorbing Zero or a nonempty letter
/// sequence. Immutable after construction.
///
/// Letters are stored as one byte each (the Letter enum value), so factor
/// search and set membership reduce to plain byte-string operations.
class Word {
 public:
  static Word zero() { return Word(true, {}); }

  static Word of(std::initializer_list<Letter> letters) {
    return from_letters({letters.begin(), letters.end()});
  }

  static Word from_letters(std::span<const Letter> letters);

  /// Adopts a raw byte string of Letter values. Empty input is rejected:
  /// the empty sequence is not an element.
  static Word from_bytes(std::string bytes);

  bool is_zero() const { return zero_; }

  /// Letter count; 0 only for Zero.
  std::size_t size() const { return bytes_.size(); }

  Letter at(std::size_t i) const { return static_cast<Letter>(bytes_[i]); }

  std::span<const Letter> letters() const {
    return {reinterpret_cast<const Letter*>(bytes_.data()), bytes_.size()};
  }

  /// Underlying byte representation; empty iff Zero.
  const std::string& bytes() const { return bytes_; }

  friend bool operator==(const Word& a, const Word& b) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (a.zero_ != b.zero_) return a.zero_ ? std::strong_ordering::less
                                           : std::strong_ordering::greater;
    return a.bytes_ <=> b.bytes_;
  }

 private:
  Word(bool zero, std::string bytes) : zero_(zero), bytes_(std::move(bytes)) {}

  bool zero_;
  std::string bytes_;
};

/// Zero is absorbing: any composition with Zero yields Zero.
Word concat(const Word& a, const Word& b);

/// Parses whitespace-separated letter tokens; the token "0" alone is Zero.
/// Throws ParseError on unknown tokens (named, with 1-based token position),
/// on empty input, and on "0" mixed with letters.
Word parse_word(std::string_view text);

/// Inverse of parse_word: space-joined tokens, "0" for Zero.
std::string format_word(const Word& w);

/// All start indices of factor f in w, in increasing order, overlaps
/// included. Empty if w is Zero. f must be a nonempty non-Zero word.
std::vector<std::size_t> find_factor(const Word& w, const Word& f);

struct SquareOccurrence {
  std::size_t position;
  std::size_t half_length;
  friend bool operator==(const SquareOccurrence&,
                         const SquareOccurrence&) = default;
  friend auto operator<=>(const SquareOccurrence&,
                          const SquareOccurrence&) = default;
};

/// Every (p, k) with letters[p..p+k) == letters[p+k..p+2k), sorted by
/// (position, half_length). Empty result means w is square-free.
/// Runs one O(n) scan per shift k, O(n^2) total. w must not be Zero.
std::vector<SquareOccurrence> find_squares(const Word& w);

}  // namespace nilideal

template <>
struct std::hash<nilideal::Word> {
  std::size_t operator()(const nilideal::Word& w) const noexcept {
    return std::hash<std::string>{}(w.bytes()) ^ (w.is_zero() ? 0x9e3779b9u : 0u);
  }
};
