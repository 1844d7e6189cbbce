#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

namespace nilideal {

/// The 14 sequence-admissible letters. The absorbing zero is not a letter;
/// it lives at the Word level so no sequence can embed it.
enum class Letter : std::uint8_t {
  L,
  M,
  P,
  Q,
  R,
  g,
  s1,
  s2,
  t1,
  t2,
  t3,
  a1,
  a2,
  a3,
};

inline constexpr std::size_t kAlphabetSize = 14;

inline constexpr std::array<Letter, kAlphabetSize> kAlphabet = {
    Letter::L,  Letter::M,  Letter::P,  Letter::Q,  Letter::R,
    Letter::g,  Letter::s1, Letter::s2, Letter::t1, Letter::t2,
    Letter::t3, Letter::a1, Letter::a2, Letter::a3,
};

constexpr std::string_view letter_name(Letter x) {
  constexpr std::string_view names[kAlphabetSize] = {
      "L", "M", "P", "Q", "R", "g", "s1", "s2", "t1", "t2", "t3",
      "a1", "a2", "a3"};
  return names[static_cast<std::size_t>(x)];
}

/// nullopt for anything that is not one of the 14 letter tokens
/// (in particular "0", which is handled by the word parser).
constexpr std::optional<Letter> letter_from_token(std::string_view token) {
  for (Letter x : kAlphabet) {
    if (letter_name(x) == token) return x;
  }
  return std::nullopt;
}

constexpr bool is_a(Letter x) {
  return x == Letter::a1 || x == Letter::a2 || x == Letter::a3;
}

constexpr bool is_s(Letter x) { return x == Letter::s1 || x == Letter::s2; }

constexpr bool is_t(Letter x) {
  return x == Letter::t1 || x == Letter::t2 || x == Letter::t3;
}

/// 1-based index of an a/s/t letter within its group (a2 -> 2, t3 -> 3).
constexpr int group_index(Letter x) {
  switch (x) {
    case Letter::a1:
    case Letter::s1:
    case Letter::t1:
      return 1;
    case Letter::a2:
    case Letter::s2:
    case Letter::t2:
      return 2;
    case Letter::a3:
    case Letter::t3:
      return 3;
    default:
      return 0;
  }
}

constexpr Letter a_letter(int i) {
  return static_cast<Letter>(static_cast<int>(Letter::a1) + (i - 1));
}

constexpr Letter t_letter(int i) {
  return static_cast<Letter>(static_cast<int>(Letter::t1) + (i - 1));
}

constexpr Letter s_letter(int j) {
  return j == 1 ? Letter::s1 : Letter::s2;
}

}  // namespace nilideal
