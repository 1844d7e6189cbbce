#include "nilideal/word.hpp"

#include <algorithm>
#include <sstream>

namespace nilideal {

Word Word::from_letters(std::span<const Letter> letters) {
  std::string bytes;
  bytes.reserve(letters.size());
  for (Letter x : letters) bytes.push_back(static_cast<char>(x));
  return from_bytes(std::move(bytes));
}

Word Word::from_bytes(std::string bytes) {
  if (bytes.empty()) {
    throw std::invalid_argument("a word is Zero or a nonempty letter sequence");
  }
  for (char c : bytes) {
    if (static_cast<unsigned char>(c) >= kAlphabetSize) {
      throw std::invalid_argument("byte out of letter range");
    }
  }
  return Word(false, std::move(bytes));
}

Word concat(const Word& a, const Word& b) {
  if (a.is_zero() || b.is_zero()) return Word::zero();
  return Word::from_bytes(a.bytes() + b.bytes());
}

Word parse_word(std::string_view text) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i > start) tokens.push_back(text.substr(start, i - start));
  }
  if (tokens.empty()) throw ParseError("empty input: expected a word");

  std::string bytes;
  bytes.reserve(tokens.size());
  for (std::size_t k = 0; k < tokens.size(); ++k) {
    if (tokens[k] == "0") {
      if (tokens.size() != 1) {
        std::ostringstream msg;
        msg << "token \"0\" at position " << (k + 1)
            << " must appear alone";
        throw ParseError(msg.str());
      }
      return Word::zero();
    }
    auto letter = letter_from_token(tokens[k]);
    if (!letter) {
      std::ostringstream msg;
      msg << "unknown token \"" << tokens[k] << "\" at position " << (k + 1);
      throw ParseError(msg.str());
    }
    bytes.push_back(static_cast<char>(*letter));
  }
  return Word::from_bytes(std::move(bytes));
}

std::string format_word(const Word& w) {
  if (w.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out.push_back(' ');
    out += letter_name(w.at(i));
  }
  return out;
}

std::vector<std::size_t> find_factor(const Word& w, const Word& f) {
  if (f.is_zero() || f.size() == 0) {
    throw std::invalid_argument("factor must be a nonempty non-Zero word");
  }
  std::vector<std::size_t> positions;
  if (w.is_zero()) return positions;
  const std::string& hay = w.bytes();
  const std::string& needle = f.bytes();
  for (std::size_t p = hay.find(needle); p != std::string::npos;
       p = hay.find(needle, p + 1)) {
    positions.push_back(p);
  }
  return positions;
}

std::vector<SquareOccurrence> find_squares(const Word& w) {
  if (w.is_zero()) throw std::invalid_argument("find_squares: word is Zero");
  const std::string& b = w.bytes();
  const std::size_t n = b.size();
  std::vector<SquareOccurrence> out;
  for (std::size_t k = 1; 2 * k <= n; ++k) {
    // run = length of the common prefix of b[p..] and b[p+k..]; a square of
    // half-length k starts at p exactly when run >= k.
    std::size_t run = 0;
    for (std::size_t p = n - k; p-- > 0;) {
      run = (b[p] == b[p + k]) ? run + 1 : 0;
      if (p + 2 * k <= n && run >= k) out.push_back({p, k});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace nilideal
