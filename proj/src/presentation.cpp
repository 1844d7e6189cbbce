#include "nilideal/presentation.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace nilideal {

namespace {

Word word_of(std::initializer_list<Letter> letters) { return Word::of(letters); }

Rule equality(std::initializer_list<Letter> lhs,
              std::initializer_list<Letter> rhs, int family) {
  return Rule{word_of(lhs), word_of(rhs), family, RuleKind::Equality};
}

Rule annihilation(std::initializer_list<Letter> lhs, int family) {
  return Rule{word_of(lhs), Word::zero(), family, RuleKind::Annihilation};
}

int weighted_length(const Word& w) {
  int total = static_cast<int>(w.size());
  for (Letter x : w.letters()) {
    if (x == Letter::L) total += 4;
    if (x == Letter::g) total += 2;
  }
  return total;
}

}  // namespace

std::string family_tag(int family) {
  if (family == kAuxFamily) return "aux";
  return "rel " + std::to_string(family);
}

Presentation::Presentation(std::vector<Rule> rules, PresentationOptions options)
    : rules_(std::move(rules)), options_(options) {
  if (rules_.empty()) {
    throw ValidationError("presentation has no rules");
  }
  std::map<int, std::size_t> family_counts;
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    const Rule& r = rules_[i];
    std::ostringstream where;
    where << "rule " << i << " (" << format_word(r.lhs) << " -> "
          << format_word(r.rhs) << "): ";
    if (r.lhs.is_zero() || r.lhs.size() == 0) {
      throw ValidationError(where.str() + "lhs must be a nonempty word");
    }
    if (r.family != kAuxFamily && (r.family < 1 || r.family > 14)) {
      throw ValidationError(where.str() + "family must be 1..14 or aux");
    }
    if ((r.kind == RuleKind::Annihilation) != r.rhs.is_zero()) {
      throw ValidationError(where.str() + "kind does not match rhs");
    }
    if (!r.rhs.is_zero() && r.rhs.size() == 0) {
      throw ValidationError(where.str() + "rhs must be a word or Zero");
    }
    if (!r.rhs.is_zero()) {
      for (Letter x : r.rhs.letters()) {
        if (x == Letter::L) {
          throw ValidationError(where.str() + "rhs must not contain L");
        }
      }
    }
    if (r.is_annihilation()) {
      annihilation_indices_.push_back(i);
    } else {
      equality_indices_.push_back(i);
    }
    sub_index_.push_back(family_counts[r.family]++);
  }
}

std::size_t Presentation::sub_index(std::size_t rule_index) const {
  return sub_index_.at(rule_index);
}

std::size_t Presentation::family_size(int family) const {
  std::size_t n = 0;
  for (const Rule& r : rules_) n += (r.family == family);
  return n;
}

std::optional<std::size_t> Presentation::rule_at(int family,
                                                 std::size_t sub) const {
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    if (rules_[i].family == family && sub_index_[i] == sub) return i;
  }
  return std::nullopt;
}

Presentation standard_presentation(bool include_taq_zero) {
  using enum Letter;
  std::vector<Rule> rules;
  rules.reserve(96);

  // (1) x L = x M = 0 for every letter x
  for (Letter x : kAlphabet) rules.push_back(annihilation({x, L}, 1));
  for (Letter x : kAlphabet) rules.push_back(annihilation({x, M}, 1));

  // (2) L = M P g
  rules.push_back(equality({L}, {M, P, g}, 2));

  // (3) g a_i = a_i g
  for (int i = 1; i <= 3; ++i) {
    rules.push_back(equality({g, a_letter(i)}, {a_letter(i), g}, 3));
  }

  // (4) g x = 0 for x outside {a1, a2, a3}
  for (Letter x : kAlphabet) {
    if (!is_a(x)) rules.push_back(annihilation({g, x}, 4));
  }

  // (5) a_i g a_j = a_i R s1 Q a_j
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      rules.push_back(equality({a_letter(i), g, a_letter(j)},
                               {a_letter(i), R, s1, Q, a_letter(j)}, 5));
    }
  }

  // (6) t_i x = x t_i for x in {R, a1, a2, a3}
  for (int i = 1; i <= 3; ++i) {
    for (Letter x : {R, a1, a2, a3}) {
      rules.push_back(equality({t_letter(i), x}, {x, t_letter(i)}, 6));
    }
  }

  // (7) P a_i t_i = a_i P s1
  for (int i = 1; i <= 3; ++i) {
    rules.push_back(equality({P, a_letter(i), t_letter(i)},
                             {a_letter(i), P, s1}, 7));
  }

  // (8) P a_j t_i = a_j P s2 for i != j
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      if (i == j) continue;
      rules.push_back(equality({P, a_letter(j), t_letter(i)},
                               {a_letter(j), P, s2}, 8));
    }
  }

  // (9) s_j a_i = a_i s_j
  for (int j = 1; j <= 2; ++j) {
    for (int i = 1; i <= 3; ++i) {
      rules.push_back(equality({s_letter(j), a_letter(i)},
                               {a_letter(i), s_letter(j)}, 9));
    }
  }

  // (10) s1 R = R s1
  rules.push_back(equality({s1, R}, {R, s1}, 10));

  // (11) s1 Q a_i = t_i a_i Q
  for (int i = 1; i <= 3; ++i) {
    rules.push_back(equality({s1, Q, a_letter(i)},
                             {t_letter(i), a_letter(i), Q}, 11));
  }

  // (12) P R s1 = 0
  rules.push_back(annihilation({P, R, s1}, 12));

  // (13) s2 R a_i = a_i s2 R
  for (int i = 1; i <= 3; ++i) {
    rules.push_back(equality({s2, R, a_letter(i)},
                             {a_letter(i), s2, R}, 13));
  }

  // (14) s2 R Q a_i = R t_i a_i Q
  for (int i = 1; i <= 3; ++i) {
    rules.push_back(equality({s2, R, Q, a_letter(i)},
                             {R, t_letter(i), a_letter(i), Q}, 14));
  }

  // aux: t_i a_j Q = 0 for i != j. With i = j this would annihilate the
  // rhs of (11), so only the mixed-index rules are admissible.
  if (include_taq_zero) {
    for (int i = 1; i <= 3; ++i) {
      for (int j = 1; j <= 3; ++j) {
        if (i == j) continue;
        rules.push_back(
            annihilation({t_letter(i), a_letter(j), Q}, kAuxFamily));
      }
    }
  }

  return Presentation(std::move(rules),
                      PresentationOptions{.include_taq_zero = include_taq_zero});
}

namespace {

// Splits a rule-file body into lhs/rhs token lists around "->".
struct ParsedLine {
  std::vector<std::string> lhs_tokens;
  std::vector<std::string> rhs_tokens;
};

Word word_from_tokens(const std::vector<std::string>& tokens, int line_no,
                      bool is_lhs) {
  const char* side = is_lhs ? "lhs" : "rhs";
  if (tokens.empty()) {
    std::ostringstream msg;
    msg << "line " << line_no << ": rule " << side << " is empty";
    throw ValidationError(msg.str());
  }
  bool has_zero = std::find(tokens.begin(), tokens.end(), "0") != tokens.end();
  if (has_zero) {
    if (is_lhs || tokens.size() != 1) {
      std::ostringstream msg;
      msg << "line " << line_no << ": rule " << side
          << " must not contain \"0\"";
      throw ValidationError(msg.str());
    }
    return Word::zero();
  }
  std::string bytes;
  for (const std::string& tok : tokens) {
    auto letter = letter_from_token(tok);
    if (!letter) {
      std::ostringstream msg;
      msg << "line " << line_no << ": unknown token \"" << tok << "\"";
      throw ParseError(msg.str());
    }
    bytes.push_back(static_cast<char>(*letter));
  }
  return Word::from_bytes(std::move(bytes));
}

std::string trim(std::string_view s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

Presentation load_rules(std::istream& in) {
  std::vector<Rule> rules;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string comment;
    std::string body = line;
    if (std::size_t hash = line.find('#'); hash != std::string::npos) {
      comment = trim(line.substr(hash + 1));
      body = line.substr(0, hash);
    }
    std::istringstream tokens(body);
    std::vector<std::string> lhs_tokens, rhs_tokens;
    bool seen_arrow = false;
    std::string tok;
    while (tokens >> tok) {
      if (tok == "->") {
        if (seen_arrow) {
          std::ostringstream msg;
          msg << "line " << line_no << ": more than one \"->\"";
          throw ParseError(msg.str());
        }
        seen_arrow = true;
      } else {
        (seen_arrow ? rhs_tokens : lhs_tokens).push_back(tok);
      }
    }
    if (!seen_arrow) {
      if (lhs_tokens.empty()) continue;  // blank or comment-only line
      std::ostringstream msg;
      msg << "line " << line_no << ": missing \"->\"";
      throw ParseError(msg.str());
    }

    int family = kAuxFamily;
    if (comment == "aux") {
      family = kAuxFamily;
    } else if (comment.rfind("rel ", 0) == 0) {
      try {
        family = std::stoi(comment.substr(4));
      } catch (const std::exception&) {
        family = -1;
      }
      if (family < 1 || family > 14) {
        std::ostringstream msg;
        msg << "line " << line_no << ": bad relation tag \"# " << comment
            << "\"";
        throw ParseError(msg.str());
      }
    }

    Word lhs = word_from_tokens(lhs_tokens, line_no, /*is_lhs=*/true);
    Word rhs = word_from_tokens(rhs_tokens, line_no, /*is_lhs=*/false);
    rules.push_back(Rule{std::move(lhs), std::move(rhs), family,
                         rhs_tokens.size() == 1 && rhs_tokens[0] == "0"
                             ? RuleKind::Annihilation
                             : RuleKind::Equality});
  }

  bool has_taq = false;
  for (const Rule& r : rules) {
    if (r.family == kAuxFamily && r.is_annihilation() && r.lhs.size() == 3 &&
        is_t(r.lhs.at(0)) && is_a(r.lhs.at(1)) && r.lhs.at(2) == Letter::Q) {
      has_taq = true;
    }
  }
  return Presentation(std::move(rules),
                      PresentationOptions{.include_taq_zero = has_taq});
}

Presentation load_rules(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open rule file: " + path.string());
  return load_rules(in);
}

void save_rules(const Presentation& p, std::ostream& out) {
  for (const Rule& r : p.rules()) {
    out << format_word(r.lhs) << " -> " << format_word(r.rhs) << "  # "
        << (r.family == kAuxFamily ? "aux" : "rel " + std::to_string(r.family))
        << "\n";
  }
}

void save_rules(const Presentation& p, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open rule file for writing: " + path.string());
  save_rules(p, out);
}

ValidationReport validate(const Presentation& p) {
  ValidationReport report;

  for (std::size_t i : p.equality_indices()) {
    const Rule& r = p.rules()[i];
    if (weighted_length(r.lhs) != weighted_length(r.rhs)) {
      report.potential_conserved = false;
      std::ostringstream note;
      note << "rule " << i << " (" << format_word(r.lhs) << " -> "
           << format_word(r.rhs)
           << "): unbounded growth: no conserved potential";
      report.notes.push_back(note.str());
    }
  }

  // Which (rule, direction) applications can increase each letter's count.
  for (std::size_t i : p.equality_indices()) {
    const Rule& r = p.rules()[i];
    std::array<int, kAlphabetSize> delta{};
    for (Letter x : r.rhs.letters()) ++delta[static_cast<std::size_t>(x)];
    for (Letter x : r.lhs.letters()) --delta[static_cast<std::size_t>(x)];
    for (std::size_t x = 0; x < kAlphabetSize; ++x) {
      if (delta[x] > 0) report.creators[x].emplace_back(i, Direction::Forward);
      if (delta[x] < 0) report.creators[x].emplace_back(i, Direction::Backward);
    }
  }
  for (std::size_t x = 0; x < kAlphabetSize; ++x) {
    if (report.creators[x].empty()) continue;
    // one entry per (family, direction)
    std::vector<std::pair<int, Direction>> seen;
    std::ostringstream note;
    note << letter_name(static_cast<Letter>(x)) << " created only by";
    bool first = true;
    for (auto [rule_index, dir] : report.creators[x]) {
      std::pair<int, Direction> key{p.rules()[rule_index].family, dir};
      if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
      seen.push_back(key);
      note << (first ? " " : ", ") << direction_name(dir) << " "
           << family_tag(key.first);
      first = false;
    }
    report.notes.push_back(note.str());
  }

  report.ok = report.errors.empty();
  return report;
}

}  // namespace nilideal
