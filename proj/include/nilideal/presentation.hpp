#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "nilideal/word.hpp"

namespace nilideal {

enum class Direction { Forward, Backward };

constexpr std::string_view direction_name(Direction d) {
  return d == Direction::Forward ? "forward" : "backward";
}

enum class RuleKind { Equality, Annihilation };

/// Family id of the auxiliary annihilation rules t_i a_j Q -> 0 (i != j),
/// which sit outside the 14 numbered relation families.
inline constexpr int kAuxFamily = 0;

/// An oriented relation. Equality rules are applied in both directions by
/// the engine; annihilation rules (rhs = Zero) only forward.
struct Rule {
  Word lhs;    // nonempty, never Zero
  Word rhs;    // Zero exactly for annihilation rules
  int family;  // 1..14, or kAuxFamily
  RuleKind kind;

  bool is_annihilation() const { return kind == RuleKind::Annihilation; }
};

/// "rel 7" / "aux" as used in rule files and traces.
std::string family_tag(int family);

struct PresentationOptions {
  bool include_taq_zero = true;
};

/// An immutable finite rule set. Construction validates the structural
/// invariants (nonempty, lhs never empty/Zero, kind matches rhs, no rhs
/// contains L) and throws ValidationError on violation.
class Presentation {
 public:
  explicit Presentation(std::vector<Rule> rules, PresentationOptions options = {});

  const std::vector<Rule>& rules() const { return rules_; }
  const PresentationOptions& options() const { return options_; }

  const std::vector<std::size_t>& equality_indices() const {
    return equality_indices_;
  }
  const std::vector<std::size_t>& annihilation_indices() const {
    return annihilation_indices_;
  }

  /// 0-based position of a rule within its family's expansion.
  std::size_t sub_index(std::size_t rule_index) const;
  std::size_t family_size(int family) const;
  std::optional<std::size_t> rule_at(int family, std::size_t sub_index) const;

 private:
  std::vector<Rule> rules_;
  PresentationOptions options_;
  std::vector<std::size_t> equality_indices_;
  std::vector<std::size_t> annihilation_indices_;
  std::vector<std::size_t> sub_index_;  // parallel to rules_
};

/// The full expansion of relation families (1)-(14): 90 rules, plus the six
/// auxiliary rules t_i a_j Q -> 0 (i != j) when include_taq_zero is set.
Presentation standard_presentation(bool include_taq_zero = true);

/// Rule-file format: one rule per line, "LHS -> RHS" in word text (RHS may
/// be "0"), optional trailing "# rel N" or "# aux"; '#' starts a comment;
/// blank lines ignored. Untagged rules load as aux.
Presentation load_rules(std::istream& in);
Presentation load_rules(const std::filesystem::path& path);
void save_rules(const Presentation& p, std::ostream& out);
void save_rules(const Presentation& p, const std::filesystem::path& path);

struct ValidationReport {
  bool ok = true;
  /// False if some equality rule changes the weighted length
  /// len + 4#L + 2#g; the engine refuses to enumerate such rule sets.
  bool potential_conserved = true;
  std::vector<std::string> errors;
  std::vector<std::string> notes;
  /// creators[letter] = (rule_index, direction) pairs whose application can
  /// increase the count of that letter.
  std::array<std::vector<std::pair<std::size_t, Direction>>, kAlphabetSize>
      creators;
};

/// Structural checks plus the letter-creation scan backing the engine's
/// termination bound. Failures land in the report, not in exceptions.
ValidationReport validate(const Presentation& p);

}  // namespace nilideal
