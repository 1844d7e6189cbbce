#pragma once

#include <variant>
#include <vector>

#include "nilideal/presentation.hpp"
#include "nilideal/word.hpp"

namespace nilideal {

/// The five conserved letter-count sums. Equality rules preserve all of
/// them, so they separate congruence classes cheaply.
struct InvariantVector {
  int i0 = 0;  // #L + #M
  int i1 = 0;  // #L + #P
  int i2 = 0;  // #L + #g + #R
  int i3 = 0;  // #L + #g + #Q
  int i4 = 0;  // #L + #g + #t1 + #t2 + #t3 + #s1 + #s2

  friend bool operator==(const InvariantVector&,
                         const InvariantVector&) = default;
};

/// Throws EngineError on Zero (the invariants are undefined there).
InvariantVector ivector(const Word& w);

/// Weighted length len + 4#L + 2#g, conserved by every equality rule of
/// the standard presentation; bounds the length of every word in a
/// congruence class and so makes class enumeration terminate.
int potential(const Word& w);

/// The subsequence of a-letters, conserved by every equality rule.
std::vector<Letter> a_subsequence(const Word& w);

/// "d(P,Q) + number of s-letters": the a-letters strictly between P and Q
/// plus the count of s1/s2 anywhere. Preserved by every equality rule not
/// involving g. Requires exactly one P, exactly one Q, P before Q, no g;
/// throws EngineError otherwise.
int pq_s_invariant(const Word& w);

struct ShapeI {
  std::vector<Letter> a_tail;  // L followed by a-letters
};
struct ShapeII {
  // M <before_p> P <between_pg> g <after_g>, all three over {a1,a2,a3}
  std::vector<Letter> before_p;
  std::vector<Letter> between_pg;
  std::vector<Letter> after_g;
};
struct ShapeIII {
  Letter marker;  // the unique letter from {t1,t2,t3,s1,s2}
};
struct Unclassified {};

using Shape = std::variant<ShapeI, ShapeII, ShapeIII, Unclassified>;

/// The trichotomy for words with invariant vector (1,1,1,1,1): L-initial
/// over a-letters / M..P..g form / M-initial with single P, R, Q in that
/// order plus one marker. Unclassified on anything reachable from an
/// L-form word indicates a broken rule set.
/// Throws EngineError if w is Zero or its invariant vector is not all ones.
Shape classify_shape(const Word& w);

struct RuleInvarianceReport {
  bool ok = true;
  std::size_t rules_checked = 0;
  std::vector<std::string> violations;
};

/// Asserts ivector(lhs) == ivector(rhs) for every equality rule;
/// annihilation rules are skipped.
RuleInvarianceReport check_rule_invariance(const Presentation& p);

/// Which quantities every equality rule of p conserves. The engine uses
/// these to decide which fast non-equivalence prescreens are sound.
struct RuleConservation {
  bool potential = true;
  bool ivector = true;
  bool a_subsequence = true;
};

RuleConservation conserved_quantities(const Presentation& p);

}  // namespace nilideal
