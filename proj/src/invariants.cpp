#include "nilideal/invariants.hpp"

#include <algorithm>
#include <sstream>

#include "nilideal/errors.hpp"

namespace nilideal {

InvariantVector ivector(const Word& w) {
  if (w.is_zero()) throw EngineError("ivector: undefined for Zero");
  InvariantVector v;
  for (Letter x : w.letters()) {
    bool l = x == Letter::L;
    v.i0 += l || x == Letter::M;
    v.i1 += l || x == Letter::P;
    v.i2 += l || x == Letter::g || x == Letter::R;
    v.i3 += l || x == Letter::g || x == Letter::Q;
    v.i4 += l || x == Letter::g || is_t(x) || is_s(x);
  }
  return v;
}

int potential(const Word& w) {
  if (w.is_zero()) throw EngineError("potential: undefined for Zero");
  int total = static_cast<int>(w.size());
  for (Letter x : w.letters()) {
    if (x == Letter::L) total += 4;
    if (x == Letter::g) total += 2;
  }
  return total;
}

std::vector<Letter> a_subsequence(const Word& w) {
  std::vector<Letter> out;
  for (Letter x : w.letters()) {
    if (is_a(x)) out.push_back(x);
  }
  return out;
}

int pq_s_invariant(const Word& w) {
  if (w.is_zero()) throw EngineError("pq_s_invariant: undefined for Zero");
  int p_count = 0, q_count = 0;
  std::size_t p_at = 0, q_at = 0;
  int s_count = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    Letter x = w.at(i);
    if (x == Letter::P) { ++p_count; p_at = i; }
    if (x == Letter::Q) { ++q_count; q_at = i; }
    if (x == Letter::g) {
      throw EngineError("pq_s_invariant: word contains g");
    }
    if (is_s(x)) ++s_count;
  }
  if (p_count != 1 || q_count != 1 || p_at >= q_at) {
    throw EngineError(
        "pq_s_invariant: needs exactly one P and one Q with P before Q");
  }
  int between = 0;
  for (std::size_t i = p_at + 1; i < q_at; ++i) between += is_a(w.at(i));
  return between + s_count;
}

Shape classify_shape(const Word& w) {
  if (w.is_zero()) throw EngineError("classify_shape: Zero has no shape");
  InvariantVector v = ivector(w);
  if (v != InvariantVector{1, 1, 1, 1, 1}) {
    throw EngineError("classify_shape: invariant vector is not (1,1,1,1,1)");
  }
  const auto letters = w.letters();

  if (letters[0] == Letter::L) {
    std::vector<Letter> tail(letters.begin() + 1, letters.end());
    if (std::all_of(tail.begin(), tail.end(), [](Letter x) { return is_a(x); }))
      return ShapeI{std::move(tail)};
    return Unclassified{};
  }

  if (letters[0] != Letter::M) return Unclassified{};

  bool has_g = std::find(letters.begin(), letters.end(), Letter::g) !=
               letters.end();
  if (has_g) {
    // M A1 P A2 g A3 with A1, A2, A3 over the a-letters
    std::vector<Letter> parts[3];
    int part = 0;
    for (std::size_t i = 1; i < letters.size(); ++i) {
      Letter x = letters[i];
      if (x == Letter::P && part == 0) { part = 1; continue; }
      if (x == Letter::g && part == 1) { part = 2; continue; }
      if (!is_a(x)) return Unclassified{};
      parts[part].push_back(x);
    }
    if (part != 2) return Unclassified{};
    return ShapeII{std::move(parts[0]), std::move(parts[1]),
                   std::move(parts[2])};
  }

  // M-initial, no L, no g: one P, one R, one Q in the order P..R..Q and one
  // marker; everything else must be a-letters.
  std::ptrdiff_t p_at = -1, r_at = -1, q_at = -1;
  std::ptrdiff_t marker_at = -1;
  for (std::size_t i = 1; i < letters.size(); ++i) {
    Letter x = letters[i];
    switch (x) {
      case Letter::L:
      case Letter::M:
        return Unclassified{};
      case Letter::P:
        if (p_at >= 0) return Unclassified{};
        p_at = static_cast<std::ptrdiff_t>(i);
        break;
      case Letter::R:
        if (r_at >= 0) return Unclassified{};
        r_at = static_cast<std::ptrdiff_t>(i);
        break;
      case Letter::Q:
        if (q_at >= 0) return Unclassified{};
        q_at = static_cast<std::ptrdiff_t>(i);
        break;
      default:
        if (is_s(x) || is_t(x)) {
          if (marker_at >= 0) return Unclassified{};
          marker_at = static_cast<std::ptrdiff_t>(i);
        } else if (!is_a(x)) {
          return Unclassified{};
        }
    }
  }
  if (p_at < 0 || r_at < 0 || q_at < 0 || marker_at < 0) return Unclassified{};
  if (!(p_at < r_at && r_at < q_at)) return Unclassified{};
  return ShapeIII{letters[static_cast<std::size_t>(marker_at)]};
}

RuleInvarianceReport check_rule_invariance(const Presentation& p) {
  RuleInvarianceReport report;
  for (std::size_t i : p.equality_indices()) {
    const Rule& r = p.rules()[i];
    ++report.rules_checked;
    InvariantVector lhs = ivector(r.lhs);
    InvariantVector rhs = ivector(r.rhs);
    if (lhs == rhs) continue;
    report.ok = false;
    std::ostringstream msg;
    msg << "rule " << i << " (" << format_word(r.lhs) << " -> "
        << format_word(r.rhs) << "): violation on";
    if (lhs.i0 != rhs.i0) msg << " i0";
    if (lhs.i1 != rhs.i1) msg << " i1";
    if (lhs.i2 != rhs.i2) msg << " i2";
    if (lhs.i3 != rhs.i3) msg << " i3";
    if (lhs.i4 != rhs.i4) msg << " i4";
    report.violations.push_back(msg.str());
  }
  return report;
}

RuleConservation conserved_quantities(const Presentation& p) {
  RuleConservation c;
  for (std::size_t i : p.equality_indices()) {
    const Rule& r = p.rules()[i];
    if (potential(r.lhs) != potential(r.rhs)) c.potential = false;
    if (ivector(r.lhs) != ivector(r.rhs)) c.ivector = false;
    if (a_subsequence(r.lhs) != a_subsequence(r.rhs)) c.a_subsequence = false;
  }
  return c;
}

}  // namespace nilideal
