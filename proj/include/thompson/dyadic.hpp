#pragma once

/**
 * @file dyadic.hpp
 * @brief The piecewise-linear action on finite base-k expansions, digit weights and the
 * subsets they define.
 *
 * Points of (0,1) are finite digit words a1...an standing for sum a_i k^-i, kept in
 * canonical form (no trailing zeros). A diagram acts by prefix replacement: the
 * top-tree branch u that prefixes t (after padding t with zeros) is swapped for the
 * matching bottom-tree branch v. Everything is exact string manipulation.
 */

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "thompson/tree.hpp"
#include "thompson/word.hpp"

namespace thompson {

class DigitWord {
 public:
  DigitWord(int base, std::string digits) : base_(base), digits_(std::move(digits)) {
    if (base < 2 || base > 4) throw RangeError("digit words use base 2, 3 or 4");
    for (char c : digits_) {
      if (c < '0' || c >= '0' + base) throw ParseError("digit '" + std::string(1, c) + "' is not valid in base " + std::to_string(base));
    }
    while (!digits_.empty() && digits_.back() == '0') digits_.pop_back();
  }

  int base() const noexcept { return base_; }
  const std::string& digits() const noexcept { return digits_; }
  /// The empty word denotes 0 (or 1); neither is a point of the open interval.
  bool empty() const noexcept { return digits_.empty(); }

  friend bool operator==(const DigitWord&, const DigitWord&) = default;

 private:
  int base_;
  std::string digits_;
};

inline std::string to_string(const DigitWord& t) { return t.empty() ? "0" : "0." + t.digits(); }

/// Accepts "0.d1d2..." or an exact fraction "a/b^k" / "a/N" whose denominator is a power of the base.
inline DigitWord parse_point(std::string_view text, int base) {
  if (text.starts_with("0.")) return DigitWord(base, std::string(text.substr(2)));
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) throw ParseError("point must be 0.<digits> or a/b^k");
  const auto num_text = text.substr(0, slash);
  const auto den_text = text.substr(slash + 1);
  const int numerator = detail::parse_int(num_text, "numerator");
  int exponent = 0;
  std::uint64_t denominator = 1;
  if (const auto caret = den_text.find('^'); caret != std::string_view::npos) {
    if (detail::parse_int(den_text.substr(0, caret), "denominator base") != base) {
      throw ParseError("denominator is not a power of " + std::to_string(base));
    }
    exponent = detail::parse_int(den_text.substr(caret + 1), "denominator exponent");
    if (exponent < 0 || exponent > 30) throw RangeError("denominator exponent out of range");
    for (int i = 0; i < exponent; ++i) denominator *= static_cast<std::uint64_t>(base);
  } else {
    const auto n = static_cast<std::uint64_t>(detail::parse_int(den_text, "denominator"));
    while (denominator < n) {
      denominator *= static_cast<std::uint64_t>(base);
      ++exponent;
    }
    if (denominator != n) throw ParseError("denominator is not a power of " + std::to_string(base));
  }
  if (numerator <= 0 || static_cast<std::uint64_t>(numerator) >= denominator) {
    throw RangeError("point must lie strictly between 0 and 1");
  }
  std::string digits(static_cast<std::size_t>(exponent), '0');
  auto value = static_cast<std::uint64_t>(numerator);
  for (int i = exponent - 1; i >= 0; --i) {
    digits[static_cast<std::size_t>(i)] = static_cast<char>('0' + value % static_cast<std::uint64_t>(base));
    value /= static_cast<std::uint64_t>(base);
  }
  return DigitWord(base, std::move(digits));
}

/// A diagram prepared for repeated evaluation.
class PointMap {
 public:
  explicit PointMap(const TreeDiagram& d) : diagram_(d), targets_(branch_words(d.bottom())) {}

  int base() const noexcept { return diagram_.arity().value(); }

  /// Image of a raw digit string (padding with zeros as needed); result is canonical.
  std::string image_digits(std::string_view t) const {
    const Tree* node = &diagram_.top();
    std::size_t pos = 0;
    int leaf = 0;
    while (!node->is_leaf()) {
      const int digit = pos < t.size() ? t[pos] - '0' : 0;
      for (int j = 0; j < digit; ++j) leaf += node->child(j).leaf_count();
      node = &node->child(digit);
      ++pos;
    }
    std::string out = targets_[static_cast<std::size_t>(leaf)];
    if (pos < t.size()) out.append(t.substr(pos));
    while (!out.empty() && out.back() == '0') out.pop_back();
    return out;
  }

  DigitWord operator()(const DigitWord& t) const {
    if (t.base() != base()) {
      throw ArityError("point in base " + std::to_string(t.base()) + " for a diagram of arity " + std::to_string(base()));
    }
    if (t.empty()) throw RangeError("the action is evaluated on points of the open interval (0,1)");
    return DigitWord(base(), image_digits(t.digits()));
  }

 private:
  TreeDiagram diagram_;
  std::vector<std::string> targets_;
};

inline DigitWord evaluate(const TreeDiagram& d, const DigitWord& t) { return PointMap(d)(t); }

namespace detail {

inline void check_digits(std::string_view digits, int base) {
  for (char c : digits) {
    if (c < '0' || c >= '0' + base) throw ParseError("digit '" + std::string(1, c) + "' is not valid in base " + std::to_string(base));
  }
}

}  // namespace detail

/// Digit sum mod 2 of a binary word.
inline int weight_w2(std::string_view digits) {
  detail::check_digits(digits, 2);
  int sum = 0;
  for (char c : digits) sum += c - '0';
  return sum % 2;
}

/// sum_{i>=1} (-1)^i a_i mod 3 of a binary word, in {0,1,2}.
inline int weight_w3alt(std::string_view digits) {
  detail::check_digits(digits, 2);
  int sum = 0;
  for (std::size_t i = 0; i < digits.size(); ++i) sum += (i % 2 == 0 ? -1 : 1) * (digits[i] - '0');
  return ((sum % 3) + 3) % 3;
}

/// Ternary path weight: split the word at every 1 into w1 1 w2 1 ... 1 wn; count every 1,
/// the 2s inside odd-numbered pieces and the 0s inside even-numbered pieces.
inline int weight_c(std::string_view digits) {
  detail::check_digits(digits, 3);
  int weight = 0;
  int piece = 1;
  for (char c : digits) {
    if (c == '1') {
      ++weight;
      ++piece;
    } else if ((c == '2' && piece % 2 == 1) || (c == '0' && piece % 2 == 0)) {
      ++weight;
    }
  }
  return weight;
}

inline bool in_S(const DigitWord& t) { return weight_w2(t.digits()) == 0; }
inline bool in_Si(const DigitWord& t, int i) { return weight_w3alt(t.digits()) == ((i % 3) + 3) % 3; }
inline bool in_Z(const DigitWord& t) {
  const auto ones = std::ranges::count(t.digits(), '1');
  return ones % 2 == 0 && weight_c(t.digits()) % 2 == 0;
}

enum class StabilizedSet { S, S0, S1, S2, Z };

inline int base_of(StabilizedSet set) { return set == StabilizedSet::Z ? 3 : 2; }

inline bool contains(StabilizedSet set, const std::string& digits) {
  switch (set) {
    case StabilizedSet::S: return weight_w2(digits) == 0;
    case StabilizedSet::S0: return weight_w3alt(digits) == 0;
    case StabilizedSet::S1: return weight_w3alt(digits) == 1;
    case StabilizedSet::S2: return weight_w3alt(digits) == 2;
    case StabilizedSet::Z: return std::ranges::count(digits, '1') % 2 == 0 && weight_c(digits) % 2 == 0;
  }
  return false;
}

/// First canonical point of length <= depth (in length-then-lexicographic DFS order) whose
/// membership in `set` differs from that of its image.
inline std::optional<DigitWord> find_stabilizer_violation(const TreeDiagram& d, StabilizedSet set, int depth) {
  const int base = base_of(set);
  if (d.arity().value() != base) {
    throw ArityError("set lives in base " + std::to_string(base) + " but the diagram has arity " +
                     std::to_string(d.arity().value()));
  }
  const PointMap map(d);
  std::string word;
  std::optional<DigitWord> found;
  auto walk = [&](auto&& self) -> bool {
    if (!word.empty() && word.back() != '0' && contains(set, word) != contains(set, map.image_digits(word))) {
      found = DigitWord(base, word);
      return false;
    }
    if (static_cast<int>(word.size()) == depth) return true;
    for (int digit = 0; digit < base; ++digit) {
      word.push_back(static_cast<char>('0' + digit));
      const bool ok = self(self);
      word.pop_back();
      if (!ok) return false;
    }
    return true;
  };
  walk(walk);
  return found;
}

/// Necessary condition for d to stabilize `set`: checked on every canonical point of length <= depth.
inline bool sampled_stabilizer_check(const TreeDiagram& d, StabilizedSet set, int depth = 12) {
  return !find_stabilizer_violation(d, set, depth).has_value();
}

/// Exact test for Stab(S): every branch pair (u, v) of the reduced diagram has w2(u) = w2(v).
inline bool branch_parity_test(const TreeDiagram& d) {
  if (d.arity() != kBinary) throw ArityError("branch parity test needs a diagram of F");
  const TreeDiagram r = reduce(d);
  const auto top = branch_words(r.top());
  const auto bottom = branch_words(r.bottom());
  for (std::size_t i = 0; i < top.size(); ++i) {
    if (weight_w2(top[i]) != weight_w2(bottom[i])) return false;
  }
  return true;
}

/// Exact test for the intersection of Stab(S_i): every branch pair has equal alternating
/// weight mod 3 and lengths of equal parity.
inline bool branch_mod3_test(const TreeDiagram& d) {
  if (d.arity() != kBinary) throw ArityError("branch mod-3 test needs a diagram of F");
  const TreeDiagram r = reduce(d);
  const auto top = branch_words(r.top());
  const auto bottom = branch_words(r.bottom());
  for (std::size_t i = 0; i < top.size(); ++i) {
    if (weight_w3alt(top[i]) != weight_w3alt(bottom[i])) return false;
    if (top[i].size() % 2 != bottom[i].size() % 2) return false;
  }
  return true;
}

}  // namespace thompson
