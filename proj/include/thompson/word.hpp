#pragma once

/**
 * @file word.hpp
 * @brief Words in the infinite generating sets, normal forms and the abelianization of F.
 *
 * Word syntax: whitespace-separated tokens `x<i>`, `y<i>` or `w<i>`, each with an
 * optional exponent `^<integer>`. `x` letters are generators of F, `y` letters
 * generators of F₃ or F₄ (selected by the family), and `w<i>` names the image of
 * the F₄ generator y_i in F, so that w0..w3 generate the 3-colorable subgroup.
 * The empty word and "1" both denote the identity.
 */

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <string>
#include <string_view>
#include <vector>

#include "thompson/morphisms.hpp"
#include "thompson/tree.hpp"

namespace thompson {

/// Generator i of F_k. For i <= k-2 the top tree is a root with a caret at child i and the
/// bottom tree a root with a caret at child k-1; larger indices are right shifts of these.
inline TreeDiagram generator_diagram(Arity family, int index) {
  if (index < 0) throw RangeError("generator index must be non-negative");
  const int k = family.value();
  if (index >= k - 1) return shift_right(generator_diagram(family, index - (k - 1)));
  std::vector<Tree> top(static_cast<std::size_t>(k));
  std::vector<Tree> bottom(static_cast<std::size_t>(k));
  top[static_cast<std::size_t>(index)] = Tree::caret(k);
  bottom.back() = Tree::caret(k);
  return TreeDiagram(family, Tree(std::move(top)), Tree(std::move(bottom)));
}

/// w_i = phi(y_i of F₄).
inline TreeDiagram colorable_generator(int index) { return phi(generator_diagram(kQuaternary, index)); }

struct Letter {
  char symbol;  // 'x', 'y' or 'w'
  int index;
  int exponent;
  friend bool operator==(const Letter&, const Letter&) = default;
};

class GeneratorWord {
 public:
  explicit GeneratorWord(Arity family, std::vector<Letter> letters = {}) : family_(family), letters_(std::move(letters)) {
    for (const auto& l : letters_) check(l);
    normalize();
  }

  Arity family() const noexcept { return family_; }
  const std::vector<Letter>& letters() const noexcept { return letters_; }
  bool empty() const noexcept { return letters_.empty(); }

  friend bool operator==(const GeneratorWord&, const GeneratorWord&) = default;

 private:
  void check(const Letter& l) const {
    if (l.index < 0) throw RangeError("generator index must be non-negative");
    const bool binary = family_ == kBinary;
    if ((l.symbol == 'x' || l.symbol == 'w') && !binary) {
      throw ArityError(std::string(1, l.symbol) + " letters belong to F, not to F_" + std::to_string(family_.value()));
    }
    if (l.symbol == 'y' && binary) throw ArityError("y letters need family F3 or F4");
    if (l.symbol != 'x' && l.symbol != 'y' && l.symbol != 'w') {
      throw ParseError("unknown generator symbol '" + std::string(1, l.symbol) + "'");
    }
  }

  // Merge equal neighbours and drop zero exponents until nothing changes.
  void normalize() {
    std::vector<Letter> out;
    for (const auto& l : letters_) {
      if (!out.empty() && out.back().symbol == l.symbol && out.back().index == l.index) {
        out.back().exponent += l.exponent;
        if (out.back().exponent == 0) out.pop_back();
      } else if (l.exponent != 0) {
        out.push_back(l);
      }
    }
    letters_ = std::move(out);
  }

  Arity family_;
  std::vector<Letter> letters_;
};

namespace detail {

inline int parse_int(std::string_view text, std::string_view what) {
  int value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw ParseError("invalid " + std::string(what) + " '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace detail

inline GeneratorWord parse_word(std::string_view text, Arity family) {
  std::vector<Letter> letters;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    const std::string_view token = text.substr(pos, end - pos);
    pos = end;
    if (token == "1") continue;
    const char symbol = token.front();
    if (symbol != 'x' && symbol != 'y' && symbol != 'w') {
      throw ParseError("unknown generator token '" + std::string(token) + "'");
    }
    const auto caret = token.find('^');
    const auto index_text = token.substr(1, caret == std::string_view::npos ? std::string_view::npos : caret - 1);
    if (index_text.empty() || index_text.front() == '+' || index_text.front() == '-') {
      throw ParseError("missing generator index in '" + std::string(token) + "'");
    }
    const int index = detail::parse_int(index_text, "generator index");
    const int exponent = caret == std::string_view::npos ? 1 : detail::parse_int(token.substr(caret + 1), "exponent");
    letters.push_back({symbol, index, exponent});
  }
  return GeneratorWord(family, std::move(letters));
}

inline std::string to_string(const Letter& l) {
  std::string out(1, l.symbol);
  out += std::to_string(l.index);
  if (l.exponent != 1) out += "^" + std::to_string(l.exponent);
  return out;
}

inline std::string to_string(const GeneratorWord& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const auto& l : w.letters()) {
    if (!out.empty()) out.push_back(' ');
    out += to_string(l);
  }
  return out;
}

inline TreeDiagram letter_diagram(Arity family, const Letter& l) {
  const TreeDiagram base = l.symbol == 'w' ? colorable_generator(l.index) : generator_diagram(family, l.index);
  const TreeDiagram step = l.exponent > 0 ? base : invert(base);
  TreeDiagram out = step;
  for (int i = 1; i < std::abs(l.exponent); ++i) out = multiply(out, step);
  return out;
}

inline TreeDiagram word_to_diagram(const GeneratorWord& w) {
  TreeDiagram out = TreeDiagram::identity(w.family());
  for (const auto& l : w.letters()) out = multiply(out, letter_diagram(w.family(), l));
  return out;
}

/// x0^a0 ... xn^an xn^-bn ... x0^-b0 with both vectors of length n+1 (empty for the identity).
struct NormalForm {
  std::vector<int> positive;
  std::vector<int> negative;
  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

/// For every leaf of a binary tree: the length of the longest run of left edges climbing
/// from the leaf that stays off the right spine (root and its chain of right children).
inline std::vector<int> leaf_exponents(const Tree& t) {
  if (!is_k_ary(t, 2)) throw ArityError("leaf exponents are defined for binary trees");
  std::vector<int> out;
  auto walk = [&](auto&& self, const Tree& node, bool on_spine, int run) -> void {
    if (node.is_leaf()) {
      out.push_back(run);
      return;
    }
    self(self, node.child(0), false, on_spine ? 0 : run + 1);
    self(self, node.child(1), on_spine, 0);
  };
  walk(walk, t, true, 0);
  return out;
}

inline NormalForm normal_form(const TreeDiagram& d) {
  if (d.arity() != kBinary) throw ArityError("normal forms are computed for F only");
  const TreeDiagram r = reduce(d);
  NormalForm nf{leaf_exponents(r.top()), leaf_exponents(r.bottom())};
  while (!nf.positive.empty() && nf.positive.back() == 0 && nf.negative.back() == 0) {
    nf.positive.pop_back();
    nf.negative.pop_back();
  }
  return nf;
}

inline NormalForm normal_form(const GeneratorWord& w) { return normal_form(word_to_diagram(w)); }

inline GeneratorWord to_word(const NormalForm& nf) {
  std::vector<Letter> letters;
  for (std::size_t i = 0; i < nf.positive.size(); ++i) {
    if (nf.positive[i] != 0) letters.push_back({'x', static_cast<int>(i), nf.positive[i]});
  }
  for (std::size_t i = nf.negative.size(); i-- > 0;) {
    if (nf.negative[i] != 0) letters.push_back({'x', static_cast<int>(i), -nf.negative[i]});
  }
  return GeneratorWord(kBinary, std::move(letters));
}

inline std::string to_string(const NormalForm& nf) { return to_string(to_word(nf)); }

/// Positive elements have the right comb as reduced bottom tree; for F this is the same as
/// an all-zero negative part of the normal form.
inline bool is_positive(const TreeDiagram& d) {
  if (d.arity() == kBinary) {
    const auto nf = normal_form(d);
    return std::ranges::all_of(nf.negative, [](int b) { return b == 0; });
  }
  const TreeDiagram r = reduce(d);
  return r.bottom() == right_comb(r.arity(), r.leaf_count());
}

inline bool is_positive(const GeneratorWord& w) { return is_positive(word_to_diagram(w)); }

/// (log2 f'(0), log2 f'(1)).
struct AbelianImage {
  int at_zero = 0;
  int at_one = 0;
  friend bool operator==(const AbelianImage&, const AbelianImage&) = default;
};

inline AbelianImage abelianization(const TreeDiagram& d) {
  if (d.arity() != kBinary) throw ArityError("abelianization is implemented for F");
  auto depth = [](const Tree& t, bool leftmost) {
    int n = 0;
    for (const Tree* node = &t; !node->is_leaf(); ++n) node = leftmost ? &node->child(0) : &node->children().back();
    return n;
  };
  // A leaf interval of depth p in the top tree maps onto one of depth q below: slope 2^(p-q).
  return {depth(d.top(), true) - depth(d.bottom(), true), depth(d.top(), false) - depth(d.bottom(), false)};
}

/// Membership in K(a,b) = { f : a | log2 f'(0), b | log2 f'(1) }.
inline bool in_rectangular(const TreeDiagram& d, int a, int b) {
  if (a <= 0 || b <= 0) throw RangeError("rectangular subgroup parameters must be positive");
  const auto pi = abelianization(d);
  return pi.at_zero % a == 0 && pi.at_one % b == 0;
}

}  // namespace thompson
