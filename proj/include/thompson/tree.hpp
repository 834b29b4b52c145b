#pragma once

/**
 * @file tree.hpp
 * @brief Ordered rooted k-ary trees and tree-pair diagrams.
 *
 * A TreeDiagram (top, bottom) is drawn with the top tree's root up, the bottom
 * tree's root down and leaf i of one tree glued to leaf i of the other. Two
 * diagrams represent the same group element when they differ by opposing
 * carets; every element has exactly one reduced representative.
 *
 * Text form: a leaf is ".", a node is "(" followed by its k children and ")".
 * Diagrams are written "top|bottom".
 */

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "thompson/error.hpp"

namespace thompson {

/// Branching degree of the trees: 2 for F, 3 for F₃, 4 for F₄.
class Arity {
 public:
  constexpr explicit Arity(int k) : k_(k) {
    if (k < 2 || k > 4) throw ArityError("arity must be 2, 3 or 4, got " + std::to_string(k));
  }
  constexpr int value() const noexcept { return k_; }
  friend constexpr bool operator==(Arity, Arity) = default;

 private:
  int k_;
};

inline constexpr Arity kBinary{2};
inline constexpr Arity kTernary{3};
inline constexpr Arity kQuaternary{4};

class Tree {
 public:
  /// A single leaf.
  Tree() = default;

  explicit Tree(std::vector<Tree> children) : children_(std::move(children)) {
    if (children_.empty()) return;
    leaves_ = 0;
    nodes_ = 1;
    for (const auto& c : children_) {
      leaves_ += c.leaves_;
      nodes_ += c.nodes_;
    }
  }

  /// One internal node with k leaf children.
  static Tree caret(int k) { return Tree(std::vector<Tree>(static_cast<std::size_t>(k))); }

  bool is_leaf() const noexcept { return children_.empty(); }
  int degree() const noexcept { return static_cast<int>(children_.size()); }
  const std::vector<Tree>& children() const noexcept { return children_; }
  const Tree& child(int i) const { return children_.at(static_cast<std::size_t>(i)); }
  int leaf_count() const noexcept { return leaves_; }
  int internal_count() const noexcept { return nodes_; }

  friend bool operator==(const Tree&, const Tree&) = default;

 private:
  std::vector<Tree> children_;
  int leaves_ = 1;
  int nodes_ = 0;
};

inline bool is_k_ary(const Tree& t, int k) {
  if (t.is_leaf()) return true;
  if (t.degree() != k) return false;
  return std::ranges::all_of(t.children(), [k](const Tree& c) { return is_k_ary(c, k); });
}

namespace detail {

inline Tree parse_subtree(std::string_view text, std::size_t& pos, int k) {
  if (pos >= text.size()) throw ParseError("unexpected end of tree expression");
  const char c = text[pos];
  if (c == '.') {
    ++pos;
    return Tree();
  }
  if (c != '(') {
    throw ParseError("unexpected character '" + std::string(1, c) + "' at offset " + std::to_string(pos));
  }
  ++pos;
  std::vector<Tree> children;
  while (pos < text.size() && text[pos] != ')') children.push_back(parse_subtree(text, pos, k));
  if (pos >= text.size()) throw ParseError("unbalanced parentheses in tree expression");
  ++pos;
  if (static_cast<int>(children.size()) != k) {
    throw ArityError("node with " + std::to_string(children.size()) + " children in a " + std::to_string(k) +
                     "-ary tree");
  }
  return Tree(std::move(children));
}

inline void append_text(const Tree& t, std::string& out) {
  if (t.is_leaf()) {
    out.push_back('.');
    return;
  }
  out.push_back('(');
  for (const auto& c : t.children()) append_text(c, out);
  out.push_back(')');
}

}  // namespace detail

inline Tree parse_tree(std::string_view text, Arity arity) {
  std::size_t pos = 0;
  Tree t = detail::parse_subtree(text, pos, arity.value());
  if (pos != text.size()) throw ParseError("trailing characters after tree expression");
  return t;
}

inline std::string to_string(const Tree& t) {
  std::string out;
  detail::append_text(t, out);
  return out;
}

/// Address of every leaf, left to right, as digits over {0..k-1} read from the root.
inline std::vector<std::string> branch_words(const Tree& t) {
  std::vector<std::string> out;
  std::string prefix;
  auto walk = [&](auto&& self, const Tree& node) -> void {
    if (node.is_leaf()) {
      out.push_back(prefix);
      return;
    }
    for (int i = 0; i < node.degree(); ++i) {
      prefix.push_back(static_cast<char>('0' + i));
      self(self, node.child(i));
      prefix.pop_back();
    }
  };
  walk(walk, t);
  return out;
}

/// The tree whose internal nodes all hang off the last child of their parent.
inline Tree right_comb(Arity arity, int leaves) {
  const int k = arity.value();
  if (leaves < 1 || (leaves - 1) % (k - 1) != 0) {
    throw RangeError("no " + std::to_string(k) + "-ary tree has " + std::to_string(leaves) + " leaves");
  }
  Tree t;
  for (int n = 1; n < leaves; n += k - 1) {
    std::vector<Tree> children(static_cast<std::size_t>(k));
    children.back() = std::move(t);
    t = Tree(std::move(children));
  }
  return t;
}

/// Replaces leaf i of `t` by `replacements[i]`.
inline Tree graft(const Tree& t, std::span<const Tree> replacements) {
  if (static_cast<int>(replacements.size()) != t.leaf_count()) {
    throw RangeError("graft needs one replacement per leaf");
  }
  std::size_t next = 0;
  auto walk = [&](auto&& self, const Tree& node) -> Tree {
    if (node.is_leaf()) return replacements[next++];
    std::vector<Tree> children;
    children.reserve(node.children().size());
    for (const auto& c : node.children()) children.push_back(self(self, c));
    return Tree(std::move(children));
  };
  return walk(walk, t);
}

/// Reverses the child order at every node.
inline Tree mirror(const Tree& t) {
  if (t.is_leaf()) return t;
  std::vector<Tree> children;
  for (auto it = t.children().rbegin(); it != t.children().rend(); ++it) children.push_back(mirror(*it));
  return Tree(std::move(children));
}

/// First-leaf indices of all carets (nodes whose children are all leaves), ascending.
inline std::vector<int> caret_starts(const Tree& t) {
  std::vector<int> out;
  int first = 0;
  auto walk = [&](auto&& self, const Tree& node) -> void {
    if (node.is_leaf()) {
      ++first;
      return;
    }
    if (std::ranges::all_of(node.children(), [](const Tree& c) { return c.is_leaf(); })) {
      out.push_back(first);
      first += node.degree();
      return;
    }
    for (const auto& c : node.children()) self(self, c);
  };
  walk(walk, t);
  return out;
}

/// Turns the caret whose first leaf is `first_leaf` into a single leaf.
inline Tree collapse_caret(const Tree& t, int first_leaf) {
  auto walk = [&](auto&& self, const Tree& node, int offset) -> Tree {
    if (node.is_leaf()) return node;
    if (offset == first_leaf &&
        std::ranges::all_of(node.children(), [](const Tree& c) { return c.is_leaf(); })) {
      return Tree();
    }
    std::vector<Tree> children;
    children.reserve(node.children().size());
    for (const auto& c : node.children()) {
      const bool contains = first_leaf >= offset && first_leaf < offset + c.leaf_count();
      children.push_back(contains ? self(self, c, offset) : c);
      offset += c.leaf_count();
    }
    return Tree(std::move(children));
  };
  Tree out = walk(walk, t, 0);
  if (out.leaf_count() == t.leaf_count()) {
    throw RangeError("no caret starts at leaf " + std::to_string(first_leaf));
  }
  return out;
}

/// Attaches a k-caret at leaf i.
inline Tree expand_leaf(const Tree& t, int leaf, int k) {
  if (leaf < 0 || leaf >= t.leaf_count()) throw RangeError("leaf index " + std::to_string(leaf) + " out of range");
  std::vector<Tree> repl(static_cast<std::size_t>(t.leaf_count()));
  repl[static_cast<std::size_t>(leaf)] = Tree::caret(k);
  return graft(t, repl);
}

class TreeDiagram {
 public:
  TreeDiagram(Arity arity, Tree top, Tree bottom) : arity_(arity), top_(std::move(top)), bottom_(std::move(bottom)) {
    if (!is_k_ary(top_, arity_.value()) || !is_k_ary(bottom_, arity_.value())) {
      throw ArityError("tree is not " + std::to_string(arity_.value()) + "-ary");
    }
    if (top_.leaf_count() != bottom_.leaf_count()) {
      throw ParseError("top and bottom trees have different leaf counts (" + std::to_string(top_.leaf_count()) +
                       " vs " + std::to_string(bottom_.leaf_count()) + ")");
    }
  }

  static TreeDiagram identity(Arity arity) { return TreeDiagram(arity, Tree(), Tree()); }

  Arity arity() const noexcept { return arity_; }
  const Tree& top() const noexcept { return top_; }
  const Tree& bottom() const noexcept { return bottom_; }
  int leaf_count() const noexcept { return top_.leaf_count(); }

  friend bool operator==(const TreeDiagram&, const TreeDiagram&) = default;

 private:
  Arity arity_;
  Tree top_;
  Tree bottom_;
};

inline std::string to_string(const TreeDiagram& d) { return to_string(d.top()) + "|" + to_string(d.bottom()); }

inline TreeDiagram parse_diagram(std::string_view text, Arity arity) {
  const auto bar = text.find('|');
  if (bar == std::string_view::npos) throw ParseError("diagram must be written as top|bottom");
  return TreeDiagram(arity, parse_tree(text.substr(0, bar), arity), parse_tree(text.substr(bar + 1), arity));
}

/// Leaf indices at which both trees carry a caret over the same k leaves.
inline std::vector<int> common_carets(const TreeDiagram& d) {
  const auto top = caret_starts(d.top());
  const auto bottom = caret_starts(d.bottom());
  std::vector<int> out;
  std::ranges::set_intersection(top, bottom, std::back_inserter(out));
  return out;
}

inline TreeDiagram cancel_caret(const TreeDiagram& d, int first_leaf) {
  return TreeDiagram(d.arity(), collapse_caret(d.top(), first_leaf), collapse_caret(d.bottom(), first_leaf));
}

inline bool is_reduced(const TreeDiagram& d) { return common_carets(d).empty(); }

inline TreeDiagram reduce(const TreeDiagram& d) {
  TreeDiagram out = d;
  for (auto carets = common_carets(out); !carets.empty(); carets = common_carets(out)) {
    // Cancel from the right so that the remaining indices stay valid.
    Tree top = out.top();
    Tree bottom = out.bottom();
    for (auto it = carets.rbegin(); it != carets.rend(); ++it) {
      top = collapse_caret(top, *it);
      bottom = collapse_caret(bottom, *it);
    }
    out = TreeDiagram(d.arity(), std::move(top), std::move(bottom));
  }
  return out;
}

inline TreeDiagram expand_at_leaf(const TreeDiagram& d, int leaf) {
  const int k = d.arity().value();
  return TreeDiagram(d.arity(), expand_leaf(d.top(), leaf, k), expand_leaf(d.bottom(), leaf, k));
}

inline TreeDiagram invert(const TreeDiagram& d) { return TreeDiagram(d.arity(), d.bottom(), d.top()); }

namespace detail {

// Simultaneous root-down walk of two trees. Wherever one tree has a leaf and the
// other an internal node, the node's subtree becomes the graft for that leaf.
inline void common_refinement(const Tree& a, const Tree& b, std::vector<Tree>& graft_a, std::vector<Tree>& graft_b) {
  if (a.is_leaf()) {
    graft_a.push_back(b);
    graft_b.insert(graft_b.end(), static_cast<std::size_t>(b.leaf_count()), Tree());
    return;
  }
  if (b.is_leaf()) {
    graft_b.push_back(a);
    graft_a.insert(graft_a.end(), static_cast<std::size_t>(a.leaf_count()), Tree());
    return;
  }
  for (int i = 0; i < a.degree(); ++i) common_refinement(a.child(i), b.child(i), graft_a, graft_b);
}

}  // namespace detail

/// The element "g then h": g is stacked on top of h.
inline TreeDiagram multiply(const TreeDiagram& g, const TreeDiagram& h) {
  if (g.arity() != h.arity()) throw ArityError("cannot multiply diagrams of different arity");
  std::vector<Tree> graft_g;
  std::vector<Tree> graft_h;
  detail::common_refinement(g.bottom(), h.top(), graft_g, graft_h);
  return reduce(TreeDiagram(g.arity(), graft(g.top(), graft_g), graft(h.bottom(), graft_h)));
}

/// Group-element equality: equality of reduced representatives.
inline bool same_element(const TreeDiagram& a, const TreeDiagram& b) {
  return a.arity() == b.arity() && reduce(a) == reduce(b);
}

}  // namespace thompson
