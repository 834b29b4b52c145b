#pragma once

/**
 * @file morphisms.hpp
 * @brief Homomorphisms between Thompson-like groups realised on tree diagrams.
 *
 *   iota      F  -> F₃   binary node (a,b)      becomes (a, leaf, b)
 *   ren_embed F₃ -> F    ternary node (a,b,c)   becomes (a,(b,c)); image is the oriented subgroup
 *   phi       F₄ -> F    4-ary node (a,b,c,d)   becomes ((a,b),(c,d)); image is the 3-colorable subgroup
 *   flip      mirror image of both trees
 *   shift_right / shift_left  the one-sided shift endomorphisms
 */

#include <vector>

#include "thompson/tree.hpp"

namespace thompson {

/// Replaces each source-arity node by `pattern`, plugging the node's children into
/// the pattern leaves listed in `slots` (in order). Other pattern leaves stay leaves.
struct TreeSubstitution {
  Arity source;
  Arity target;
  Tree pattern;
  std::vector<int> slots;
};

inline Tree apply(const TreeSubstitution& sub, const Tree& t) {
  if (t.is_leaf()) return t;
  if (t.degree() != sub.source.value()) throw ArityError("tree does not match substitution source arity");
  std::vector<Tree> repl(static_cast<std::size_t>(sub.pattern.leaf_count()));
  for (int i = 0; i < t.degree(); ++i) {
    repl[static_cast<std::size_t>(sub.slots[static_cast<std::size_t>(i)])] = apply(sub, t.child(i));
  }
  return graft(sub.pattern, repl);
}

inline TreeDiagram apply(const TreeSubstitution& sub, const TreeDiagram& d) {
  if (d.arity() != sub.source) {
    throw ArityError("expected a diagram of arity " + std::to_string(sub.source.value()));
  }
  return reduce(TreeDiagram(sub.target, apply(sub, d.top()), apply(sub, d.bottom())));
}

inline const TreeSubstitution& iota_substitution() {
  static const TreeSubstitution sub{kBinary, kTernary, Tree::caret(3), {0, 2}};
  return sub;
}

inline const TreeSubstitution& ren_substitution() {
  static const TreeSubstitution sub{kTernary, kBinary, parse_tree("(.(..))", kBinary), {0, 1, 2}};
  return sub;
}

inline const TreeSubstitution& phi_substitution() {
  static const TreeSubstitution sub{kQuaternary, kBinary, parse_tree("((..)(..))", kBinary), {0, 1, 2, 3}};
  return sub;
}

inline TreeDiagram iota(const TreeDiagram& d) { return apply(iota_substitution(), d); }
inline TreeDiagram ren_embed(const TreeDiagram& d) { return apply(ren_substitution(), d); }
inline TreeDiagram phi(const TreeDiagram& d) { return apply(phi_substitution(), d); }

inline TreeDiagram flip(const TreeDiagram& d) {
  return reduce(TreeDiagram(d.arity(), mirror(d.top()), mirror(d.bottom())));
}

namespace detail {

inline Tree shifted(const Tree& t, int k, bool right) {
  std::vector<Tree> children(static_cast<std::size_t>(k));
  if (right) {
    children.back() = t;
  } else {
    children.front() = t;
  }
  return Tree(std::move(children));
}

}  // namespace detail

/// New root whose first k-1 children are leaves and whose last child is the old tree.
inline TreeDiagram shift_right(const TreeDiagram& d) {
  const int k = d.arity().value();
  return reduce(TreeDiagram(d.arity(), detail::shifted(d.top(), k, true), detail::shifted(d.bottom(), k, true)));
}

/// New root whose first child is the old tree and whose other children are leaves.
inline TreeDiagram shift_left(const TreeDiagram& d) {
  const int k = d.arity().value();
  return reduce(TreeDiagram(d.arity(), detail::shifted(d.top(), k, false), detail::shifted(d.bottom(), k, false)));
}

}  // namespace thompson
