#pragma once

/**
 * @file coloring.hpp
 * @brief Membership in the oriented subgroups (2-colourable Tait graph) and in the
 * 3-colourable subgroup (strip colouring).
 */

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "thompson/link_builder.hpp"
#include "thompson/morphisms.hpp"
#include "thompson/tait_graph.hpp"
#include "thompson/tree.hpp"

namespace thompson {

/// The Tait graph that decides orientability: of iota(d) for F, of d itself for F3.
inline TaitGraph membership_tait_graph(const TreeDiagram& d) {
  if (d.arity() == kBinary) return tait_graph_ternary(iota(d));
  if (d.arity() == kTernary) return tait_graph_ternary(d);
  throw ArityError("oriented membership is defined for F and F3");
}

inline Bipartition oriented_membership(const TreeDiagram& d) { return two_color(membership_tait_graph(d)); }

inline bool is_oriented_member(const TreeDiagram& d) { return oriented_membership(d).bipartite(); }

/// Colours in Z3 of the regions of the strip picture, indexed by gap (gap g lies left of
/// leaf g; gaps 0 and N are the outer left and right regions), or the first gap on which
/// the colourings forced by the two trees disagree.
struct StripColoring {
  std::optional<std::vector<int>> colors;
  int conflict_gap = -1;
  std::array<int, 2> conflict_colors{};  // forced by the top and by the bottom tree
  bool colorable() const noexcept { return colors.has_value(); }
};

namespace detail {

// Left region 0, right region 1, the region under the root between its children 2. At every
// vertex the regions left, between and right of its two children are pairwise distinct,
// so each vertex forces the colour of its middle region.
inline std::vector<int> forced_strip_colors(const Tree& t) {
  std::vector<int> color(static_cast<std::size_t>(t.leaf_count() + 1), -1);
  color.front() = 0;
  color.back() = 1;
  auto walk = [&](auto&& self, const Tree& node, int first) -> void {
    if (node.is_leaf()) return;
    const int middle = first + node.child(0).leaf_count();
    const int last = first + node.leaf_count();
    color[static_cast<std::size_t>(middle)] =
        3 - color[static_cast<std::size_t>(first)] - color[static_cast<std::size_t>(last)];
    self(self, node.child(0), first);
    self(self, node.child(1), middle);
  };
  walk(walk, t, 0);
  return color;
}

}  // namespace detail

inline StripColoring strip_three_color(const TreeDiagram& d) {
  if (d.arity() != kBinary) throw ArityError("strip colourings are defined for diagrams of F");
  const TreeDiagram r = reduce(d);
  const auto top = detail::forced_strip_colors(r.top());
  const auto bottom = detail::forced_strip_colors(r.bottom());
  for (std::size_t g = 0; g < top.size(); ++g) {
    if (top[g] != bottom[g]) return {std::nullopt, static_cast<int>(g), {top[g], bottom[g]}};
  }
  return {top, -1, {}};
}

inline bool is_threecolorable_member(const TreeDiagram& d) { return strip_three_color(d).colorable(); }

}  // namespace thompson
