#pragma once

/**
 * @file link_builder.hpp
 * @brief Link diagrams from ternary tree diagrams and from Tait graphs, the Tait graph of
 * a diagram's checkerboard shading, and orientations.
 *
 * Tree route: every internal node of a ternary diagram becomes a crossing. A top node
 * lists its slots as (parent, c0, c1, c2) counterclockwise, a bottom node as
 * (parent, c2, c1, c0); the strand parent-c1 passes under the strand c0-c2. The two roots
 * are joined by an arc running around the left of the picture.
 *
 * Medial route: one crossing on every Tait edge, joined around each vertex in rotation
 * order; the chirality of a crossing follows the sign of its edge.
 */

#include <algorithm>
#include <array>
#include <optional>
#include <vector>

#include "thompson/link_diagram.hpp"
#include "thompson/morphisms.hpp"
#include "thompson/tait_graph.hpp"
#include "thompson/tree.hpp"

namespace thompson {

/// Link diagram of the given ternary representative (binary input goes through iota's
/// substitution first), without reducing it.
inline LinkDiagram build_link_of_representative(const TreeDiagram& input) {
  if (input.arity() == kQuaternary) throw ArityError("links are built from diagrams of F or F3");
  const TreeDiagram d = input.arity() == kBinary
                            ? TreeDiagram(kTernary, apply(iota_substitution(), input.top()), apply(iota_substitution(), input.bottom()))
                            : input;
  if (d.top().is_leaf()) return LinkDiagram({}, 1);

  const int n = d.leaf_count();
  std::vector<Crossing> crossings;
  Layout layout;
  std::vector<std::pair<Dart, Dart>> joins;
  std::vector<std::optional<AxisMark>> marks;
  std::vector<Dart> leaf_top(static_cast<std::size_t>(n));
  std::vector<Dart> leaf_bottom(static_cast<std::size_t>(n));

  auto walk = [&](auto&& self, const Tree& node, int first, bool top) -> int {
    const int c = static_cast<int>(crossings.size());
    crossings.push_back({{}, top ? Half::Upper : Half::Lower});
    const double height = (node.leaf_count() - 1) / 2.0;
    layout.centre.push_back({first + height, top ? height : -height});
    layout.slot0_angle.push_back(top ? 90.0 : 270.0);
    int offset = first;
    for (int i = 0; i < 3; ++i) {
      const Tree& child = node.child(i);
      const Dart here{c, top ? 1 + i : 3 - i};
      if (child.is_leaf()) {
        (top ? leaf_top : leaf_bottom)[static_cast<std::size_t>(offset)] = here;
      } else {
        joins.emplace_back(here, Dart{self(self, child, offset, top), 0});
        marks.emplace_back();
      }
      offset += child.leaf_count();
    }
    return c;
  };
  const int top_root = walk(walk, d.top(), 0, true);
  const int bottom_root = walk(walk, d.bottom(), 0, false);
  joins.emplace_back(Dart{bottom_root, 0}, Dart{top_root, 0});
  marks.push_back(AxisMark{-1, Dart{top_root, 0}});
  for (int p = 0; p < n; ++p) {
    joins.emplace_back(leaf_top[static_cast<std::size_t>(p)], leaf_bottom[static_cast<std::size_t>(p)]);
    marks.push_back(AxisMark{p, leaf_top[static_cast<std::size_t>(p)]});
  }
  for (std::size_t a = 0; a < joins.size(); ++a) {
    for (Dart dart : {joins[a].first, joins[a].second}) {
      crossings[static_cast<std::size_t>(dart.crossing)].arcs[static_cast<std::size_t>(dart.slot)] = static_cast<int>(a);
    }
  }
  LinkDiagram out(std::move(crossings), 0, Dart{bottom_root, 0});
  // Arc ids follow `joins`; the diagram's own end order may differ, marks only store darts.
  out.set_axis(n, std::move(marks));
  out.set_layout(std::move(layout));
  return out;
}

/// The link of the group element: built on the reduced representative.
inline LinkDiagram build_link(const TreeDiagram& d) {
  if (d.arity() == kBinary) return build_link_of_representative(iota(d));
  return build_link_of_representative(reduce(d));
}

/// Link of a positive element given by its top tree (the bottom tree is the right comb).
inline LinkDiagram link_of_positive(const Tree& top) {
  if (!is_k_ary(top, 2)) throw ArityError("link_of_positive takes a binary tree");
  return build_link(TreeDiagram(kBinary, top, right_comb(kBinary, top.leaf_count())));
}

namespace detail {

// Directions around the midpoint of an edge drawn from its left end u to its right end w.
enum Compass { kNE = 0, kNW = 1, kSW = 2, kSE = 3 };

inline int stored_slot(EdgeSign sign, Compass c) {
  // Positive crossings are stored (NW, SW, SE, NE): the strand from SW to NE is over.
  return sign == EdgeSign::Positive ? (c + 3) % 4 : c;
}

}  // namespace detail

/// Counterclockwise order of the edges at v: right-upper by right end ascending, left-upper
/// by left end ascending, left-lower by left end descending, right-lower by right end descending.
inline std::vector<int> rotation_at(const TaitGraph& g, int v) {
  std::vector<int> out;
  const auto& e = g.edges();
  auto collect = [&](Half half, bool right_side) {
    std::vector<int> part;
    for (int i = 0; i < static_cast<int>(e.size()); ++i) {
      const auto& edge = e[static_cast<std::size_t>(i)];
      if (edge.half == half && (right_side ? edge.left == v : edge.right == v)) part.push_back(i);
    }
    // Parallel edges: the one listed first is drawn innermost.
    std::ranges::stable_sort(part, [&](int a, int b) {
      const auto& ea = e[static_cast<std::size_t>(a)];
      const auto& eb = e[static_cast<std::size_t>(b)];
      return right_side ? ea.right < eb.right : ea.left > eb.left;
    });
    const bool reverse = (half == Half::Upper) != right_side;
    if (reverse) std::ranges::reverse(part);
    out.insert(out.end(), part.begin(), part.end());
  };
  collect(Half::Upper, true);
  collect(Half::Upper, false);
  collect(Half::Lower, false);
  collect(Half::Lower, true);
  return out;
}

inline LinkDiagram medial_link(const TaitGraph& g) {
  using detail::Compass;
  const auto& edges = g.edges();
  if (edges.empty()) return LinkDiagram({}, g.vertex_count());

  std::vector<Crossing> crossings(edges.size());
  Layout layout;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& e = edges[i];
    crossings[i].half = e.half;
    layout.centre.push_back({e.left + e.right - 0.5, static_cast<double>(e.half == Half::Upper ? e.right - e.left : e.left - e.right)});
    layout.slot0_angle.push_back(e.sign == EdgeSign::Positive ? 135.0 : 45.0);
  }
  auto dart = [&](int edge, Compass c) { return Dart{edge, detail::stored_slot(edges[static_cast<std::size_t>(edge)].sign, c)}; };
  auto slot_after = [&](int edge, int v) { return dart(edge, edges[static_cast<std::size_t>(edge)].right == v ? detail::kSE : detail::kNW); };
  auto slot_before = [&](int edge, int v) { return dart(edge, edges[static_cast<std::size_t>(edge)].right == v ? detail::kNE : detail::kSW); };

  std::vector<std::pair<Dart, Dart>> joins;
  std::vector<std::optional<AxisMark>> marks;
  bool axis_ok = true;
  int free_loops = 0;
  std::optional<Dart> base;
  for (int v = 0; v < g.vertex_count(); ++v) {
    const auto rot = rotation_at(g, v);
    if (rot.empty()) {
      ++free_loops;
      axis_ok = false;
      continue;
    }
    const auto deg = rot.size();
    const auto uppers = static_cast<std::size_t>(std::ranges::count_if(rot, [&](int i) { return edges[static_cast<std::size_t>(i)].half == Half::Upper; }));
    if (uppers == 0 || uppers == deg) axis_ok = false;
    for (std::size_t j = 0; j < deg; ++j) {
      const int a = rot[j];
      const int b = rot[(j + 1) % deg];
      joins.emplace_back(slot_after(a, v), slot_before(b, v));
      std::optional<AxisMark> mark;
      if (uppers > 0 && uppers < deg) {
        if (j + 1 == uppers) mark = AxisMark{2 * v - 1, joins.back().first};  // corner through 180 degrees, walked downwards
        if (j + 1 == deg) mark = AxisMark{2 * v, joins.back().second};       // corner through 0 degrees, walked upwards
      }
      marks.push_back(mark);
      if (v == 0 && j + 1 == uppers) base = joins.back().second;
    }
  }
  for (std::size_t a = 0; a < joins.size(); ++a) {
    for (Dart d : {joins[a].first, joins[a].second}) {
      crossings[static_cast<std::size_t>(d.crossing)].arcs[static_cast<std::size_t>(d.slot)] = static_cast<int>(a);
    }
  }
  LinkDiagram out(std::move(crossings), free_loops, base.value_or(Dart{0, 0}));
  if (axis_ok) out.set_axis(2 * g.vertex_count() - 1, std::move(marks));
  out.set_layout(std::move(layout));
  return out;
}

/// Black faces become vertices (ordered along the axis), crossings become edges carrying
/// the crossing's half and checkerboard sign. Needs axis data.
inline TaitGraph checkerboard_tait(const LinkDiagram& l) {
  if (l.crossing_count() == 0) {
    if (l.free_loops() != 1) throw RangeError("checkerboard_tait needs a connected diagram");
    return TaitGraph(1, {});
  }
  if (!l.has_axis()) throw RangeError("checkerboard_tait needs a diagram carrying axis data");
  const Shading s = shade(l);
  std::vector<TaitEdge> edges;
  for (int c = 0; c < l.crossing_count(); ++c) {
    const EdgeSign sign = checkerboard_sign(s, c);
    const int first = sign == EdgeSign::Positive ? 0 : 1;
    const int f1 = s.faces.face_of[static_cast<std::size_t>(4 * c + first)];
    const int f2 = s.faces.face_of[static_cast<std::size_t>(4 * c + first + 2)];
    const int v1 = s.gap[static_cast<std::size_t>(f1)] / 2;
    const int v2 = s.gap[static_cast<std::size_t>(f2)] / 2;
    if (v1 == v2) throw InternalError("crossing touches the same black face twice");
    edges.push_back({std::min(v1, v2), std::max(v1, v2), l.crossings()[static_cast<std::size_t>(c)].half, sign});
  }
  return TaitGraph(l.axis_leaves() / 2 + 1, std::move(edges));
}

/// Ternary Tait graph, defined through the checkerboard shading of the link diagram.
inline TaitGraph tait_graph_ternary(const TreeDiagram& d) {
  if (d.arity() != kTernary) throw ArityError("tait_graph_ternary needs a diagram of F3");
  return checkerboard_tait(build_link(d));
}

/// Every arc runs along the boundary of its black face, counterclockwise when the face's
/// vertex is coloured +1 and clockwise otherwise. Consistent exactly for proper colourings.
inline LinkDiagram orient_link(const LinkDiagram& l, const std::vector<int>& colors) {
  LinkDiagram out = l;
  if (l.crossing_count() == 0) {
    out.set_orientation({});
    return out;
  }
  if (!l.has_axis()) throw RangeError("orient_link needs a diagram carrying axis data");
  const Shading s = shade(l);
  if (static_cast<int>(colors.size()) != l.axis_leaves() / 2 + 1) throw RangeError("one colour per black region expected");
  std::vector<Dart> tails;
  for (int a = 0; a < l.arc_count(); ++a) {
    const auto& ends = l.ends(a);
    const int f0 = s.faces.face_of[static_cast<std::size_t>(dart_id(ends[0]))];
    const int f1 = s.faces.face_of[static_cast<std::size_t>(dart_id(ends[1]))];
    const int black = s.black[static_cast<std::size_t>(f0)] ? 0 : 1;
    const int face = black == 0 ? f0 : f1;
    const int colour = colors[static_cast<std::size_t>(s.gap[static_cast<std::size_t>(face)] / 2)];
    tails.push_back(colour > 0 ? ends[static_cast<std::size_t>(black)] : ends[static_cast<std::size_t>(1 - black)]);
  }
  out.set_orientation(std::move(tails));
  return out;
}

/// Orients every component along the order in which a strand walk from the base dart (then
/// from the lowest untouched arc) meets it.
inline LinkDiagram orient_by_tracing(const LinkDiagram& l) {
  LinkDiagram out = l;
  std::vector<Dart> tails(static_cast<std::size_t>(l.arc_count()), Dart{-1, -1});
  auto walk = [&](Dart d) {
    while (tails[static_cast<std::size_t>(l.arc_at(d))].crossing < 0) {
      tails[static_cast<std::size_t>(l.arc_at(d))] = d;
      const Dart arrive = l.across(d);
      d = Dart{arrive.crossing, (arrive.slot + 2) % 4};
    }
  };
  if (l.crossing_count() > 0) walk(l.base());
  for (int a = 0; a < l.arc_count(); ++a) {
    if (tails[static_cast<std::size_t>(a)].crossing < 0) walk(l.ends(a)[0]);
  }
  out.set_orientation(std::move(tails));
  return out;
}

}  // namespace thompson
