#pragma once

/**
 * @file link_diagram.hpp
 * @brief 4-valent planar link diagrams: crossings with counterclockwise arc slots, face
 * tracing, checkerboard shading, orientation and canonical PD codes.
 *
 * A crossing lists the arcs at its four slots in counterclockwise order. Slots 0 and 2
 * carry the under strand, slots 1 and 3 the over strand. A dart (c, s) is the arc at
 * slot s of crossing c, traversed away from c. Free loops (components without
 * crossings) are counted separately.
 *
 * Diagrams built from tree diagrams or Tait graphs also record where arcs cross the
 * x-axis (AxisMark), which identifies faces with the gaps between leaves.
 */

#include <array>
#include <cmath>
#include <cstdio>
#include <cstddef>
#include <map>
#include <optional>
#include <queue>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "thompson/error.hpp"
#include "thompson/tait_graph.hpp"

namespace thompson {

struct Dart {
  int crossing = 0;
  int slot = 0;
  friend bool operator==(const Dart&, const Dart&) = default;
  friend auto operator<=>(const Dart&, const Dart&) = default;
};

struct Crossing {
  std::array<int, 4> arcs{};
  Half half = Half::Upper;
};

/// An arc crossing the x-axis at leaf position `position` (-1 for the arc that closes the
/// two roots around the far left). `upper` is the dart at the arc's upper end.
struct AxisMark {
  int position = 0;
  Dart upper;
};

/// Drawing hints: crossing centres and the direction of slot 0 (degrees, counterclockwise).
struct Layout {
  std::vector<std::array<double, 2>> centre;
  std::vector<double> slot0_angle;
};

class LinkDiagram {
 public:
  /// The empty diagram.
  LinkDiagram() = default;

  LinkDiagram(std::vector<Crossing> crossings, int free_loops, Dart base = {})
      : crossings_(std::move(crossings)), free_loops_(free_loops), base_(base) {
    if (free_loops_ < 0) throw RangeError("negative free loop count");
    const std::size_t arcs = 2 * crossings_.size();
    ends_.assign(arcs, {Dart{-1, -1}, Dart{-1, -1}});
    std::vector<int> seen(arcs, 0);
    for (std::size_t c = 0; c < crossings_.size(); ++c) {
      for (int s = 0; s < 4; ++s) {
        const int a = crossings_[c].arcs[static_cast<std::size_t>(s)];
        if (a < 0 || static_cast<std::size_t>(a) >= arcs) throw ParseError("arc label out of range");
        auto& count = seen[static_cast<std::size_t>(a)];
        if (count == 2) throw ParseError("arc label " + std::to_string(a) + " used more than twice");
        ends_[static_cast<std::size_t>(a)][static_cast<std::size_t>(count++)] = Dart{static_cast<int>(c), s};
      }
    }
    if (!crossings_.empty() && (base_.crossing < 0 || static_cast<std::size_t>(base_.crossing) >= crossings_.size() ||
                                base_.slot < 0 || base_.slot > 3)) {
      throw RangeError("base dart out of range");
    }
  }

  const std::vector<Crossing>& crossings() const noexcept { return crossings_; }
  int crossing_count() const noexcept { return static_cast<int>(crossings_.size()); }
  int arc_count() const noexcept { return static_cast<int>(ends_.size()); }
  int free_loops() const noexcept { return free_loops_; }
  Dart base() const noexcept { return base_; }

  int arc_at(Dart d) const {
    return crossings_.at(static_cast<std::size_t>(d.crossing)).arcs.at(static_cast<std::size_t>(d.slot));
  }
  const std::array<Dart, 2>& ends(int arc) const { return ends_.at(static_cast<std::size_t>(arc)); }
  /// The slot reached by following the arc that leaves through d.
  Dart across(Dart d) const {
    const auto& e = ends(arc_at(d));
    return e[0] == d ? e[1] : e[0];
  }

  // Axis data.
  bool has_axis() const noexcept { return axis_leaves_ > 0; }
  int axis_leaves() const noexcept { return axis_leaves_; }
  const std::vector<std::optional<AxisMark>>& axis_marks() const noexcept { return marks_; }
  void set_axis(int leaves, std::vector<std::optional<AxisMark>> marks) {
    if (marks.size() != ends_.size()) throw RangeError("one axis mark slot per arc expected");
    axis_leaves_ = leaves;
    marks_ = std::move(marks);
  }
  void clear_axis() {
    axis_leaves_ = 0;
    marks_.clear();
  }

  // Orientation: the dart each arc is traversed from.
  bool oriented() const noexcept { return oriented_; }
  const std::vector<Dart>& tails() const noexcept { return tails_; }
  void set_orientation(std::vector<Dart> tails) {
    if (tails.size() != ends_.size()) throw RangeError("one tail dart per arc expected");
    for (std::size_t a = 0; a < tails.size(); ++a) {
      if (tails[a] != ends_[a][0] && tails[a] != ends_[a][1]) throw RangeError("tail dart is not an end of its arc");
    }
    for (std::size_t c = 0; c < crossings_.size(); ++c) {
      const int under_out = out_count(tails, static_cast<int>(c), 0, 2);
      const int over_out = out_count(tails, static_cast<int>(c), 1, 3);
      if (under_out != 1 || over_out != 1) {
        throw InternalError("orientation is not consistent at crossing " + std::to_string(c));
      }
    }
    tails_ = std::move(tails);
    oriented_ = true;
  }
  void clear_orientation() {
    tails_.clear();
    oriented_ = false;
  }

  const std::optional<Layout>& layout() const noexcept { return layout_; }
  void set_layout(Layout layout) { layout_ = std::move(layout); }

 private:
  int out_count(const std::vector<Dart>& tails, int c, int s1, int s2) const {
    int n = 0;
    for (int s : {s1, s2}) {
      const int a = crossings_[static_cast<std::size_t>(c)].arcs[static_cast<std::size_t>(s)];
      if (tails[static_cast<std::size_t>(a)] == Dart{c, s}) ++n;
    }
    return n;
  }

  std::vector<Crossing> crossings_;
  int free_loops_ = 0;
  Dart base_;
  std::vector<std::array<Dart, 2>> ends_;
  int axis_leaves_ = 0;
  std::vector<std::optional<AxisMark>> marks_;
  std::vector<Dart> tails_;
  bool oriented_ = false;
  std::optional<Layout> layout_;
};

inline int dart_id(Dart d) { return 4 * d.crossing + d.slot; }

/// Faces of the planar map; face_of[dart_id(d)] is the face on the left of dart d, which
/// is the corner between slots s and s+1 at d's crossing.
struct Faces {
  std::vector<int> face_of;
  int count = 0;
};

inline Faces trace_faces(const LinkDiagram& l) {
  Faces f;
  f.face_of.assign(static_cast<std::size_t>(4 * l.crossing_count()), -1);
  for (int start = 0; start < 4 * l.crossing_count(); ++start) {
    if (f.face_of[static_cast<std::size_t>(start)] >= 0) continue;
    Dart d{start / 4, start % 4};
    while (f.face_of[static_cast<std::size_t>(dart_id(d))] < 0) {
      f.face_of[static_cast<std::size_t>(dart_id(d))] = f.count;
      const Dart arrive = l.across(d);
      d = Dart{arrive.crossing, (arrive.slot + 3) % 4};
    }
    ++f.count;
  }
  return f;
}

inline int component_count_of_arcs(const LinkDiagram& l) {
  std::vector<bool> used(static_cast<std::size_t>(l.arc_count()), false);
  int count = 0;
  for (int a = 0; a < l.arc_count(); ++a) {
    if (used[static_cast<std::size_t>(a)]) continue;
    ++count;
    Dart d = l.ends(a)[0];
    while (!used[static_cast<std::size_t>(l.arc_at(d))]) {
      used[static_cast<std::size_t>(l.arc_at(d))] = true;
      const Dart arrive = l.across(d);
      d = Dart{arrive.crossing, (arrive.slot + 2) % 4};
    }
  }
  return count;
}

/// V - E + F for the diagram as a plane graph (2 for connected diagrams with crossings).
inline int euler_characteristic(const LinkDiagram& l) {
  return l.crossing_count() - l.arc_count() + trace_faces(l).count;
}

/// Proper 2-colouring of the faces with the face left of the base dart white. When axis
/// data is present, faces are also identified with the gaps between leaves.
struct Shading {
  Faces faces;
  std::vector<bool> black;
  std::vector<int> gap;  // per face; -1 without axis data
};

inline Shading shade(const LinkDiagram& l) {
  Shading out{trace_faces(l), {}, {}};
  const auto fcount = static_cast<std::size_t>(out.faces.count);
  out.black.assign(fcount, false);
  out.gap.assign(fcount, -1);
  if (l.crossing_count() == 0) return out;
  auto face_left = [&](Dart d) { return out.faces.face_of[static_cast<std::size_t>(dart_id(d))]; };

  std::vector<int> colour(fcount, -1);
  std::vector<std::vector<int>> adj(fcount);
  for (int c = 0; c < l.crossing_count(); ++c) {
    for (int s = 0; s < 4; ++s) {
      const Dart d{c, s};
      const int f = face_left(d);
      const int g = face_left(l.across(d));
      adj[static_cast<std::size_t>(f)].push_back(g);
    }
  }
  const int outer = face_left(l.base());
  colour[static_cast<std::size_t>(outer)] = 0;
  std::queue<int> queue;
  queue.push(outer);
  while (!queue.empty()) {
    const int f = queue.front();
    queue.pop();
    for (int g : adj[static_cast<std::size_t>(f)]) {
      if (colour[static_cast<std::size_t>(g)] < 0) {
        colour[static_cast<std::size_t>(g)] = 1 - colour[static_cast<std::size_t>(f)];
        queue.push(g);
      } else if (colour[static_cast<std::size_t>(g)] == colour[static_cast<std::size_t>(f)]) {
        throw InternalError("link diagram faces are not 2-colourable");
      }
    }
  }
  for (std::size_t f = 0; f < fcount; ++f) out.black[f] = colour[f] == 1;

  if (l.has_axis()) {
    const int n = l.axis_leaves();
    for (int a = 0; a < l.arc_count(); ++a) {
      const auto& mark = l.axis_marks()[static_cast<std::size_t>(a)];
      if (!mark) continue;
      const Dart lower = mark->upper == l.ends(a)[0] ? l.ends(a)[1] : l.ends(a)[0];
      // Going up at position p leaves gap p on the left, going down leaves gap p+1.
      const int up_gap = mark->position < 0 ? n : mark->position;
      const int down_gap = mark->position < 0 ? 0 : mark->position + 1;
      for (auto [dart, gap] : {std::pair{lower, up_gap}, std::pair{mark->upper, down_gap}}) {
        int& slot = out.gap[static_cast<std::size_t>(face_left(dart))];
        if (slot >= 0 && slot != gap) throw InternalError("face meets the axis in two different gaps");
        slot = gap;
      }
    }
    for (std::size_t f = 0; f < fcount; ++f) {
      if (out.gap[f] < 0) throw InternalError("face without an axis gap");
      if (out.black[f] != (out.gap[f] % 2 == 0)) throw InternalError("gap parity disagrees with the shading");
    }
  }
  return out;
}

/// Sign of the crossing in the checkerboard sense: positive when the corners after the
/// over-strand slots (1 and 3) are white.
inline EdgeSign checkerboard_sign(const Shading& s, int crossing) {
  return s.black[static_cast<std::size_t>(s.faces.face_of[static_cast<std::size_t>(4 * crossing)])] ? EdgeSign::Positive
                                                                                                    : EdgeSign::Negative;
}

/// Oriented crossing sign: +1 when the outgoing under slot directly follows the outgoing
/// over slot counterclockwise.
inline int crossing_sign(const LinkDiagram& l, int c) {
  if (!l.oriented()) throw RangeError("crossing signs need an oriented diagram");
  auto outgoing = [&](int s1, int s2) {
    const int a = l.crossings()[static_cast<std::size_t>(c)].arcs[static_cast<std::size_t>(s1)];
    return l.tails()[static_cast<std::size_t>(a)] == Dart{c, s1} ? s1 : s2;
  };
  return outgoing(0, 2) == (outgoing(1, 3) + 1) % 4 ? 1 : -1;
}

/// Swaps over and under at every crossing.
inline LinkDiagram mirror(const LinkDiagram& l) {
  std::vector<Crossing> crossings = l.crossings();
  for (auto& c : crossings) c.arcs = {c.arcs[1], c.arcs[2], c.arcs[3], c.arcs[0]};
  auto shift = [](Dart d) { return Dart{d.crossing, (d.slot + 3) % 4}; };
  LinkDiagram out(std::move(crossings), l.free_loops(), shift(l.base()));
  if (l.has_axis()) {
    auto marks = l.axis_marks();
    for (auto& m : marks) {
      if (m) m->upper = shift(m->upper);
    }
    out.set_axis(l.axis_leaves(), std::move(marks));
  }
  if (l.oriented()) {
    std::vector<Dart> tails;
    for (Dart d : l.tails()) tails.push_back(shift(d));
    out.set_orientation(std::move(tails));
  }
  if (l.layout()) {
    Layout layout = *l.layout();
    for (auto& angle : layout.slot0_angle) angle += 90.0;
    out.set_layout(std::move(layout));
  }
  return out;
}

/// The diagram together with `extra` unlinked, uncrossed loops.
inline LinkDiagram with_free_loops(const LinkDiagram& l, int extra) {
  LinkDiagram out(l.crossings(), l.free_loops() + extra, l.base());
  if (l.has_axis()) out.set_axis(l.axis_leaves(), l.axis_marks());
  if (l.oriented()) out.set_orientation(l.tails());
  return out;
}

/// Planar-diagram code with 1-based arc labels; each quadruple starts at an under slot.
struct PDCode {
  std::vector<std::array<int, 4>> crossings;
  int free_loops = 0;
  friend bool operator==(const PDCode&, const PDCode&) = default;
};

/// Labels arcs by walking strands straight through crossings, starting at the base dart;
/// further strands are started from crossings in order of first visit, trying the slots
/// after the entry slot counterclockwise. Crossings are listed in first-visit order.
inline PDCode canonical_pd(const LinkDiagram& l) {
  PDCode out;
  out.free_loops = l.free_loops();
  const auto n = static_cast<std::size_t>(l.crossing_count());
  if (n == 0) return out;
  std::vector<int> label(2 * n, 0);
  std::vector<int> entry(n, -1);
  std::vector<int> order;
  int next = 1;
  auto visit = [&](Dart d) {
    if (entry[static_cast<std::size_t>(d.crossing)] < 0) {
      entry[static_cast<std::size_t>(d.crossing)] = d.slot;
      order.push_back(d.crossing);
    }
  };
  auto walk = [&](Dart d) {
    visit(d);
    while (label[static_cast<std::size_t>(l.arc_at(d))] == 0) {
      label[static_cast<std::size_t>(l.arc_at(d))] = next++;
      const Dart arrive = l.across(d);
      visit(arrive);
      d = Dart{arrive.crossing, (arrive.slot + 2) % 4};
    }
  };
  walk(l.base());
  for (std::size_t i = 0; i < order.size(); ++i) {
    const int c = order[i];
    for (int k = 1; k < 4; ++k) {
      const Dart d{c, (entry[static_cast<std::size_t>(c)] + k) % 4};
      if (label[static_cast<std::size_t>(l.arc_at(d))] == 0) walk(d);
    }
  }
  if (order.size() != n) {
    // Split diagrams: components unreachable from the base start at the lowest crossing.
    for (std::size_t c = 0; c < n; ++c) {
      if (entry[c] >= 0) continue;
      walk(Dart{static_cast<int>(c), 0});
      for (std::size_t i = 0; i < order.size(); ++i) {
        const int cc = order[i];
        for (int k = 1; k < 4; ++k) {
          const Dart d{cc, (entry[static_cast<std::size_t>(cc)] + k) % 4};
          if (label[static_cast<std::size_t>(l.arc_at(d))] == 0) walk(d);
        }
      }
    }
  }
  for (int c : order) {
    const auto& arcs = l.crossings()[static_cast<std::size_t>(c)].arcs;
    auto lab = [&](int s) { return label[static_cast<std::size_t>(arcs[static_cast<std::size_t>(s % 4)])]; };
    const std::array<int, 4> from0{lab(0), lab(1), lab(2), lab(3)};
    const std::array<int, 4> from2{lab(2), lab(3), lab(4), lab(5)};
    out.crossings.push_back(std::min(from0, from2));
  }
  return out;
}

inline std::string to_string(const PDCode& pd) {
  std::string out = "arcs=" + std::to_string(2 * pd.crossings.size()) + " crossings=" + std::to_string(pd.crossings.size());
  if (pd.free_loops > 0) out += " loops=" + std::to_string(pd.free_loops);
  out += "\n";
  for (const auto& x : pd.crossings) {
    out += "X(" + std::to_string(x[0]) + "," + std::to_string(x[1]) + "," + std::to_string(x[2]) + "," +
           std::to_string(x[3]) + ")\n";
  }
  return out;
}

/// Reads the format written by to_string; the header line is optional.
inline PDCode parse_pd(std::string_view text) {
  PDCode pd;
  std::istringstream in{std::string(text)};
  std::string line;
  int header_crossings = -1;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    line = line.substr(first);
    if (line.starts_with("arcs=")) {
      std::istringstream h(line);
      std::string field;
      while (h >> field) {
        const auto eq = field.find('=');
        if (eq == std::string::npos) throw ParseError("malformed PD header field '" + field + "'");
        const std::string key = field.substr(0, eq);
        const int value = std::stoi(field.substr(eq + 1));
        if (key == "crossings") header_crossings = value;
        if (key == "loops") pd.free_loops = value;
      }
      continue;
    }
    std::array<int, 4> x{};
    char close = 0;
    if (std::sscanf(line.c_str(), "X(%d,%d,%d,%d%c", &x[0], &x[1], &x[2], &x[3], &close) != 5 || close != ')') {
      throw ParseError("malformed PD line '" + line + "'");
    }
    pd.crossings.push_back(x);
  }
  if (header_crossings >= 0 && header_crossings != static_cast<int>(pd.crossings.size())) {
    throw ParseError("PD header crossing count does not match the body");
  }
  return pd;
}

/// Diagram with the PD's crossings in order; labels 1..2n become arcs 0..2n-1 and the base
/// dart is slot 0 of the first crossing.
inline LinkDiagram from_pd(const PDCode& pd) {
  std::vector<Crossing> crossings;
  for (const auto& x : pd.crossings) {
    Crossing c;
    for (std::size_t s = 0; s < 4; ++s) c.arcs[s] = x[s] - 1;
    crossings.push_back(c);
  }
  return LinkDiagram(std::move(crossings), pd.free_loops, Dart{0, 0});
}

}  // namespace thompson
