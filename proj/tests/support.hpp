#pragma once

// Random inputs and independent oracles shared by the unit and acceptance suites.

#include <algorithm>
#include <bit>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "thompson/thompson.hpp"

namespace support {

using namespace thompson;

/// Random word of length 1..max_length in x_0..x_{max_index} (or y_i), exponents +-1.
inline GeneratorWord random_word(std::mt19937& rng, Arity family, int max_length = 20, int max_index = 5) {
  std::uniform_int_distribution<int> length(1, max_length);
  std::uniform_int_distribution<int> index(0, max_index);
  std::bernoulli_distribution positive(0.5);
  std::vector<Letter> letters;
  const int n = length(rng);
  for (int i = 0; i < n; ++i) letters.push_back({family == kBinary ? 'x' : 'y', index(rng), positive(rng) ? 1 : -1});
  return GeneratorWord(family, std::move(letters));
}

/// Random product of the given elements and their inverses.
inline TreeDiagram random_product(std::mt19937& rng, const std::vector<TreeDiagram>& generators, int max_length = 8) {
  std::uniform_int_distribution<int> length(1, max_length);
  std::uniform_int_distribution<std::size_t> pick(0, generators.size() - 1);
  std::bernoulli_distribution positive(0.5);
  TreeDiagram out = TreeDiagram::identity(generators.front().arity());
  const int n = length(rng);
  for (int i = 0; i < n; ++i) {
    const auto& g = generators[pick(rng)];
    out = multiply(out, positive(rng) ? g : invert(g));
  }
  return out;
}

inline TreeDiagram word(const std::string& text, Arity family = kBinary) {
  return word_to_diagram(parse_word(text, family));
}

inline std::vector<TreeDiagram> oriented_generators() {
  return {word("x0 x1"), word("x1 x2"), word("x2 x3")};
}

inline std::vector<TreeDiagram> oriented_f3_generators() {
  std::vector<TreeDiagram> out;
  for (const char* w : {"y1^2", "y3^2", "y5^2", "y0 y2", "y2 y4", "y4 y6", "y0 y3", "y2 y5", "y4 y7"}) {
    out.push_back(word(w, kTernary));
  }
  return out;
}

inline std::vector<TreeDiagram> colorable_generators() {
  return {word("x0^2 x1 x2^-1"), word("x0 x1^2 x0^-1"), word("x1^2 x3 x2^-1"), word("x2^2 x3 x4^-1")};
}

// ---------------------------------------------------------------------------------------
// Piecewise-linear oracle: points and breakpoints as exact fractions n / k^e, the map
// computed interval by interval from leaf depths. Shares nothing with the prefix rewriting.

// Exact up to depth ~40 in base 3.
__extension__ using Wide = unsigned __int128;

struct Fraction {
  Wide numerator;
  int exponent;
};

inline Wide power(int base, int e) {
  Wide out = 1;
  for (int i = 0; i < e; ++i) out *= static_cast<unsigned>(base);
  return out;
}

/// (left end, depth) of every leaf interval, left to right.
inline std::vector<std::pair<Fraction, int>> leaf_intervals(const Tree& t, int k) {
  std::vector<std::pair<Fraction, int>> out;
  std::function<void(const Tree&, Fraction, int)> walk = [&](const Tree& node, Fraction left, int depth) {
    if (node.is_leaf()) {
      out.push_back({left, depth});
      return;
    }
    for (int i = 0; i < node.degree(); ++i) {
      walk(node.child(i), Fraction{left.numerator * static_cast<unsigned>(k) + static_cast<unsigned>(i), depth + 1}, depth + 1);
    }
  };
  walk(t, Fraction{0, 0}, 0);
  return out;
}

/// Image of n / k^e; result as a canonical digit string.
inline std::string pl_image(const TreeDiagram& d, const std::string& digits) {
  const int k = d.arity().value();
  const auto top = leaf_intervals(d.top(), k);
  const auto bottom = leaf_intervals(d.bottom(), k);
  int depth = static_cast<int>(digits.size());
  for (const auto& [f, e] : top) depth = std::max(depth, e);
  for (const auto& [f, e] : bottom) depth = std::max(depth, e);
  const int scale = 2 * depth + 1;  // common denominator k^scale
  Wide t = 0;
  for (char c : digits) t = t * static_cast<unsigned>(k) + static_cast<unsigned>(c - '0');
  t *= power(k, scale - static_cast<int>(digits.size()));
  for (std::size_t i = 0; i < top.size(); ++i) {
    const auto a = top[i].first.numerator * power(k, scale - top[i].first.exponent);
    const auto len = power(k, scale - top[i].second);
    if (t < a || t >= a + len) continue;
    const auto b = bottom[i].first.numerator * power(k, scale - bottom[i].first.exponent);
    const int shift = top[i].second - bottom[i].second;  // slope k^shift
    Wide image = t - a;
    if (shift >= 0) {
      image *= power(k, shift);
    } else {
      image /= power(k, -shift);
    }
    image += b;
    std::string out(static_cast<std::size_t>(scale), '0');
    for (int j = scale - 1; j >= 0; --j) {
      out[static_cast<std::size_t>(j)] = static_cast<char>('0' + static_cast<int>(image % static_cast<unsigned>(k)));
      image /= static_cast<unsigned>(k);
    }
    while (!out.empty() && out.back() == '0') out.pop_back();
    return out;
  }
  throw InternalError("point outside every leaf interval");
}

/// Group elements agree iff their PL maps agree on the breakpoints of both and on a grid.
inline bool same_pl_map(const TreeDiagram& a, const TreeDiagram& b, int grid_depth = 6) {
  std::vector<std::string> points;
  for (const auto* d : {&a, &b}) {
    for (const auto& w : branch_words(d->top())) points.push_back(w + "1");
  }
  const int k = a.arity().value();
  std::function<void(std::string)> grid = [&](std::string w) {
    if (!w.empty() && w.back() != '0') points.push_back(w);
    if (static_cast<int>(w.size()) == grid_depth) return;
    for (int i = 0; i < k; ++i) grid(w + static_cast<char>('0' + i));
  };
  grid("");
  return std::ranges::all_of(points, [&](const std::string& p) { return pl_image(a, p) == pl_image(b, p); });
}

// ---------------------------------------------------------------------------------------
// Closed-form ternary Tait graph: gap g lies left of leaf g, even gaps are the black
// regions. A node with first children leaves at gaps ga < gb < gc and right end gd joins
// either (ga, gc) or (gb, gd), whichever pair is even; in the top tree the crossing is
// positive exactly when it is (ga, gc), in the bottom tree exactly when it is (gb, gd).

inline TaitGraph tait_graph_from_regions(const TreeDiagram& input) {
  const TreeDiagram d = reduce(input);
  std::vector<TaitEdge> edges;
  std::function<void(const Tree&, int, Half)> walk = [&](const Tree& node, int first, Half half) {
    if (node.is_leaf()) return;
    const int ga = first;
    const int gb = ga + node.child(0).leaf_count();
    const int gc = gb + node.child(1).leaf_count();
    const int gd = gc + node.child(2).leaf_count();
    const bool outer_pair = ga % 2 == 0;
    const int u = outer_pair ? ga : gb;
    const int v = outer_pair ? gc : gd;
    const bool positive = (half == Half::Upper) == outer_pair;
    edges.push_back({u / 2, v / 2, half, positive ? EdgeSign::Positive : EdgeSign::Negative});
    walk(node.child(0), ga, half);
    walk(node.child(1), gb, half);
    walk(node.child(2), gc, half);
  };
  walk(d.top(), 0, Half::Upper);
  walk(d.bottom(), 0, Half::Lower);
  return TaitGraph((d.leaf_count() + 1) / 2, std::move(edges));
}

/// Bipartiteness by parity union-find.
inline bool bipartite_by_parity(const TaitGraph& g) {
  std::vector<int> parent(static_cast<std::size_t>(g.vertex_count()));
  std::vector<int> parity(parent.size(), 0);
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
  std::function<std::pair<int, int>(int)> find = [&](int x) -> std::pair<int, int> {
    if (parent[static_cast<std::size_t>(x)] == x) return {x, 0};
    auto [root, p] = find(parent[static_cast<std::size_t>(x)]);
    return {root, p ^ parity[static_cast<std::size_t>(x)]};
  };
  for (const auto& e : g.edges()) {
    auto [ra, pa] = find(e.left);
    auto [rb, pb] = find(e.right);
    if (ra == rb) {
      if (pa == pb) return false;
    } else {
      parent[static_cast<std::size_t>(ra)] = rb;
      parity[static_cast<std::size_t>(ra)] = pa ^ pb ^ 1;
    }
  }
  return true;
}

/// Backtracking search for a 3-colouring of the strip regions (gaps 0..N) with the outer
/// left region 0, the outer right region 1, and distinct colours around every vertex.
inline bool strip_colorable_by_search(const TreeDiagram& input) {
  const TreeDiagram d = reduce(input);
  const int gaps = d.leaf_count() + 1;
  std::vector<std::array<int, 3>> triples;
  std::function<void(const Tree&, int)> collect = [&](const Tree& node, int first) {
    if (node.is_leaf()) return;
    const int middle = first + node.child(0).leaf_count();
    triples.push_back({first, middle, first + node.leaf_count()});
    collect(node.child(0), first);
    collect(node.child(1), middle);
  };
  collect(d.top(), 0);
  collect(d.bottom(), 0);
  std::vector<int> color(static_cast<std::size_t>(gaps), -1);
  auto consistent = [&] {
    return std::ranges::all_of(triples, [&](const auto& t) {
      const int a = color[static_cast<std::size_t>(t[0])];
      const int b = color[static_cast<std::size_t>(t[1])];
      const int c = color[static_cast<std::size_t>(t[2])];
      if (a < 0 || b < 0 || c < 0) return true;
      return a != b && b != c && a != c;
    });
  };
  std::function<bool(int)> search = [&](int g) {
    if (g == gaps) return true;
    for (int c = 0; c < 3; ++c) {
      if (g == 0 && c != 0) continue;
      if (g == gaps - 1 && c != 1) continue;
      color[static_cast<std::size_t>(g)] = c;
      if (consistent() && search(g + 1)) return true;
    }
    color[static_cast<std::size_t>(g)] = -1;
    return false;
  };
  return search(0);
}

// ---------------------------------------------------------------------------------------
// Link diagrams and knot tables.

/// Standard planar-diagram codes (incoming under strand first, counterclockwise).
inline LinkDiagram figure_eight_pd() { return from_pd(parse_pd("X(4,2,5,1)\nX(8,6,1,5)\nX(6,3,7,4)\nX(2,7,3,8)")); }
inline LinkDiagram left_trefoil_pd() { return from_pd(parse_pd("X(1,4,2,5)\nX(3,6,4,1)\nX(5,2,6,3)")); }

inline LaurentPoly figure_eight_jones() { return parse_laurent("A^8 - A^4 + 1 - A^-4 + A^-8"); }
/// -t^-4 + t^-3 + t^-1 at t = A^-4 (writhe -3).
inline LaurentPoly left_trefoil_jones() { return parse_laurent("-A^16 + A^12 + A^4"); }

/// Strands followed straight through crossings, plus free loops.
inline int components_by_tracing(const LinkDiagram& l) {
  std::vector<char> seen(static_cast<std::size_t>(4 * l.crossing_count()), 0);
  int count = l.free_loops();
  for (int start = 0; start < 4 * l.crossing_count(); ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    ++count;
    Dart d{start / 4, start % 4};
    while (!seen[static_cast<std::size_t>(4 * d.crossing + d.slot)]) {
      seen[static_cast<std::size_t>(4 * d.crossing + d.slot)] = 1;
      const Dart opposite{d.crossing, (d.slot + 2) % 4};
      seen[static_cast<std::size_t>(4 * opposite.crossing + opposite.slot)] = 1;
      d = l.across(opposite);
    }
  }
  return count;
}

/// Bracket by tracing loops: in each state, a loop leaves a crossing through the smoothing
/// partner of the slot it arrived at and follows the arc to the next crossing.
inline LaurentPoly bracket_by_tracing(const LinkDiagram& l) {
  const int n = l.crossing_count();
  const LaurentPoly delta = parse_laurent("-A^2 - A^-2");
  LaurentPoly out;
  for (std::uint64_t state = 0; state < (std::uint64_t{1} << n); ++state) {
    std::vector<char> seen(static_cast<std::size_t>(4 * n), 0);
    int loops = l.free_loops();
    for (int start = 0; start < 4 * n; ++start) {
      if (seen[static_cast<std::size_t>(start)]) continue;
      ++loops;
      Dart d{start / 4, start % 4};
      while (!seen[static_cast<std::size_t>(4 * d.crossing + d.slot)]) {
        seen[static_cast<std::size_t>(4 * d.crossing + d.slot)] = 1;
        const bool b = (state >> d.crossing) & 1U;
        // A joins 0-1 and 2-3, B joins 1-2 and 3-0.
        const int partner = b ? (d.slot % 2 == 0 ? (d.slot + 3) % 4 : (d.slot + 1) % 4)
                              : (d.slot % 2 == 0 ? d.slot + 1 : d.slot - 1);
        seen[static_cast<std::size_t>(4 * d.crossing + partner)] = 1;
        d = l.across(Dart{d.crossing, partner});
      }
    }
    const int bs = std::popcount(state);
    LaurentPoly term = LaurentPoly::monomial(n - 2 * bs);
    for (int i = 1; i < loops; ++i) term = term * delta;
    out += term;
  }
  return out;
}

/// Writhe from directions: slot s points at angle 90*s degrees; a crossing is positive when
/// the outgoing under direction lies a quarter turn counterclockwise of the outgoing over one.
inline int writhe_by_directions(const LinkDiagram& l) {
  int w = 0;
  for (int c = 0; c < l.crossing_count(); ++c) {
    int under_out = -1;
    int over_out = -1;
    for (int s = 0; s < 4; ++s) {
      const int a = l.crossings()[static_cast<std::size_t>(c)].arcs[static_cast<std::size_t>(s)];
      if (l.tails()[static_cast<std::size_t>(a)] == Dart{c, s}) (s % 2 == 0 ? under_out : over_out) = s;
    }
    const double pi = 3.14159265358979323846;
    const double cross = std::sin((under_out - over_out) * pi / 2);
    w += cross > 0 ? 1 : -1;
  }
  return w;
}

/// Random connected diagram with n crossings drawn from the tree pipeline: a random
/// reduced ternary diagram whose link has at most n crossings.
inline LinkDiagram random_pipeline_link(std::mt19937& rng, int max_crossings) {
  while (true) {
    const bool binary = std::bernoulli_distribution(0.5)(rng);
    const TreeDiagram d = word_to_diagram(random_word(rng, binary ? kBinary : kTernary, 6, 4));
    LinkDiagram l = build_link(d);
    if (l.crossing_count() > 0 && l.crossing_count() <= max_crossings) return l;
  }
}

}  // namespace support
