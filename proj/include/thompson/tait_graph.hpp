#pragma once

/**
 * @file tait_graph.hpp
 * @brief Signed Tait graphs on the x-axis: construction from binary diagrams, bipartition
 * with odd-cycle witnesses and DOT export.
 *
 * Vertices v0..v(m-1) sit on the x-axis from left to right; every edge runs in the upper
 * or the lower half-plane. Parallel edges are kept (they are 2-cycles for bipartiteness
 * and separate crossings for the link).
 */

#include <algorithm>
#include <cstddef>
#include <optional>
#include <queue>
#include <string>
#include <tuple>
#include <vector>

#include "thompson/tree.hpp"

namespace thompson {

enum class Half { Upper, Lower };
enum class EdgeSign { Positive, Negative };

struct TaitEdge {
  int left;
  int right;
  Half half;
  EdgeSign sign;
  friend bool operator==(const TaitEdge&, const TaitEdge&) = default;
};

inline bool edge_less(const TaitEdge& a, const TaitEdge& b) {
  return std::tuple(a.half, a.left, a.right, a.sign) < std::tuple(b.half, b.left, b.right, b.sign);
}

/// Edges are kept sorted (upper before lower, then by endpoints), so == compares multigraphs.
class TaitGraph {
 public:
  TaitGraph() = default;

  TaitGraph(int vertex_count, std::vector<TaitEdge> edges) : vertex_count_(vertex_count), edges_(std::move(edges)) {
    if (vertex_count_ < 1) throw RangeError("a Tait graph has at least one vertex");
    for (const auto& e : edges_) {
      if (e.left < 0 || e.right >= vertex_count_ || e.left >= e.right) {
        throw RangeError("edge (" + std::to_string(e.left) + "," + std::to_string(e.right) + ") is not a left-to-right pair of vertices");
      }
    }
    std::ranges::sort(edges_, edge_less);
  }

  int vertex_count() const noexcept { return vertex_count_; }
  const std::vector<TaitEdge>& edges() const noexcept { return edges_; }

  friend bool operator==(const TaitGraph&, const TaitGraph&) = default;

 private:
  int vertex_count_ = 1;
  std::vector<TaitEdge> edges_;
};

inline bool is_connected(const TaitGraph& g) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.vertex_count()));
  for (const auto& e : g.edges()) {
    adj[static_cast<std::size_t>(e.left)].push_back(e.right);
    adj[static_cast<std::size_t>(e.right)].push_back(e.left);
  }
  std::vector<bool> seen(adj.size(), false);
  std::vector<int> stack{0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : adj[static_cast<std::size_t>(v)]) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == g.vertex_count();
}

/// Every vertex but v0 is the right end of exactly one upper and one lower edge, and the
/// graph is connected. Holds for every graph coming from a binary tree diagram.
inline bool satisfies_tree_graph_properties(const TaitGraph& g) {
  std::vector<int> upper(static_cast<std::size_t>(g.vertex_count()), 0);
  std::vector<int> lower(upper.size(), 0);
  for (const auto& e : g.edges()) ++(e.half == Half::Upper ? upper : lower)[static_cast<std::size_t>(e.right)];
  if (upper[0] != 0 || lower[0] != 0) return false;
  for (std::size_t v = 1; v < upper.size(); ++v) {
    if (upper[v] != 1 || lower[v] != 1) return false;
  }
  return is_connected(g);
}

/// Binary first-leaf rule: a node with children (L, R) of the top tree gives the positive
/// upper edge (v_first(L), v_first(R)); the bottom tree gives negative lower edges alike.
inline TaitGraph tait_graph_binary(const TreeDiagram& d) {
  if (d.arity() != kBinary) throw ArityError("tait_graph_binary needs a diagram of F");
  const TreeDiagram r = reduce(d);
  std::vector<TaitEdge> edges;
  auto walk = [&](auto&& self, const Tree& node, int first, Half half) -> void {
    if (node.is_leaf()) return;
    const int split = first + node.child(0).leaf_count();
    edges.push_back({first, split, half, half == Half::Upper ? EdgeSign::Positive : EdgeSign::Negative});
    self(self, node.child(0), first, half);
    self(self, node.child(1), split, half);
  };
  walk(walk, r.top(), 0, Half::Upper);
  walk(walk, r.bottom(), 0, Half::Lower);
  return TaitGraph(r.leaf_count(), std::move(edges));
}

/// Either a proper coloring (+1/-1 per vertex, v0 = +1 and every other component rooted
/// at its smallest vertex with +1) or a closed odd walk v_a ... v_a.
struct Bipartition {
  std::optional<std::vector<int>> colors;
  std::vector<int> odd_cycle;
  bool bipartite() const noexcept { return colors.has_value(); }
};

inline Bipartition two_color(const TaitGraph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<std::vector<int>> adj(n);
  for (const auto& e : g.edges()) {
    adj[static_cast<std::size_t>(e.left)].push_back(e.right);
    adj[static_cast<std::size_t>(e.right)].push_back(e.left);
  }
  std::vector<int> color(n, 0);
  std::vector<int> parent(n, -1);
  std::vector<int> depth(n, 0);
  for (std::size_t root = 0; root < n; ++root) {
    if (color[root] != 0) continue;
    color[root] = 1;
    std::queue<int> queue;
    queue.push(static_cast<int>(root));
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop();
      for (int w : adj[static_cast<std::size_t>(v)]) {
        const auto wi = static_cast<std::size_t>(w);
        if (color[wi] == 0) {
          color[wi] = -color[static_cast<std::size_t>(v)];
          parent[wi] = v;
          depth[wi] = depth[static_cast<std::size_t>(v)] + 1;
          queue.push(w);
        } else if (color[wi] == color[static_cast<std::size_t>(v)]) {
          // Both tree paths meet at their lowest common ancestor; together with (v, w)
          // they close an odd cycle.
          std::vector<int> left{v};
          std::vector<int> right{w};
          int a = v;
          int b = w;
          while (a != b) {
            if (depth[static_cast<std::size_t>(a)] >= depth[static_cast<std::size_t>(b)]) {
              a = parent[static_cast<std::size_t>(a)];
              left.push_back(a);
            } else {
              b = parent[static_cast<std::size_t>(b)];
              right.push_back(b);
            }
          }
          right.pop_back();
          left.insert(left.end(), right.rbegin(), right.rend());
          left.push_back(v);
          return {std::nullopt, std::move(left)};
        }
      }
    }
  }
  return {std::move(color), {}};
}

inline std::string to_dot(const TaitGraph& g, const std::vector<int>* colors = nullptr) {
  std::string out = "graph tait {\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    out += "  v" + std::to_string(v);
    if (colors != nullptr) out += std::string(" [color=\"") + ((*colors)[static_cast<std::size_t>(v)] > 0 ? "+" : "-") + "\"]";
    out += ";\n";
  }
  for (const auto& e : g.edges()) {
    out += "  v" + std::to_string(e.left) + " -- v" + std::to_string(e.right) + " [half=" +
           (e.half == Half::Upper ? "upper" : "lower") + ", sign=" + (e.sign == EdgeSign::Positive ? "pos" : "neg") + "];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace thompson
