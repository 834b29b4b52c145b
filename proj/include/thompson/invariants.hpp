#pragma once

/**
 * @file invariants.hpp
 * @brief Component count, writhe, the Kauffman bracket (state enumeration and memoised
 * skein recursion) and the Jones polynomial in the bracket variable A.
 *
 * <D> = sum over states of A^(#A - #B) d^(loops - 1) with d = -A^2 - A^-2, so <O> = 1.
 * V(D) = (-A)^(-3 w(D)) <D>; t = A^-4.
 */

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <thread>
#include <vector>

#include "thompson/error.hpp"
#include "thompson/laurent.hpp"
#include "thompson/link_builder.hpp"
#include "thompson/link_diagram.hpp"

namespace thompson {

inline constexpr int kBracketCrossingBudget = 24;

inline LaurentPoly loop_value() { return LaurentPoly::monomial(2, -1) + LaurentPoly::monomial(-2, -1); }

inline int components(const LinkDiagram& l) { return component_count_of_arcs(l) + l.free_loops(); }

inline int writhe(const LinkDiagram& l) {
  int w = 0;
  for (int c = 0; c < l.crossing_count(); ++c) w += crossing_sign(l, c);
  return w;
}

namespace detail {

inline void check_bracket_input(const LinkDiagram& l) {
  if (l.crossing_count() == 0 && l.free_loops() == 0) throw RangeError("the empty diagram has no bracket");
}

inline LaurentPoly loop_power(int k) { return loop_value().pow(k); }

// Histogram[b][loops] over all states; exponent of A is n - 2b.
inline LaurentPoly bracket_from_histogram(int n, int free_loops, const std::vector<std::vector<std::int64_t>>& hist) {
  LaurentPoly out;
  std::vector<LaurentPoly> powers;
  for (int b = 0; b <= n; ++b) {
    for (std::size_t loops = 0; loops < hist[static_cast<std::size_t>(b)].size(); ++loops) {
      const auto count = hist[static_cast<std::size_t>(b)][loops];
      if (count == 0) continue;
      const auto k = static_cast<std::size_t>(static_cast<int>(loops) + free_loops - 1);
      while (powers.size() <= k) powers.push_back(loop_power(static_cast<int>(powers.size())));
      out += LaurentPoly::monomial(n - 2 * b, count) * powers[k];
    }
  }
  return out;
}

}  // namespace detail

/// Full enumeration of the 2^n smoothing states; loops counted with a union-find over arcs.
/// The state range is split across `threads` workers; the result does not depend on it.
inline LaurentPoly kauffman_bracket_states(const LinkDiagram& l, unsigned threads = 1) {
  detail::check_bracket_input(l);
  const int n = l.crossing_count();
  if (n > kBracketCrossingBudget) {
    throw BudgetError("state sum limited to " + std::to_string(kBracketCrossingBudget) + " crossings, diagram has " +
                      std::to_string(n));
  }
  if (n == 0) return detail::loop_power(l.free_loops() - 1);
  const int arcs = l.arc_count();
  using Hist = std::vector<std::vector<std::int64_t>>;
  const std::uint64_t states = std::uint64_t{1} << n;
  threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(std::min<std::uint64_t>(states, 64))));

  auto run = [&](std::uint64_t begin, std::uint64_t end, Hist& hist) {
    std::vector<int> parent(static_cast<std::size_t>(arcs));
    auto find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) {
        parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        x = parent[static_cast<std::size_t>(x)];
      }
      return x;
    };
    for (std::uint64_t state = begin; state < end; ++state) {
      std::iota(parent.begin(), parent.end(), 0);
      int loops = arcs;
      auto unite = [&](int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) {
          parent[static_cast<std::size_t>(a)] = b;
          --loops;
        }
      };
      for (int c = 0; c < n; ++c) {
        const auto& x = l.crossings()[static_cast<std::size_t>(c)].arcs;
        if ((state >> c) & 1U) {  // B: slots (1,2) and (3,0)
          unite(x[1], x[2]);
          unite(x[3], x[0]);
        } else {  // A: slots (0,1) and (2,3)
          unite(x[0], x[1]);
          unite(x[2], x[3]);
        }
      }
      ++hist[static_cast<std::size_t>(std::popcount(state))][static_cast<std::size_t>(loops)];
    }
  };

  std::vector<Hist> partial(threads, Hist(static_cast<std::size_t>(n + 1), std::vector<std::int64_t>(static_cast<std::size_t>(arcs + 1), 0)));
  if (threads == 1) {
    run(0, states, partial[0]);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      const std::uint64_t begin = states * t / threads;
      const std::uint64_t end = states * (t + 1) / threads;
      pool.emplace_back(run, begin, end, std::ref(partial[t]));
    }
    for (auto& th : pool) th.join();
  }
  Hist total = partial[0];
  for (unsigned t = 1; t < threads; ++t) {
    for (std::size_t b = 0; b < total.size(); ++b) {
      for (std::size_t k = 0; k < total[b].size(); ++k) total[b][k] += partial[t][b][k];
    }
  }
  return detail::bracket_from_histogram(n, l.free_loops(), total);
}

namespace detail {

class SkeinEvaluator {
 public:
  using Quad = std::array<int, 4>;

  // Sum over states of the remaining crossings of A^(#A-#B) d^(closed loops - 1); every
  // call has at least one crossing, so at least one loop closes below it.
  LaurentPoly evaluate(const std::vector<Quad>& crossings) {
    const auto key = canonical(crossings);
    if (const auto it = memo_.find(key); it != memo_.end()) return it->second;
    LaurentPoly value = smooth(key, 1, LaurentPoly::monomial(1)) + smooth(key, 3, LaurentPoly::monomial(-1));
    memo_.emplace(key, value);
    return value;
  }

 private:
  // Relabels arcs in order of first appearance.
  static std::vector<Quad> canonical(const std::vector<Quad>& crossings) {
    std::map<int, int> rename;
    std::vector<Quad> out = crossings;
    for (auto& q : out) {
      for (int& a : q) a = rename.try_emplace(a, static_cast<int>(rename.size())).first->second;
    }
    return out;
  }

  // Smooths the first crossing joining slot 0 to slot `partner` (1 for A, 3 for B).
  LaurentPoly smooth(const std::vector<Quad>& crossings, int partner, const LaurentPoly& weight) {
    std::vector<Quad> rest(crossings.begin() + 1, crossings.end());
    const Quad& x = crossings.front();
    const std::array<std::array<int, 2>, 2> pairs{{{x[0], x[partner]}, {x[2], x[(partner + 2) % 4]}}};
    int closed = 0;
    std::vector<std::array<int, 2>> pending(pairs.begin(), pairs.end());
    for (std::size_t i = 0; i < pending.size(); ++i) {
      const int a = pending[i][0];
      const int b = pending[i][1];
      if (a == b) {
        ++closed;
        continue;
      }
      for (auto& q : rest) std::ranges::replace(q, b, a);
      for (std::size_t j = i + 1; j < pending.size(); ++j) std::ranges::replace(pending[j], b, a);
    }
    if (rest.empty()) {
      if (closed == 0) throw InternalError("skein recursion ended without closing a loop");
      return weight * loop_power(closed - 1);
    }
    return weight * loop_power(closed) * evaluate(rest);
  }

  std::map<std::vector<Quad>, LaurentPoly> memo_;
};

}  // namespace detail

/// Recursive smoothing of the first crossing with memoisation on relabelled sub-diagrams.
inline LaurentPoly kauffman_bracket_skein(const LinkDiagram& l) {
  detail::check_bracket_input(l);
  if (l.crossing_count() == 0) return detail::loop_power(l.free_loops() - 1);
  std::vector<std::array<int, 4>> crossings;
  for (const auto& c : l.crossings()) crossings.push_back(c.arcs);
  detail::SkeinEvaluator evaluator;
  return evaluator.evaluate(crossings) * detail::loop_power(l.free_loops());
}

inline LaurentPoly kauffman_bracket(const LinkDiagram& l, unsigned threads = 1) { return kauffman_bracket_states(l, threads); }

/// Needs an orientation, except for knots where any orientation gives the same value and
/// the traced one is used.
inline LaurentPoly jones_polynomial(const LinkDiagram& l, unsigned threads = 1) {
  const LinkDiagram oriented = [&] {
    if (l.oriented()) return l;
    if (components(l) == 1) return orient_by_tracing(l);
    throw RangeError("the Jones polynomial of a link needs an oriented diagram");
  }();
  const int w = writhe(oriented);
  const LaurentPoly factor = LaurentPoly::monomial(-3 * w, (w % 2 == 0) ? 1 : -1);
  return factor * kauffman_bracket_states(oriented, threads);
}

}  // namespace thompson
