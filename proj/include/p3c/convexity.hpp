#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "p3c/error.hpp"
#include "p3c/graph.hpp"

namespace p3c {

/// Vertices added in each closure round of a hull computation.
struct HullTrace {
  std::vector<VertexSet> rounds;
};

namespace detail {

inline bool at_least_two(std::uint64_t x) noexcept { return (x & (x - 1)) != 0; }

inline void check_same_universe(const Graph& g, const VertexSet& s) {
  if (s.universe() != static_cast<std::size_t>(g.order()))
    throw input_error("vertex set universe does not match graph order");
}

}  // namespace detail

/// One closure round on a single-word graph: outside vertices with >= 2
/// neighbours in `cur`.
inline std::uint64_t hull_round_mask(const Graph& g, std::uint64_t cur) noexcept {
  const auto adj = g.neighbor_masks();
  std::uint64_t add = 0;
  std::uint64_t outside = g.vertex_mask() & ~cur;
  while (outside) {
    const int v = std::countr_zero(outside);
    outside &= outside - 1;
    if (detail::at_least_two(adj[static_cast<std::size_t>(v)] & cur)) add |= std::uint64_t{1} << v;
  }
  return add;
}

/// P3 hull on a graph with order() <= 64.
inline std::uint64_t hull_mask(const Graph& g, std::uint64_t seed) noexcept {
  std::uint64_t cur = seed;
  for (std::uint64_t add = hull_round_mask(g, cur); add; add = hull_round_mask(g, cur)) cur |= add;
  return cur;
}

inline bool is_convex_mask(const Graph& g, std::uint64_t u) noexcept {
  return hull_round_mask(g, u) == 0;
}

/// Free: no vertex of g (member or not) has two neighbours in a.
inline bool is_free_mask(const Graph& g, std::uint64_t a) noexcept {
  for (auto nb : g.neighbor_masks())
    if (detail::at_least_two(nb & a)) return false;
  return true;
}

namespace detail {

inline VertexSet hull_round(const Graph& g, const VertexSet& cur) {
  VertexSet add(cur.universe());
  for (vertex_t v = 0; v < g.order(); ++v)
    if (!cur.test(v) && g.neighbors(v).meet_count_upto2(cur) >= 2) add.set(v);
  return add;
}

}  // namespace detail

/// Round-synchronous closure of s: every round adds all outside vertices with
/// at least two neighbours in the current set.
inline HullTrace hull_trace(const Graph& g, const VertexSet& s) {
  detail::check_same_universe(g, s);
  HullTrace trace;
  VertexSet cur = s;
  for (;;) {
    VertexSet add = detail::hull_round(g, cur);
    if (add.empty()) break;
    cur |= add;
    trace.rounds.push_back(std::move(add));
  }
  return trace;
}

inline VertexSet hull(const Graph& g, const VertexSet& s) {
  detail::check_same_universe(g, s);
  if (g.has_word_adjacency())
    return VertexSet::from_mask(s.universe(), hull_mask(g, s.mask()));
  VertexSet cur = s;
  for (VertexSet add = detail::hull_round(g, cur); !add.empty(); add = detail::hull_round(g, cur))
    cur |= add;
  return cur;
}

inline bool is_convex(const Graph& g, const VertexSet& u) {
  detail::check_same_universe(g, u);
  if (g.has_word_adjacency()) return is_convex_mask(g, u.mask());
  return detail::hull_round(g, u).empty();
}

inline bool is_free(const Graph& g, const VertexSet& a) {
  detail::check_same_universe(g, a);
  if (g.has_word_adjacency()) return is_free_mask(g, a.mask());
  for (vertex_t v = 0; v < g.order(); ++v)
    if (g.neighbors(v).meet_count_upto2(a) >= 2) return false;
  return true;
}

inline constexpr int max_convex_enumeration_order = 20;

/// Every convex subset, in increasing bitmask order.
inline std::vector<VertexSet> all_convex_sets(const Graph& g) {
  if (g.order() > max_convex_enumeration_order)
    throw guard_error("all_convex_sets: n=" + std::to_string(g.order()) + " exceeds 20");
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<VertexSet> out;
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t u = 0; u < limit; ++u)
    if (is_convex_mask(g, u)) out.push_back(VertexSet::from_mask(n, u));
  return out;
}

struct FreeSetResult {
  int size = 0;
  VertexSet witness;
};

namespace detail {

// Maximum free set = maximum independent set of the conflict graph where two
// distinct vertices conflict iff they share a neighbour.
class FreeSetSearch {
 public:
  explicit FreeSetSearch(const Graph& g) : n_(g.order()) {
    const auto adj = g.neighbor_masks();
    conflict_.assign(static_cast<std::size_t>(n_), 0);
    for (int c = 0; c < n_; ++c) {
      std::uint64_t nb = adj[static_cast<std::size_t>(c)];
      for (std::uint64_t a = nb; a; a &= a - 1) {
        const int u = std::countr_zero(a);
        conflict_[static_cast<std::size_t>(u)] |= nb & ~(std::uint64_t{1} << u);
      }
    }
    order_.resize(static_cast<std::size_t>(n_));
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
  }

  std::pair<int, std::uint64_t> run(std::uint64_t allowed) {
    allowed_ = allowed;
    greedy();
    branch(0, 0, allowed);
    return {best_size_, best_};
  }

 private:
  std::uint64_t conflicts(int v) const { return conflict_[static_cast<std::size_t>(v)]; }

  // Fewest-conflicts-first greedy gives the initial lower bound.
  void greedy() {
    std::vector<int> by_conflicts(order_.rbegin(), order_.rend());
    std::stable_sort(by_conflicts.begin(), by_conflicts.end(), [&](int a, int b) {
      return std::popcount(conflicts(a)) < std::popcount(conflicts(b));
    });
    std::uint64_t chosen = 0, blocked = 0;
    for (int v : by_conflicts) {
      const std::uint64_t bit = std::uint64_t{1} << v;
      if ((blocked & bit) || !(allowed_ & bit)) continue;
      chosen |= bit;
      blocked |= bit | conflicts(v);
    }
    best_ = chosen;
    best_size_ = std::popcount(chosen);
  }

  // Greedy clique cover of the candidates in the conflict graph.
  int clique_cover_bound(std::uint64_t cand) const {
    int cliques = 0;
    while (cand) {
      int v = std::countr_zero(cand);
      std::uint64_t clique_ok = conflicts(v);
      cand &= ~(std::uint64_t{1} << v);
      std::uint64_t rest = cand & clique_ok;
      while (rest) {
        int w = std::countr_zero(rest);
        cand &= ~(std::uint64_t{1} << w);
        clique_ok &= conflicts(w);
        rest = cand & clique_ok;
      }
      ++cliques;
    }
    return cliques;
  }

  void branch(int size, std::uint64_t chosen, std::uint64_t cand) {
    if (!cand) {
      if (size > best_size_) {
        best_size_ = size;
        best_ = chosen;
      }
      return;
    }
    if (size + std::popcount(cand) <= best_size_) return;
    if (size + clique_cover_bound(cand) <= best_size_) return;
    int pick = -1;
    for (int v : order_)
      if ((cand >> v) & 1) {
        pick = v;
        break;
      }
    const std::uint64_t bit = std::uint64_t{1} << pick;
    branch(size + 1, chosen | bit, cand & ~bit & ~conflicts(pick));
    branch(size, chosen, cand & ~bit);
  }

  int n_;
  std::vector<std::uint64_t> conflict_;
  std::vector<int> order_;
  std::uint64_t allowed_ = 0;
  std::uint64_t best_ = 0;
  int best_size_ = 0;
};

}  // namespace detail

/// Exact maximum free set by branch and bound (n <= 64).
inline FreeSetResult max_free_set(const Graph& g) {
  if (!g.has_word_adjacency())
    throw guard_error("max_free_set: n=" + std::to_string(g.order()) + " exceeds 64");
  auto [size, mask] = detail::FreeSetSearch(g).run(g.vertex_mask());
  return {size, VertexSet::from_mask(static_cast<std::size_t>(g.order()), mask)};
}

/// Maximum free set avoiding `forbidden` (n <= 64).
inline FreeSetResult max_free_set_avoiding(const Graph& g, const VertexSet& forbidden) {
  if (!g.has_word_adjacency())
    throw guard_error("max_free_set: n=" + std::to_string(g.order()) + " exceeds 64");
  detail::check_same_universe(g, forbidden);
  auto [size, mask] = detail::FreeSetSearch(g).run(g.vertex_mask() & ~forbidden.mask());
  return {size, VertexSet::from_mask(static_cast<std::size_t>(g.order()), mask)};
}

}  // namespace p3c
