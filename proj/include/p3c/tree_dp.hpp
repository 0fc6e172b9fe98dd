#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <limits>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "p3c/convexity.hpp"
#include "p3c/error.hpp"
#include "p3c/graph.hpp"
#include "p3c/radon.hpp"
#include "p3c/tree_canon.hpp"

namespace p3c {

namespace detail {

inline void require_tree(const Graph& t, const char* who) {
  if (!is_tree(t)) throw structure_error(std::string(who) + ": graph is not a tree");
}

inline constexpr int infeasible = std::numeric_limits<int>::min() / 4;

}  // namespace detail

/// DP table for maximum free sets on a rooted tree. value[in][used] is the best
/// free-set size inside the subtree of v when v is in A (in) and v already has
/// a child in A (used). Every vertex below v satisfies the free condition;
/// v's own condition is finished by its parent.
struct AlphaStates {
  using Table = std::array<std::array<int, 2>, 2>;
  std::vector<Table> value;
  std::vector<vertex_t> parent;
  std::vector<vertex_t> preorder;
};

namespace detail {

inline AlphaStates alpha_states(const Graph& t, vertex_t root) {
  const auto n = static_cast<std::size_t>(t.order());
  AlphaStates s;
  s.value.assign(n, {{{infeasible, infeasible}, {infeasible, infeasible}}});
  s.parent.assign(n, -1);
  s.preorder.reserve(n);
  std::vector<vertex_t> stack{root};
  s.parent[static_cast<std::size_t>(root)] = root;
  while (!stack.empty()) {
    vertex_t u = stack.back();
    stack.pop_back();
    s.preorder.push_back(u);
    t.neighbors(u).for_each([&](vertex_t w) {
      if (s.parent[static_cast<std::size_t>(w)] == -1) {
        s.parent[static_cast<std::size_t>(w)] = u;
        stack.push_back(w);
      }
    });
  }
  for (auto it = s.preorder.rbegin(); it != s.preorder.rend(); ++it) {
    const vertex_t v = *it;
    for (int in = 0; in < 2; ++in) {
      int base = in;
      int gain = infeasible;
      bool ok = true;
      t.neighbors(v).for_each([&](vertex_t c) {
        if (c == s.parent[static_cast<std::size_t>(v)] || !ok) return;
        const auto& tc = s.value[static_cast<std::size_t>(c)];
        // The child may already have a child of its own in A only if v is not in A.
        const int f0 = in ? tc[0][0] : std::max(tc[0][0], tc[0][1]);
        const int f1 = in ? tc[1][0] : std::max(tc[1][0], tc[1][1]);
        if (f0 <= infeasible) {
          ok = false;
          return;
        }
        base += f0;
        if (f1 > infeasible) gain = std::max(gain, f1 - f0);
      });
      if (!ok) continue;
      auto& tv = s.value[static_cast<std::size_t>(v)];
      tv[static_cast<std::size_t>(in)][0] = base;
      if (gain > infeasible) tv[static_cast<std::size_t>(in)][1] = base + gain;
    }
  }
  return s;
}

// Recovers a set realizing value[in][used] at every vertex, top-down. Ties pick
// the lowest-index child to host the single in-A child.
inline VertexSet alpha_witness(const Graph& t, const AlphaStates& s, vertex_t root) {
  const auto n = static_cast<std::size_t>(t.order());
  std::vector<std::array<int, 2>> state(n, {0, 0});
  VertexSet a(n);
  const auto& tr = s.value[static_cast<std::size_t>(root)];
  int best = infeasible;
  for (int in = 0; in < 2; ++in)
    for (int used = 0; used < 2; ++used)
      if (tr[static_cast<std::size_t>(in)][static_cast<std::size_t>(used)] > best) {
        best = tr[static_cast<std::size_t>(in)][static_cast<std::size_t>(used)];
        state[static_cast<std::size_t>(root)] = {in, used};
      }
  for (vertex_t v : s.preorder) {
    const auto [in, used] = state[static_cast<std::size_t>(v)];
    if (in) a.set(v);
    vertex_t host = -1;
    if (used) {
      int best_gain = infeasible;
      t.neighbors(v).for_each([&](vertex_t c) {
        if (c == s.parent[static_cast<std::size_t>(v)]) return;
        const auto& tc = s.value[static_cast<std::size_t>(c)];
        const int f0 = in ? tc[0][0] : std::max(tc[0][0], tc[0][1]);
        const int f1 = in ? tc[1][0] : std::max(tc[1][0], tc[1][1]);
        if (f1 > infeasible && f1 - f0 > best_gain) {
          best_gain = f1 - f0;
          host = c;
        }
      });
    }
    t.neighbors(v).for_each([&](vertex_t c) {
      if (c == s.parent[static_cast<std::size_t>(v)]) return;
      const auto& tc = s.value[static_cast<std::size_t>(c)];
      const int cin = c == host ? 1 : 0;
      int cused = 0;
      if (!in && tc[static_cast<std::size_t>(cin)][1] > tc[static_cast<std::size_t>(cin)][0]) cused = 1;
      state[static_cast<std::size_t>(c)] = {cin, cused};
    });
  }
  return a;
}

}  // namespace detail

/// Maximum free set of a tree via the 4-state rooted DP.
inline FreeSetResult alpha_tree(const Graph& t) {
  detail::require_tree(t, "alpha_tree");
  const auto s = detail::alpha_states(t, 0);
  FreeSetResult r;
  r.witness = detail::alpha_witness(t, s, 0);
  r.size = static_cast<int>(r.witness.count());
  return r;
}

/// Largest free set avoiding v, by recursion over the components T_i of T - v
/// (rooted at the neighbours v_i): at most one v_i may join A, so
///   a*(T, v) = max_j ( a(T_j) + sum_{i != j} a*(T_i, v_i) ).
inline int alpha_star_tree(const Graph& t, vertex_t v) {
  detail::require_tree(t, "alpha_star_tree");
  if (!t.contains(v)) throw input_error("alpha_star_tree: vertex out of range");
  int sum_star = 0;
  int best_swap = 0;  // no neighbour of v in A is always allowed
  for (const auto& comp : remove_vertex_components(t, v)) {
    const int star = alpha_star_tree(comp.graph, comp.root);
    const int whole = alpha_tree(comp.graph).size;
    sum_star += star;
    best_swap = std::max(best_swap, whole - star);
  }
  return sum_star + best_swap;
}

/// Concurrent memo for radon_star_tree keyed by canonical tree codes.
/// Inserts are idempotent, so racing writers store the same value.
class RadonMemo {
 public:
  std::optional<int> find(const std::string& key) const {
    std::shared_lock lock(mu_);
    auto it = table_.find(key);
    if (it == table_.end()) return std::nullopt;
    return it->second;
  }
  void insert(const std::string& key, int value) {
    std::unique_lock lock(mu_);
    table_.emplace(key, value);
  }
  std::size_t size() const {
    std::shared_lock lock(mu_);
    return table_.size();
  }

 private:
  mutable std::shared_mutex mu_;
  std::unordered_map<std::string, int> table_;
};

/// Exact r_k of a whole graph, used as the base of radon_star_tree.
inline int exact_radon_multiset_number(const Graph& g, int k) {
  return max_anti_radon_multiset(g, k).value;
}

/// r*_k(T, v) from the component recursion
///   r*_k(T, v) = max_i ( r_k(T_i) + sum_{j != i} r*_k(T_j, v_j) ),
/// where `base` supplies r_k of each whole component. A single vertex gives 0.
template <class Base>
int radon_star_tree(const Graph& t, vertex_t v, int k, Base&& base, RadonMemo* memo = nullptr) {
  detail::require_tree(t, "radon_star_tree");
  if (!t.contains(v)) throw input_error("radon_star_tree: vertex out of range");
  if (k < 2) throw guard_error("radon_star_tree: k must be at least 2");

  const std::string kk = std::to_string(k) + ':';
  std::string key;
  if (memo) {
    key = kk + "*" + rooted_tree_code(t, v);
    if (auto hit = memo->find(key)) return *hit;
  }

  int sum_star = 0;
  int best_swap = std::numeric_limits<int>::min();
  for (const auto& comp : remove_vertex_components(t, v)) {
    const int star = radon_star_tree(comp.graph, comp.root, k, base, memo);
    int whole = 0;
    if (memo) {
      const std::string wkey = kk + free_tree_code(comp.graph);
      if (auto hit = memo->find(wkey)) {
        whole = *hit;
      } else {
        whole = base(comp.graph, k);
        memo->insert(wkey, whole);
      }
    } else {
      whole = base(comp.graph, k);
    }
    sum_star += star;
    best_swap = std::max(best_swap, whole - star);
  }
  const int value = best_swap == std::numeric_limits<int>::min() ? 0 : sum_star + best_swap;
  if (memo) memo->insert(key, value);
  return value;
}

inline int radon_star_tree(const Graph& t, vertex_t v, int k, RadonMemo* memo = nullptr) {
  return radon_star_tree(t, v, k, exact_radon_multiset_number, memo);
}

/// Endvertices at distance two from the endvertex v.
inline VertexSet brothers(const Graph& t, vertex_t v) {
  VertexSet out(static_cast<std::size_t>(t.order()));
  if (t.degree(v) != 1) return out;
  const vertex_t u = t.neighbors(v).first();
  t.neighbors(u).for_each([&](vertex_t w) {
    if (w != v && t.degree(w) == 1) out.set(w);
  });
  return out;
}

/// Every endvertex is in a or has a brother in a.
inline bool covers_endvertices(const Graph& t, const VertexSet& a) {
  bool ok = true;
  endvertices(t).for_each([&](vertex_t v) {
    if (!a.test(v) && !brothers(t, v).intersects(a)) ok = false;
  });
  return ok;
}

/// Maximum free set in which every endvertex is a member or has a brother in
/// it. Starts from a maximum free set and repeatedly trades the non-endvertex
/// blocker next to an uncovered endvertex for that endvertex; each trade
/// covers one more endvertex and uncovers none.
inline VertexSet free_set_covering_leaves(const Graph& t) {
  detail::require_tree(t, "free_set_covering_leaves");
  if (t.order() < 2) throw structure_error("free_set_covering_leaves: tree needs >= 2 vertices");
  VertexSet a = alpha_tree(t).witness;
  const VertexSet ends = endvertices(t);
  for (;;) {
    vertex_t uncovered = -1;
    ends.for_each([&](vertex_t v) {
      if (uncovered < 0 && !a.test(v) && !brothers(t, v).intersects(a)) uncovered = v;
    });
    if (uncovered < 0) return a;
    const vertex_t u = t.neighbors(uncovered).first();
    vertex_t blocker = -1;
    t.neighbors(u).for_each([&](vertex_t w) {
      if (blocker < 0 && w != uncovered && a.test(w)) blocker = w;
    });
    // A maximum free set cannot absorb v, so u already has a member neighbour,
    // and that neighbour is not an endvertex since v is uncovered.
    if (blocker < 0 || t.degree(blocker) == 1)
      throw std::logic_error("free_set_covering_leaves: start set is not maximum");
    a.reset(blocker);
    a.set(uncovered);
  }
}

}  // namespace p3c
