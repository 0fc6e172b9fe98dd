#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <queue>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "p3c/error.hpp"
#include "p3c/graph.hpp"

namespace p3c {

/// Hub 1 joined to everything plus the edges {2,3}, {4,5}, {6,7}; labels
/// 1..7 are stored as 0..6.
inline Graph counterexample_g1() {
  return new_graph(7, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6}, {1, 2}, {3, 4}, {5, 6}});
}

/// Index layout of block i (0-based) in sharpness_tree(m). Block i occupies
/// [10i, 10i + 10): spine v, its pendant u, the two branch nodes w and w',
/// then three leaves under w (x is the last) and three under w' (y is the last).
struct SharpnessBlock {
  vertex_t v, u, w, w2;
  std::array<vertex_t, 3> w_leaves, w2_leaves;
  vertex_t x() const { return w_leaves[2]; }
  vertex_t y() const { return w2_leaves[2]; }
};

inline SharpnessBlock sharpness_block(int i) {
  const vertex_t b = 10 * i;
  return {b, b + 1, b + 2, b + 3, {b + 4, b + 5, b + 6}, {b + 7, b + 8, b + 9}};
}

/// T_m: a spine path v_1..v_m where each v_i carries u_i, u_i carries w_i and
/// w_i', and each of those carries three leaves. 10m vertices.
inline Graph sharpness_tree(int m) {
  if (m < 1) throw input_error("sharpness_tree: m must be at least 1");
  std::vector<Edge> e;
  for (int i = 0; i < m; ++i) {
    const auto blk = sharpness_block(i);
    if (i > 0) e.emplace_back(sharpness_block(i - 1).v, blk.v);
    e.emplace_back(blk.v, blk.u);
    e.emplace_back(blk.u, blk.w);
    e.emplace_back(blk.u, blk.w2);
    for (vertex_t l : blk.w_leaves) e.emplace_back(blk.w, l);
    for (vertex_t l : blk.w2_leaves) e.emplace_back(blk.w2, l);
  }
  return new_graph(10 * m, e);
}

/// The 6m leaves hanging from the branch nodes w_i, w_i'.
inline VertexSet sharpness_branch_leaves(int m) {
  VertexSet s(static_cast<std::size_t>(10 * m));
  for (int i = 0; i < m; ++i) {
    const auto blk = sharpness_block(i);
    for (vertex_t l : blk.w_leaves) s.set(l);
    for (vertex_t l : blk.w2_leaves) s.set(l);
  }
  return s;
}

/// {x_i, y_i, w_i : i < m}, a free set of size 3m.
inline VertexSet sharpness_free_set(int m) {
  VertexSet s(static_cast<std::size_t>(10 * m));
  for (int i = 0; i < m; ++i) {
    const auto blk = sharpness_block(i);
    s.set(blk.x());
    s.set(blk.y());
    s.set(blk.w);
  }
  return s;
}

/// Builds the tree of a level sequence: entry i is the depth of vertex i in a
/// preorder walk, the root has depth 0.
inline Graph tree_from_levels(const std::vector<int>& levels) {
  std::vector<Edge> e;
  std::vector<vertex_t> stack;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    while (!stack.empty() && levels[static_cast<std::size_t>(stack.back())] >= levels[i])
      stack.pop_back();
    if (!stack.empty()) e.emplace_back(stack.back(), static_cast<vertex_t>(i));
    stack.push_back(static_cast<vertex_t>(i));
  }
  return new_graph(static_cast<int>(levels.size()), e);
}

/// Streams every unlabelled free tree on n vertices exactly once. Rooted level
/// sequences are stepped in the Beyer-Hedetniemi successor order and filtered
/// to the centroid-style canonical representatives of Wright, Richmond,
/// Odlyzko and McKay, jumping over runs of non-canonical sequences.
class TreeStream {
 public:
  explicit TreeStream(int n) : n_(n) {
    if (n < 1 || n > 20) throw input_error("enumerate_trees: n must be in 1..20");
    if (n == 1) {
      levels_ = std::vector<int>{0};
      return;
    }
    std::vector<int> l;
    for (int i = 0; i <= n / 2; ++i) l.push_back(i);
    for (int i = 1; i < (n + 1) / 2; ++i) l.push_back(i);
    levels_ = std::move(l);
  }

  int order() const noexcept { return n_; }

  /// Level sequence of the next tree, or nullopt when exhausted.
  std::optional<std::vector<int>> next_levels() {
    if (!levels_) return std::nullopt;
    if (n_ == 1) {
      auto out = *levels_;
      levels_.reset();
      return out;
    }
    while (levels_ && !canonical(*levels_)) levels_ = jump(*levels_);
    if (!levels_) return std::nullopt;
    auto out = *levels_;
    levels_ = next_rooted(*levels_, std::nullopt);
    return out;
  }

  std::optional<Graph> next() {
    auto l = next_levels();
    if (!l) return std::nullopt;
    return tree_from_levels(*l);
  }

 private:
  using Levels = std::vector<int>;

  static std::optional<Levels> next_rooted(const Levels& pred, std::optional<std::size_t> start) {
    std::size_t p = 0;
    if (start) {
      p = *start;
    } else {
      p = pred.size() - 1;
      while (p > 0 && pred[p] == 1) --p;
    }
    if (p == 0) return std::nullopt;
    std::size_t q = p - 1;
    while (pred[q] != pred[p] - 1) --q;
    Levels out = pred;
    for (std::size_t i = p; i < out.size(); ++i) out[i] = out[i - p + q];
    return out;
  }

  // Left subtree of the root (shifted up one level) and the remainder.
  static std::pair<Levels, Levels> split(const Levels& l) {
    std::size_t m = l.size();
    bool seen_one = false;
    for (std::size_t i = 0; i < l.size(); ++i) {
      if (l[i] == 1) {
        if (seen_one) {
          m = i;
          break;
        }
        seen_one = true;
      }
    }
    Levels left, rest{0};
    for (std::size_t i = 1; i < m; ++i) left.push_back(l[i] - 1);
    for (std::size_t i = m; i < l.size(); ++i) rest.push_back(l[i]);
    return {left, rest};
  }

  static bool canonical(const Levels& l) {
    auto [left, rest] = split(l);
    const int lh = *std::max_element(left.begin(), left.end());
    const int rh = *std::max_element(rest.begin(), rest.end());
    if (rh < lh) return false;
    if (rh == lh) {
      if (left.size() > rest.size()) return false;
      if (left.size() == rest.size() && left > rest) return false;
    }
    return true;
  }

  static std::optional<Levels> jump(const Levels& l) {
    auto [left, rest] = split(l);
    const std::size_t p = left.size();
    auto cand = next_rooted(l, p);
    if (cand && l[p] > 2) {
      auto [nl, nr] = split(*cand);
      const int h = *std::max_element(nl.begin(), nl.end());
      const std::size_t len = static_cast<std::size_t>(h) + 1;
      for (std::size_t i = 0; i < len; ++i) (*cand)[cand->size() - len + i] = static_cast<int>(i) + 1;
    }
    return cand;
  }

  int n_;
  std::optional<Levels> levels_;
};

inline TreeStream enumerate_trees(int n) { return TreeStream(n); }

/// Decodes a Prüfer sequence of length n-2 over 0..n-1.
inline Graph tree_from_pruefer(int n, const std::vector<int>& seq) {
  if (n < 1) throw input_error("tree_from_pruefer: n must be positive");
  if (n == 1) return new_graph(1, std::vector<Edge>{});
  if (static_cast<int>(seq.size()) != n - 2) throw input_error("tree_from_pruefer: bad length");
  std::vector<int> deg(static_cast<std::size_t>(n), 1);
  for (int x : seq) {
    if (x < 0 || x >= n) throw input_error("tree_from_pruefer: label out of range");
    ++deg[static_cast<std::size_t>(x)];
  }
  std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
  for (int v = 0; v < n; ++v)
    if (deg[static_cast<std::size_t>(v)] == 1) leaves.push(v);
  std::vector<Edge> e;
  for (int x : seq) {
    const int leaf = leaves.top();
    leaves.pop();
    e.emplace_back(leaf, x);
    if (--deg[static_cast<std::size_t>(x)] == 1) leaves.push(x);
  }
  const int a = leaves.top();
  leaves.pop();
  e.emplace_back(a, leaves.top());
  return new_graph(n, e);
}

/// Uniform labelled tree on n vertices from a seeded Prüfer sequence.
inline Graph random_tree(int n, std::uint64_t seed) {
  if (n < 1) throw input_error("random_tree: n must be positive");
  std::mt19937_64 rng(seed);
  // Rejection sampling keeps the draw independent of the standard library's
  // distribution implementation.
  const auto bound = static_cast<std::uint64_t>(n);
  const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % bound;
  std::vector<int> seq;
  for (int i = 0; i + 2 < n; ++i) {
    std::uint64_t r = 0;
    do r = rng();
    while (r >= limit);
    seq.push_back(static_cast<int>(r % bound));
  }
  return tree_from_pruefer(n, seq);
}

}  // namespace p3c
