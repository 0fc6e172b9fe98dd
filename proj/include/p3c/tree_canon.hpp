#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "p3c/error.hpp"
#include "p3c/graph.hpp"
#include "p3c/graph_io.hpp"

namespace p3c {

namespace detail {

struct RootedShape {
  std::vector<std::vector<vertex_t>> children;  // sorted by canonical code
  std::vector<std::string> code;
};

// AHU encoding: "(" + sorted child codes + ")". Iterative so deep paths are fine.
inline RootedShape rooted_shape(const Graph& t, vertex_t root) {
  const auto n = static_cast<std::size_t>(t.order());
  RootedShape s;
  s.children.assign(n, {});
  s.code.assign(n, {});
  std::vector<vertex_t> parent(n, -1), order;
  order.reserve(n);
  std::vector<vertex_t> stack{root};
  parent[static_cast<std::size_t>(root)] = root;
  while (!stack.empty()) {
    vertex_t u = stack.back();
    stack.pop_back();
    order.push_back(u);
    t.neighbors(u).for_each([&](vertex_t w) {
      if (parent[static_cast<std::size_t>(w)] == -1) {
        parent[static_cast<std::size_t>(w)] = u;
        s.children[static_cast<std::size_t>(u)].push_back(w);
        stack.push_back(w);
      }
    });
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    auto& kids = s.children[static_cast<std::size_t>(*it)];
    std::sort(kids.begin(), kids.end(), [&](vertex_t a, vertex_t b) {
      const auto& ca = s.code[static_cast<std::size_t>(a)];
      const auto& cb = s.code[static_cast<std::size_t>(b)];
      return ca != cb ? ca < cb : a < b;
    });
    std::string c = "(";
    for (vertex_t k : kids) c += s.code[static_cast<std::size_t>(k)];
    c += ')';
    s.code[static_cast<std::size_t>(*it)] = std::move(c);
  }
  return s;
}

inline std::vector<vertex_t> tree_centers(const Graph& t) {
  const int n = t.order();
  if (n <= 2) {
    std::vector<vertex_t> all;
    for (vertex_t v = 0; v < n; ++v) all.push_back(v);
    return all;
  }
  std::vector<int> deg(static_cast<std::size_t>(n));
  std::vector<vertex_t> layer;
  for (vertex_t v = 0; v < n; ++v) {
    deg[static_cast<std::size_t>(v)] = t.degree(v);
    if (deg[static_cast<std::size_t>(v)] == 1) layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<vertex_t> next;
    for (vertex_t leaf : layer)
      t.neighbors(leaf).for_each([&](vertex_t w) {
        if (--deg[static_cast<std::size_t>(w)] == 1) next.push_back(w);
      });
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

}  // namespace detail

/// Canonical string of t rooted at `root`; equal iff rooted-isomorphic.
inline std::string rooted_tree_code(const Graph& t, vertex_t root) {
  if (!is_tree(t)) throw structure_error("rooted_tree_code: graph is not a tree");
  if (!t.contains(root)) throw input_error("rooted_tree_code: root out of range");
  return detail::rooted_shape(t, root).code[static_cast<std::size_t>(root)];
}

/// Canonical string of an unrooted tree (minimum code over its centres).
inline std::string free_tree_code(const Graph& t) {
  if (!is_tree(t)) throw structure_error("free_tree_code: graph is not a tree");
  std::string best;
  for (vertex_t c : detail::tree_centers(t)) {
    auto code = detail::rooted_shape(t, c).code[static_cast<std::size_t>(c)];
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

/// Relabels a tree in preorder of its canonical rooted shape, so isomorphic
/// trees map to identical labelled graphs.
inline Graph canonical_tree(const Graph& t) {
  if (!is_tree(t)) throw structure_error("canonical_tree: graph is not a tree");
  vertex_t best_root = -1;
  detail::RootedShape best;
  for (vertex_t c : detail::tree_centers(t)) {
    auto shape = detail::rooted_shape(t, c);
    if (best_root < 0 || shape.code[static_cast<std::size_t>(c)] <
                             best.code[static_cast<std::size_t>(best_root)]) {
      best_root = c;
      best = std::move(shape);
    }
  }
  std::vector<int> label(static_cast<std::size_t>(t.order()), -1);
  std::vector<vertex_t> stack{best_root};
  int next = 0;
  while (!stack.empty()) {
    vertex_t u = stack.back();
    stack.pop_back();
    label[static_cast<std::size_t>(u)] = next++;
    const auto& kids = best.children[static_cast<std::size_t>(u)];
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
  }
  std::vector<Edge> e;
  for (auto [u, v] : t.edges())
    e.emplace_back(label[static_cast<std::size_t>(u)], label[static_cast<std::size_t>(v)]);
  return new_graph(t.order(), e);
}

/// graph6 of canonical_tree(t); the tree identifier used in reports.
inline std::string canonical_graph6(const Graph& t) { return to_graph6(canonical_tree(t)); }

}  // namespace p3c
