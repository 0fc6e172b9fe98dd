#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "p3c/error.hpp"
#include "p3c/vertex_set.hpp"

namespace p3c {

using Edge = std::pair<vertex_t, vertex_t>;

/// Undirected simple graph stored as per-vertex neighbour bit vectors.
/// Immutable once built; see new_graph().
class Graph {
 public:
  Graph() = default;

  int order() const noexcept { return static_cast<int>(adj_.size()); }
  std::size_t edge_count() const noexcept { return m_; }

  const VertexSet& neighbors(vertex_t v) const { return adj_.at(static_cast<std::size_t>(v)); }
  int degree(vertex_t v) const { return static_cast<int>(neighbors(v).count()); }
  bool adjacent(vertex_t u, vertex_t v) const { return neighbors(u).test(v); }
  bool contains(vertex_t v) const noexcept { return v >= 0 && v < order(); }

  /// Single-word adjacency, available when order() <= 64.
  bool has_word_adjacency() const noexcept { return order() <= 64; }
  std::uint64_t neighbor_mask(vertex_t v) const { return adj64_.at(static_cast<std::size_t>(v)); }
  std::span<const std::uint64_t> neighbor_masks() const noexcept { return adj64_; }
  std::uint64_t vertex_mask() const noexcept { return VertexSet::full_mask(adj64_.size()); }

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (vertex_t u = 0; u < order(); ++u)
      adj_[static_cast<std::size_t>(u)].for_each([&](vertex_t v) {
        if (u < v) out.emplace_back(u, v);
      });
    return out;
  }

  VertexSet empty_set() const { return VertexSet(adj_.size()); }
  VertexSet all_vertices() const { return VertexSet::full(adj_.size()); }

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

  friend Graph new_graph(int n, std::span<const Edge> edges);

 private:
  std::vector<VertexSet> adj_;
  std::vector<std::uint64_t> adj64_;
  std::size_t m_ = 0;
};

/// Builds a graph on n vertices. Duplicate edges collapse; self-loops and
/// out-of-range endpoints throw input_error.
inline Graph new_graph(int n, std::span<const Edge> edges) {
  if (n < 0) throw input_error("negative vertex count");
  Graph g;
  g.adj_.assign(static_cast<std::size_t>(n), VertexSet(static_cast<std::size_t>(n)));
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw input_error("edge (" + std::to_string(u) + "," + std::to_string(v) +
                        ") has an endpoint out of range for n=" + std::to_string(n));
    if (u == v) throw input_error("self-loop at vertex " + std::to_string(u));
    g.adj_[static_cast<std::size_t>(u)].set(v);
    g.adj_[static_cast<std::size_t>(v)].set(u);
  }
  std::size_t deg_sum = 0;
  for (const auto& a : g.adj_) deg_sum += a.count();
  g.m_ = deg_sum / 2;
  if (n <= 64) {
    g.adj64_.reserve(static_cast<std::size_t>(n));
    for (const auto& a : g.adj_) g.adj64_.push_back(a.mask());
  }
  return g;
}

inline Graph new_graph(int n, std::initializer_list<Edge> edges) {
  return new_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

inline Graph path_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return new_graph(n, e);
}

/// K_{1,leaves} with the centre at vertex 0.
inline Graph star_graph(int leaves) {
  std::vector<Edge> e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return new_graph(leaves + 1, e);
}

/// Vertices reachable from `start`.
inline VertexSet reachable(const Graph& g, vertex_t start) {
  VertexSet seen(static_cast<std::size_t>(g.order()));
  if (!g.contains(start)) return seen;
  std::vector<vertex_t> stack{start};
  seen.set(start);
  while (!stack.empty()) {
    vertex_t u = stack.back();
    stack.pop_back();
    g.neighbors(u).for_each([&](vertex_t w) {
      if (!seen.test(w)) {
        seen.set(w);
        stack.push_back(w);
      }
    });
  }
  return seen;
}

inline bool is_connected(const Graph& g) {
  return g.order() == 0 || reachable(g, 0).count() == static_cast<std::size_t>(g.order());
}

/// Connected with exactly n-1 edges. The empty graph is not a tree.
inline bool is_tree(const Graph& g) {
  return g.order() >= 1 && g.edge_count() + 1 == static_cast<std::size_t>(g.order()) &&
         is_connected(g);
}

/// Degree-1 vertices.
inline VertexSet endvertices(const Graph& g) {
  VertexSet s(static_cast<std::size_t>(g.order()));
  for (vertex_t v = 0; v < g.order(); ++v)
    if (g.degree(v) == 1) s.set(v);
  return s;
}

/// Subgraph induced by `keep`, relabelled in increasing order of parent index.
/// labels[i] is the parent-graph vertex of new vertex i.
inline std::pair<Graph, std::vector<vertex_t>> induced_subgraph(const Graph& g,
                                                                const VertexSet& keep) {
  std::vector<vertex_t> labels = keep.elements();
  std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < labels.size(); ++i)
    index[static_cast<std::size_t>(labels[i])] = static_cast<int>(i);
  std::vector<Edge> e;
  for (std::size_t i = 0; i < labels.size(); ++i)
    g.neighbors(labels[i]).for_each([&](vertex_t w) {
      int j = index[static_cast<std::size_t>(w)];
      if (j > static_cast<int>(i)) e.emplace_back(static_cast<vertex_t>(i), j);
    });
  return {new_graph(static_cast<int>(labels.size()), e), std::move(labels)};
}

/// One component of T - v, rooted at the neighbour of v it contains.
struct RootedComponent {
  Graph graph;
  vertex_t root = 0;
  std::vector<vertex_t> labels;  // component vertex -> parent vertex
};

/// Components of t - v, one per neighbour of v in increasing neighbour order.
inline std::vector<RootedComponent> remove_vertex_components(const Graph& t, vertex_t v) {
  if (!t.contains(v)) throw input_error("vertex " + std::to_string(v) + " out of range");
  if (!is_tree(t)) throw structure_error("remove_vertex_components: graph is not a tree");

  std::vector<RootedComponent> out;
  t.neighbors(v).for_each([&](vertex_t nb) {
    VertexSet comp(static_cast<std::size_t>(t.order()));
    std::vector<vertex_t> stack{nb};
    comp.set(nb);
    while (!stack.empty()) {
      vertex_t u = stack.back();
      stack.pop_back();
      t.neighbors(u).for_each([&](vertex_t w) {
        if (w != v && !comp.test(w)) {
          comp.set(w);
          stack.push_back(w);
        }
      });
    }
    auto [sub, labels] = induced_subgraph(t, comp);
    RootedComponent rc;
    rc.graph = std::move(sub);
    rc.labels = std::move(labels);
    for (std::size_t i = 0; i < rc.labels.size(); ++i)
      if (rc.labels[i] == nb) rc.root = static_cast<vertex_t>(i);
    out.push_back(std::move(rc));
  });
  return out;
}

}  // namespace p3c
