#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "p3c/convexity.hpp"
#include "p3c/error.hpp"
#include "p3c/graph.hpp"

namespace p3c {

/// k nonempty multisets summing to the partitioned multiset.
struct Partition {
  std::vector<VertexMultiset> parts;
};

struct RadonResult {
  int value = 0;
  VertexMultiset witness;
  bool certificate_checked = false;
};

inline constexpr int max_radon_k = 5;
inline constexpr int max_radon_support = 24;

/// Lowest vertex lying in the hull of every part's support.
inline std::optional<vertex_t> hulls_common_point(const Graph& g,
                                                  std::span<const VertexMultiset> parts) {
  if (parts.empty()) return std::nullopt;
  VertexSet common = g.all_vertices();
  for (const auto& p : parts) {
    if (p.universe() != static_cast<std::size_t>(g.order()))
      throw input_error("multiset universe does not match graph order");
    common &= hull(g, p.support());
    if (common.empty()) return std::nullopt;
  }
  return common.first();
}

namespace detail {

inline void check_radon_args(const Graph& g, int k) {
  if (k < 2 || k > max_radon_k)
    throw guard_error("k=" + std::to_string(k) + " outside supported range 2..5");
  if (!g.has_word_adjacency())
    throw guard_error("radon search: n=" + std::to_string(g.order()) + " exceeds 64");
}

/// Incrementally maintained table of minimal hull witnesses over a growing
/// support. For every point c it lists the inclusion-minimal subsets X of the
/// support with c in hull(X) and c not in X. Subsets are indexed by their
/// compressed bit pattern over the support, in insertion order, so the table
/// for a support is a prefix of the table for any extension of it.
class WitnessTable {
 public:
  explicit WitnessTable(const Graph& g) : g_(&g), by_point_(static_cast<std::size_t>(g.order())) {
    sets_.push_back(0);
    hulls_.push_back(0);
  }

  int support_size() const noexcept { return static_cast<int>(support_.size()); }
  std::uint64_t support_mask() const noexcept { return support_bits_; }

  void push(vertex_t x) {
    if (support_size() >= max_radon_support)
      throw guard_error("anti-Radon check: support exceeds 24 vertices");
    const std::size_t half = sets_.size();
    const std::uint64_t xb = std::uint64_t{1} << x;
    sets_.resize(2 * half);
    hulls_.resize(2 * half);
    marks_.push_back({});
    auto& mark = marks_.back();
    mark.reserve(by_point_.size());
    for (const auto& l : by_point_) mark.push_back(l.size());

    for (std::size_t idx = 0; idx < half; ++idx) {
      const std::size_t up = idx | half;
      sets_[up] = sets_[idx] | xb;
      hulls_[up] = hull_mask(*g_, hulls_[idx] | xb);
      std::uint64_t fresh = hulls_[up] & ~sets_[up];
      if (!fresh) continue;
      // Points already produced by some maximal proper subset are not minimal here.
      fresh &= ~hulls_[idx];
      for (std::size_t rest = idx; rest && fresh; rest &= rest - 1)
        fresh &= ~hulls_[up & ~(rest & (~rest + 1))];
      for (; fresh; fresh &= fresh - 1)
        by_point_[static_cast<std::size_t>(std::countr_zero(fresh))].push_back(sets_[up]);
    }
    support_.push_back(x);
    support_bits_ |= xb;
  }

  void pop() {
    const std::size_t half = sets_.size() / 2;
    sets_.resize(half);
    hulls_.resize(half);
    const auto& mark = marks_.back();
    for (std::size_t c = 0; c < by_point_.size(); ++c) by_point_[c].resize(mark[c]);
    marks_.pop_back();
    support_bits_ &= ~(std::uint64_t{1} << support_.back());
    support_.pop_back();
  }

  std::uint64_t support_hull() const noexcept { return hulls_.back(); }
  const std::vector<std::uint64_t>& witnesses(vertex_t c) const {
    return by_point_[static_cast<std::size_t>(c)];
  }

 private:
  const Graph* g_;
  std::vector<vertex_t> support_;
  std::uint64_t support_bits_ = 0;
  std::vector<std::uint64_t> sets_, hulls_;
  std::vector<std::vector<std::uint64_t>> by_point_;
  std::vector<std::vector<std::size_t>> marks_;
};

/// k-Radon partition search for a multiset whose support is loaded in `table`.
/// A partition exists iff for some point c there are k parts each containing a
/// c-witness; it is enough to pack k witnesses (singletons {c} or minimal
/// witnesses) within the available multiplicities and dump the rest anywhere.
class PackingSearch {
 public:
  PackingSearch(const WitnessTable& table, int k, std::span<const int> mult)
      : table_(table), k_(k), caps_(mult.begin(), mult.end()) {}

  /// Fills point() and chosen() on success.
  bool run() {
    const int n = static_cast<int>(caps_.size());
    for (vertex_t c = 0; c < n; ++c) {
      const int singles = std::min(caps_[static_cast<std::size_t>(c)], k_);
      const int need = k_ - singles;
      chosen_.assign(static_cast<std::size_t>(singles), std::uint64_t{1} << c);
      if (need == 0 || pack(table_.witnesses(c), 0, need)) {
        point_ = c;
        return true;
      }
    }
    chosen_.clear();
    return false;
  }

  vertex_t point() const noexcept { return point_; }
  const std::vector<std::uint64_t>& chosen() const noexcept { return chosen_; }

 private:
  bool fits(std::uint64_t w) const {
    for (; w; w &= w - 1)
      if (caps_[static_cast<std::size_t>(std::countr_zero(w))] == 0) return false;
    return true;
  }
  void take(std::uint64_t w, int delta) {
    for (; w; w &= w - 1) caps_[static_cast<std::size_t>(std::countr_zero(w))] += delta;
  }

  bool pack(const std::vector<std::uint64_t>& list, std::size_t from, int need) {
    if (need == 0) return true;
    for (std::size_t i = from; i < list.size(); ++i) {
      if (!fits(list[i])) continue;
      take(list[i], -1);
      chosen_.push_back(list[i]);
      if (pack(list, i, need - 1)) {
        take(list[i], +1);
        return true;
      }
      chosen_.pop_back();
      take(list[i], +1);
    }
    return false;
  }

  const WitnessTable& table_;
  int k_;
  std::vector<int> caps_;
  std::vector<std::uint64_t> chosen_;
  vertex_t point_ = -1;
};

inline Partition assemble_partition(const VertexMultiset& r, const std::vector<std::uint64_t>& chosen) {
  const std::size_t n = r.universe();
  Partition p;
  VertexMultiset rest = r;
  for (std::uint64_t w : chosen) {
    VertexMultiset part(n);
    for (; w; w &= w - 1) {
      const auto v = static_cast<vertex_t>(std::countr_zero(w));
      part.add(v);
      rest.add(v, -1);
    }
    p.parts.push_back(std::move(part));
  }
  p.parts.front() += rest;
  std::sort(p.parts.begin(), p.parts.end(), [](const auto& a, const auto& b) {
    auto ea = a.elements(), eb = b.elements();
    return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end());
  });
  return p;
}

inline void load_support(WitnessTable& table, const VertexMultiset& r) {
  if (r.support().count() > static_cast<std::size_t>(max_radon_support))
    throw guard_error("anti-Radon check: support exceeds 24 vertices");
  r.support().for_each([&](vertex_t v) { table.push(v); });
}

inline void check_multiset(const Graph& g, const VertexMultiset& r) {
  if (r.universe() != static_cast<std::size_t>(g.order()))
    throw input_error("multiset universe does not match graph order");
}

}  // namespace detail

/// A k-Radon partition of r, or nullopt iff r is k-anti-Radon. Multisets with
/// fewer than k elements have no partition into k nonempty parts.
inline std::optional<Partition> find_k_radon_partition(const Graph& g, const VertexMultiset& r,
                                                       int k) {
  detail::check_radon_args(g, k);
  detail::check_multiset(g, r);
  if (r.size() < static_cast<std::size_t>(k)) return std::nullopt;
  detail::WitnessTable table(g);
  detail::load_support(table, r);
  detail::PackingSearch search(table, k, r.multiplicities());
  if (!search.run()) return std::nullopt;
  return detail::assemble_partition(r, search.chosen());
}

inline bool is_k_anti_radon(const Graph& g, const VertexMultiset& r, int k) {
  return !find_k_radon_partition(g, r, k).has_value();
}

namespace detail {

/// Branch-and-bound over multiplicity vectors in vertex order. Anti-Radon
/// multisets are closed under taking sub-multisets, so a failing prefix kills
/// its whole subtree; the capacity bound prunes the rest. Multiplicities are
/// tried high to low, so the first maximum found is the lexicographically
/// smallest sorted element list of that size.
class AntiRadonMaximizer {
 public:
  AntiRadonMaximizer(const Graph& g, int k, int max_mult, std::optional<vertex_t> excluded)
      : g_(g), k_(k), max_mult_(max_mult), excluded_(excluded), table_(g),
        mult_(static_cast<std::size_t>(g.order()), 0) {}

  RadonResult run() {
    best_mult_ = mult_;
    dfs(0, 0);
    RadonResult res;
    res.value = best_size_;
    res.witness = VertexMultiset(static_cast<std::size_t>(g_.order()));
    for (vertex_t v = 0; v < g_.order(); ++v)
      res.witness.set(v, best_mult_[static_cast<std::size_t>(v)]);
    return res;
  }

 private:
  bool anti_radon_now() {
    int total = 0;
    for (int m : mult_) total += m;
    if (total < k_) return true;
    PackingSearch s(table_, k_, mult_);
    return !s.run();
  }

  void dfs(vertex_t i, int size) {
    const int n = g_.order();
    if (size + max_mult_ * (n - i) <= best_size_) return;
    if (i == n) {
      best_size_ = size;
      best_mult_ = mult_;
      return;
    }
    const bool allowed = !(excluded_ && *excluded_ == i);
    if (allowed && max_mult_ > 0) {
      table_.push(i);
      const bool hull_ok =
          !excluded_ || !((table_.support_hull() >> *excluded_) & 1);
      if (hull_ok) {
        bool known_anti = false;
        for (int m = max_mult_; m >= 1; --m) {
          mult_[static_cast<std::size_t>(i)] = m;
          if (!known_anti) known_anti = anti_radon_now();
          if (known_anti) dfs(i + 1, size + m);
        }
        mult_[static_cast<std::size_t>(i)] = 0;
      }
      table_.pop();
    }
    dfs(i + 1, size);
  }

  const Graph& g_;
  int k_;
  int max_mult_;
  std::optional<vertex_t> excluded_;
  WitnessTable table_;
  std::vector<int> mult_;
  std::vector<int> best_mult_;
  int best_size_ = -1;
};

inline RadonResult certify(const Graph& g, RadonResult res, int k,
                           std::optional<vertex_t> excluded) {
  bool ok = static_cast<int>(res.witness.size()) == res.value && is_k_anti_radon(g, res.witness, k);
  if (excluded) ok = ok && !hull(g, res.witness.support()).test(*excluded);
  res.certificate_checked = ok;
  return res;
}

}  // namespace detail

/// Largest k-anti-Radon multiset. Multiplicities are capped at k-1: k copies of
/// one vertex already form a Radon partition.
inline RadonResult max_anti_radon_multiset(const Graph& g, int k) {
  detail::check_radon_args(g, k);
  auto res = detail::AntiRadonMaximizer(g, k, k - 1, std::nullopt).run();
  return detail::certify(g, std::move(res), k, std::nullopt);
}

/// Largest k-anti-Radon set (no repeated vertices); r_k(g) - 1.
inline RadonResult max_anti_radon_set(const Graph& g, int k) {
  detail::check_radon_args(g, k);
  auto res = detail::AntiRadonMaximizer(g, k, 1, std::nullopt).run();
  return detail::certify(g, std::move(res), k, std::nullopt);
}

/// Largest k-anti-Radon multiset whose hull avoids v.
inline RadonResult radon_star(const Graph& g, vertex_t v, int k) {
  detail::check_radon_args(g, k);
  if (!g.contains(v)) throw input_error("radon_star: vertex " + std::to_string(v) + " out of range");
  auto res = detail::AntiRadonMaximizer(g, k, k - 1, v).run();
  return detail::certify(g, std::move(res), k, v);
}

}  // namespace p3c
