#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <span>
#include <vector>

#include "p3c/error.hpp"

namespace p3c {

using vertex_t = int;

/// Dynamic-width bit vector over the vertices 0..universe()-1 of one graph.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  VertexSet(std::size_t universe, std::initializer_list<vertex_t> members)
      : VertexSet(universe) {
    for (vertex_t v : members) set(v);
  }

  static VertexSet from_range(std::size_t universe, std::span<const vertex_t> members) {
    VertexSet s(universe);
    for (vertex_t v : members) s.set(v);
    return s;
  }

  static VertexSet from_mask(std::size_t universe, std::uint64_t mask) {
    if (universe > 64) throw guard_error("from_mask: universe exceeds one word");
    VertexSet s(universe);
    if (universe > 0) s.words_[0] = mask & full_mask(universe);
    return s;
  }

  static VertexSet full(std::size_t universe) {
    VertexSet s(universe);
    for (std::size_t i = 0; i < s.words_.size(); ++i) s.words_[i] = ~std::uint64_t{0};
    s.trim();
    return s;
  }

  std::size_t universe() const noexcept { return universe_; }

  bool test(vertex_t v) const noexcept {
    if (v < 0 || static_cast<std::size_t>(v) >= universe_) return false;
    return (words_[static_cast<std::size_t>(v) / 64] >> (v % 64)) & 1u;
  }
  void set(vertex_t v) {
    check(v);
    words_[static_cast<std::size_t>(v) / 64] |= std::uint64_t{1} << (v % 64);
  }
  void reset(vertex_t v) {
    check(v);
    words_[static_cast<std::size_t>(v) / 64] &= ~(std::uint64_t{1} << (v % 64));
  }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
  }

  /// Lowest member, or -1 when empty.
  vertex_t first() const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i]) return static_cast<vertex_t>(i * 64 + std::countr_zero(words_[i]));
    return -1;
  }

  bool is_subset_of(const VertexSet& o) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.word(i)) return false;
    return true;
  }
  bool intersects(const VertexSet& o) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.word(i)) return true;
    return false;
  }

  /// Popcount of the intersection, saturating at 2.
  int meet_count_upto2(const VertexSet& o) const noexcept {
    int c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t x = words_[i] & o.word(i);
      if (!x) continue;
      if (x & (x - 1)) return 2;
      if (++c >= 2) return 2;
    }
    return c;
  }

  VertexSet& operator|=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.word(i);
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.word(i);
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.word(i);
    return *this;
  }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  /// Complement within the universe.
  VertexSet complement() const {
    VertexSet c(universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) c.words_[i] = ~words_[i];
    c.trim();
    return c;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        f(static_cast<vertex_t>(i * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<vertex_t> elements() const {
    std::vector<vertex_t> out;
    out.reserve(count());
    for_each([&](vertex_t v) { out.push_back(v); });
    return out;
  }

  /// Single-word view; only valid for universe() <= 64.
  std::uint64_t mask() const {
    if (universe_ > 64) throw guard_error("mask: universe exceeds one word");
    return words_.empty() ? 0 : words_[0];
  }

  std::span<const std::uint64_t> words() const noexcept { return words_; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  /// Lexicographic order on sorted member lists.
  friend bool lex_less(const VertexSet& a, const VertexSet& b) {
    auto ea = a.elements(), eb = b.elements();
    return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end());
  }

  static constexpr std::uint64_t full_mask(std::size_t n) noexcept {
    return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  }

 private:
  std::uint64_t word(std::size_t i) const noexcept { return i < words_.size() ? words_[i] : 0; }
  void check(vertex_t v) const {
    if (v < 0 || static_cast<std::size_t>(v) >= universe_)
      throw input_error("vertex " + std::to_string(v) + " outside universe of size " +
                        std::to_string(universe_));
  }
  void trim() noexcept {
    if (universe_ % 64 != 0 && !words_.empty()) words_.back() &= full_mask(universe_ % 64);
  }

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Multiplicity vector over the vertices of a graph.
class VertexMultiset {
 public:
  VertexMultiset() = default;
  explicit VertexMultiset(std::size_t universe) : mult_(universe, 0) {}
  VertexMultiset(std::size_t universe, std::initializer_list<vertex_t> members)
      : mult_(universe, 0) {
    for (vertex_t v : members) add(v);
  }

  static VertexMultiset from_set(const VertexSet& s) {
    VertexMultiset r(s.universe());
    s.for_each([&](vertex_t v) { r.add(v); });
    return r;
  }

  std::size_t universe() const noexcept { return mult_.size(); }
  int operator[](vertex_t v) const { return mult_.at(static_cast<std::size_t>(v)); }

  void add(vertex_t v, int copies = 1) {
    check(v);
    if (copies < 0 && mult_[static_cast<std::size_t>(v)] < -copies)
      throw input_error("multiplicity would become negative");
    mult_[static_cast<std::size_t>(v)] += copies;
  }
  void set(vertex_t v, int m) {
    check(v);
    if (m < 0) throw input_error("negative multiplicity");
    mult_[static_cast<std::size_t>(v)] = m;
  }

  std::size_t size() const noexcept {
    return static_cast<std::size_t>(std::accumulate(mult_.begin(), mult_.end(), 0));
  }
  bool empty() const noexcept { return size() == 0; }
  int max_multiplicity() const noexcept {
    return mult_.empty() ? 0 : *std::max_element(mult_.begin(), mult_.end());
  }

  VertexSet support() const {
    VertexSet s(mult_.size());
    for (std::size_t v = 0; v < mult_.size(); ++v)
      if (mult_[v] > 0) s.set(static_cast<vertex_t>(v));
    return s;
  }

  /// Sorted list with repetitions, e.g. {0,0,2}.
  std::vector<vertex_t> elements() const {
    std::vector<vertex_t> out;
    for (std::size_t v = 0; v < mult_.size(); ++v)
      out.insert(out.end(), static_cast<std::size_t>(mult_[v]), static_cast<vertex_t>(v));
    return out;
  }

  bool is_submultiset_of(const VertexMultiset& o) const noexcept {
    if (o.mult_.size() != mult_.size()) return false;
    for (std::size_t v = 0; v < mult_.size(); ++v)
      if (mult_[v] > o.mult_[v]) return false;
    return true;
  }

  std::span<const int> multiplicities() const noexcept { return mult_; }

  VertexMultiset& operator+=(const VertexMultiset& o) {
    if (o.universe() != universe()) throw input_error("multiset universe mismatch");
    for (std::size_t v = 0; v < mult_.size(); ++v) mult_[v] += o.mult_[v];
    return *this;
  }
  friend VertexMultiset operator+(VertexMultiset a, const VertexMultiset& b) { return a += b; }

  friend bool operator==(const VertexMultiset&, const VertexMultiset&) = default;

 private:
  void check(vertex_t v) const {
    if (v < 0 || static_cast<std::size_t>(v) >= mult_.size())
      throw input_error("vertex " + std::to_string(v) + " outside universe of size " +
                        std::to_string(mult_.size()));
  }

  std::vector<int> mult_;
};

}  // namespace p3c
