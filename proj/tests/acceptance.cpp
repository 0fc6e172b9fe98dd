// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "p3c/p3c.hpp"

using namespace p3c;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;
  void fail(const std::string& why) {
    if (ok) note = why;
    ok = false;
  }
};

int failures = 0;

void criterion(int id, const char* title, double limit_s, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (o.ok && secs > limit_s) o.fail("time limit " + std::to_string(limit_s) + " s exceeded");
  if (!o.ok) ++failures;
  std::printf("%s [%d] %s (%.3f s)%s%s\n", o.ok ? "PASS" : "FAIL", id, title, secs,
              o.note.empty() ? "" : ": ", o.note.c_str());
  std::fflush(stdout);
}

VertexMultiset one_indexed(int n, std::initializer_list<int> labels) {
  VertexMultiset r(static_cast<std::size_t>(n));
  for (int l : labels) r.add(l - 1);
  return r;
}

std::vector<Graph> trees_up_to(int max_n, int min_n = 1) {
  std::vector<Graph> out;
  for (int n = min_n; n <= max_n; ++n)
    for (auto s = enumerate_trees(n); auto t = s.next();) out.push_back(*t);
  return out;
}

void expect_clean(Outcome& o, const SweepReport& rep, std::size_t records, const std::string& what) {
  if (rep.records.size() != records)
    o.fail(what + ": " + std::to_string(rep.records.size()) + " records, expected " + std::to_string(records));
  if (!rep.ok())
    o.fail(what + ": " + std::to_string(rep.violations.size()) + " violations, first " +
           rep.violations.front().check + " on " + rep.violations.front().tree_id);
}

// Every sub-multiset anti-Radon, and k copies of any support vertex Radon.
void check_witness_structure(Outcome& o, const Graph& g, const VertexMultiset& w, int k, std::size_t& checked) {
  const auto n = static_cast<int>(w.universe());
  std::vector<int> cur(static_cast<std::size_t>(n), 0);
  for (;;) {
    VertexMultiset sub(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) sub.set(v, cur[static_cast<std::size_t>(v)]);
    ++checked;
    if (!is_k_anti_radon(g, sub, k)) {
      o.fail("sub-multiset of a witness on " + to_graph6(g) + " is not anti-Radon");
      return;
    }
    int v = 0;
    while (v < n && ++cur[static_cast<std::size_t>(v)] > w[v]) cur[static_cast<std::size_t>(v++)] = 0;
    if (v == n) break;
  }
  for (vertex_t v : w.support().elements()) {
    auto more = w;
    more.set(v, k);
    if (is_k_anti_radon(g, more, k)) o.fail("k copies did not break a witness on " + to_graph6(g));
  }
}

}  // namespace

int main() {
  std::vector<std::pair<Graph, VertexMultiset>> witnesses2, witnesses3, witnesses4;

  criterion(1, "G1: alpha = 1, r2 = 3, {2,4,6} anti-Radon, all 4-subsets Radon", 1.0, [&] {
    Outcome o;
    const auto g1 = counterexample_g1();
    if (max_free_set(g1).size != 1) o.fail("alpha != 1");
    const auto r = max_anti_radon_multiset(g1, 2);
    if (r.value != 3 || !r.certificate_checked) o.fail("r2 != 3");
    witnesses2.emplace_back(g1, r.witness);
    if (!is_k_anti_radon(g1, one_indexed(7, {2, 4, 6}), 2)) o.fail("{2,4,6} not anti-Radon");
    int four = 0;
    for (std::uint64_t m = 0; m < 128; ++m) {
      if (std::popcount(m) != 4) continue;
      ++four;
      if (is_k_anti_radon(g1, VertexMultiset::from_set(VertexSet::from_mask(7, m)), 2))
        o.fail("a 4-subset is anti-Radon");
    }
    if (four != 35) o.fail("expected 35 four-subsets");
    o.note = o.ok ? "35 four-subsets checked" : o.note;
    return o;
  });

  criterion(2, "T_m: alpha = 3m and r2 = 6m for m = 1, 2", 10.0, [&] {
    Outcome o;
    const auto t1 = sharpness_tree(1);
    if (alpha_tree(t1).size != 3) o.fail("alpha(T_1) != 3");
    const auto r1 = max_anti_radon_multiset(t1, 2);
    if (r1.value != 6 || !r1.certificate_checked) o.fail("r2(T_1) = " + std::to_string(r1.value));
    witnesses2.emplace_back(t1, r1.witness);

    const auto t2 = sharpness_tree(2);
    const int alpha = alpha_tree(t2).size;
    if (alpha != 6) o.fail("alpha(T_2) != 6");
    const auto leaves = VertexMultiset::from_set(sharpness_branch_leaves(2));
    if (leaves.size() != 12 || !is_k_anti_radon(t2, leaves, 2)) o.fail("branch leaves of T_2 not anti-Radon");
    witnesses2.emplace_back(t2, leaves);
    // 12 <= r2 <= 2 alpha = 12; the exact search confirms it directly.
    const auto r2 = max_anti_radon_multiset(t2, 2);
    if (r2.value != 12 || 2 * alpha != 12) o.fail("r2(T_2) = " + std::to_string(r2.value));
    return o;
  });

  criterion(3, "r3 <= 2 r2 on all trees n <= 8; r4 <= 3 r2 on all trees n <= 6", 900.0, [&] {
    Outcome o;
    expect_clean(o, verify_theorem1(8, 3, 1, 0, false), 48, "k=3");
    expect_clean(o, verify_theorem1(6, 4, 1, 0, false), 14, "k=4");
    for (const auto& t : trees_up_to(8)) witnesses3.emplace_back(t, max_anti_radon_multiset(t, 3).witness);
    for (const auto& t : trees_up_to(6)) witnesses4.emplace_back(t, max_anti_radon_multiset(t, 4).witness);
    if (o.ok) o.note = "48 trees (n 1..8, 47 with n >= 2) for k=3, 14 for k=4";
    return o;
  });

  criterion(4, "alpha <= r2 <= 2 alpha on all 201 trees n <= 10", 600.0, [&] {
    Outcome o;
    const auto rep = verify_theorem2(10, 1, 0, false);
    expect_clean(o, rep, 201, "thm2");
    for (const auto& r : rep.records)
      if (!r.thm2_ok || !r.lower_ok) o.fail("bound fails on " + r.tree_id);
    for (const auto& t : trees_up_to(10)) witnesses2.emplace_back(t, max_anti_radon_multiset(t, 2).witness);
    return o;
  });

  criterion(5, "tree recursions for r*_k (k = 2, 3) and alpha* match search at every vertex, n <= 8", 900.0, [&] {
    Outcome o;
    for (int k = 2; k <= 3; ++k) {
      const auto rep = verify_recursions(8, k, 1, 0, false);
      expect_clean(o, rep, 48, "k=" + std::to_string(k));
      for (const auto& r : rep.records)
        if (r.eq2_ok != true) o.fail("recursion mismatch on " + r.tree_id);
    }
    // alpha* against subset enumeration, independent of the sweep's own check
    for (const auto& t : trees_up_to(8)) {
      const auto a = oracle::adjacency(t);
      for (vertex_t v = 0; v < t.order(); ++v)
        if (alpha_star_tree(t, v) != oracle::max_free(a, std::uint64_t{1} << v))
          o.fail("alpha* mismatch on " + to_graph6(t));
    }
    return o;
  });

  criterion(6, "hull = intersection of convex supersets; DP alpha = branch and bound; free => convex", 900.0, [&] {
    Outcome o;
    auto graphs = trees_up_to(7);
    graphs.push_back(counterexample_g1());
    std::size_t subsets = 0;
    for (const auto& g : graphs) {
      const auto a = oracle::adjacency(g);
      for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.order()); ++s, ++subsets)
        if (hull(g, VertexSet::from_mask(static_cast<std::size_t>(g.order()), s)).mask() !=
            oracle::hull_by_intersection(a, s))
          o.fail("hull mismatch on " + to_graph6(g));
    }
    std::size_t trees = 0;
    for (const auto& t : trees_up_to(14)) {
      ++trees;
      if (alpha_tree(t).size != max_free_set(t).size) o.fail("alpha mismatch on " + to_graph6(t));
    }
    // Half the subsets are uniform, half are grown greedily in random order so
    // that most of them are free.
    std::mt19937_64 rng(20261015);
    std::size_t free_seen = 0;
    for (int i = 0; i < 1000; ++i) {
      const int n = 1 + static_cast<int>(rng() % 40);
      const auto t = random_tree(n, rng());
      const std::uint64_t full = VertexSet::full_mask(static_cast<std::size_t>(n));
      for (int j = 0; j < 1000; ++j) {
        std::uint64_t s = rng() & full;
        if (j % 2) {
          s = 0;
          const int tries = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n));
          for (int r = 0; r < tries; ++r) {
            const std::uint64_t cand = s | (std::uint64_t{1} << (rng() % static_cast<std::uint64_t>(n)));
            if (is_free_mask(t, cand)) s = cand;
          }
        }
        if (is_free_mask(t, s)) {
          ++free_seen;
          if (!is_convex_mask(t, s)) o.fail("free set not convex on " + to_graph6(t));
        }
      }
    }
    if (o.ok)
      o.note = std::to_string(subsets) + " hulls, " + std::to_string(trees) + " trees, " +
               std::to_string(free_seen) + " free sets";
    return o;
  });

  criterion(7, "extremal witnesses: every sub-multiset anti-Radon, k copies Radon", 900.0, [&] {
    Outcome o;
    std::size_t checked = 0;
    for (const auto& [g, w] : witnesses2) check_witness_structure(o, g, w, 2, checked);
    for (const auto& [g, w] : witnesses3) check_witness_structure(o, g, w, 3, checked);
    for (const auto& [g, w] : witnesses4) check_witness_structure(o, g, w, 4, checked);
    const std::size_t total = witnesses2.size() + witnesses3.size() + witnesses4.size();
    if (total == 0) o.fail("no witnesses collected");
    if (o.ok) o.note = std::to_string(total) + " witnesses, " + std::to_string(checked) + " sub-multisets";
    return o;
  });

  criterion(8, "maximum free set covering every endvertex on all trees n <= 12", 900.0, [&] {
    Outcome o;
    std::size_t trees = 0;
    for (const auto& t : trees_up_to(12, 2)) {
      ++trees;
      const auto a = free_set_covering_leaves(t);
      if (!is_free(t, a) || static_cast<int>(a.count()) != alpha_tree(t).size || !covers_endvertices(t, a))
        o.fail("leaf coverage fails on " + to_graph6(t));
    }
    if (o.ok) o.note = std::to_string(trees) + " trees";
    return o;
  });

  std::printf("%s: %d failing criteria\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
