#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <exception>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "p3c/convexity.hpp"
#include "p3c/error.hpp"
#include "p3c/families.hpp"
#include "p3c/graph.hpp"
#include "p3c/graph_io.hpp"
#include "p3c/radon.hpp"
#include "p3c/tree_canon.hpp"
#include "p3c/tree_dp.hpp"

namespace p3c {

using ordered_json = nlohmann::ordered_json;

inline constexpr const char* report_schema = "p3c/1";

/// Invariants of one tree. The *_ok flags are derived from the raw values by
/// finalize(); they are never set independently.
struct InvariantRecord {
  std::string tree_id;  // canonical graph6
  int n = 0;
  int alpha = 0;
  int alpha_star_min = 0;
  int r2 = 0;
  std::map<int, int> rk;
  std::map<int, bool> thm1_ok;
  bool thm2_ok = false;
  bool lower_ok = false;
  std::optional<bool> eq2_ok;
  double runtime_ms = 0.0;

  void finalize() {
    thm1_ok.clear();
    for (auto [k, v] : rk) thm1_ok[k] = v <= (k - 1) * r2;
    thm2_ok = r2 <= 2 * alpha;
    lower_ok = r2 >= alpha;
  }

  friend bool operator==(const InvariantRecord&, const InvariantRecord&) = default;
};

struct Violation {
  std::string tree_id;
  std::string check;
  std::string detail;
  std::string reproducer;

  friend bool operator==(const Violation&, const Violation&) = default;
};

enum class SweepMode { theorem1, theorem2, recursions };

inline std::string to_string(SweepMode m) {
  switch (m) {
    case SweepMode::theorem1: return "thm1";
    case SweepMode::theorem2: return "thm2";
    case SweepMode::recursions: return "recursions";
  }
  return "?";
}

inline SweepMode sweep_mode_from_string(const std::string& s) {
  if (s == "thm1") return SweepMode::theorem1;
  if (s == "thm2") return SweepMode::theorem2;
  if (s == "recursions") return SweepMode::recursions;
  throw input_error("unknown sweep mode '" + s + "'");
}

struct SweepConfig {
  SweepMode mode = SweepMode::theorem2;
  int min_n = 1;
  int max_n = 0;  // 0: no enumerated trees, only `extra`
  int k = 2;
  bool timing = true;
  std::vector<std::string> extra;  // additional trees, graph6
  unsigned jobs = 0;               // 0: hardware concurrency; not echoed

  friend bool operator==(const SweepConfig& a, const SweepConfig& b) {
    return a.mode == b.mode && a.min_n == b.min_n && a.max_n == b.max_n && a.k == b.k &&
           a.timing == b.timing && a.extra == b.extra;
  }
};

struct CheckCount {
  int checked = 0;
  int violations = 0;
  friend bool operator==(const CheckCount&, const CheckCount&) = default;
};

struct SweepReport {
  SweepConfig config;
  std::vector<InvariantRecord> records;
  std::vector<Violation> violations;
  std::map<std::string, CheckCount> by_check;

  bool ok() const noexcept { return violations.empty(); }
  friend bool operator==(const SweepReport&, const SweepReport&) = default;
};

namespace detail {

inline void check_sweep_limits(const SweepConfig& c) {
  if (c.min_n < 1) throw guard_error("sweep: min_n must be at least 1");
  switch (c.mode) {
    case SweepMode::theorem2:
      if (c.max_n != 0 && (c.max_n < 2 || c.max_n > 14))
        throw guard_error("verify thm2: max_n must be in 2..14");
      break;
    case SweepMode::theorem1:
      if (c.k != 3 && c.k != 4) throw guard_error("verify thm1: k must be 3 or 4");
      if (c.max_n > (c.k == 3 ? 8 : 6))
        throw guard_error("verify thm1: max_n above " + std::to_string(c.k == 3 ? 8 : 6) +
                          " for k=" + std::to_string(c.k));
      break;
    case SweepMode::recursions:
      if (c.k < 2 || c.k > 4) throw guard_error("verify recursions: k must be in 2..4");
      if (c.max_n > 8) throw guard_error("verify recursions: max_n must be at most 8");
      break;
  }
}

inline std::string reproducer(const SweepConfig& c, const std::string& tree_id) {
  std::string cmd = "p3c verify " + to_string(c.mode) + " --g6 '" + tree_id + "'";
  if (c.mode != SweepMode::theorem2) cmd += " --k " + std::to_string(c.k);
  return cmd;
}

struct TreeOutcome {
  InvariantRecord record;
  std::vector<Violation> violations;
  std::map<std::string, CheckCount> counts;
};

inline TreeOutcome evaluate_tree(const Graph& tree, const SweepConfig& cfg, RadonMemo& memo) {
  const auto start = std::chrono::steady_clock::now();
  TreeOutcome out;
  auto& rec = out.record;
  rec.tree_id = to_graph6(tree);
  rec.n = tree.order();

  auto flag = [&](const std::string& check, bool ok, const std::string& detail) {
    auto& cc = out.counts[check];
    ++cc.checked;
    if (!ok) {
      ++cc.violations;
      out.violations.push_back({rec.tree_id, check, detail, reproducer(cfg, rec.tree_id)});
    }
  };

  const auto dp = alpha_tree(tree);
  const auto bnb = max_free_set(tree);
  rec.alpha = dp.size;
  flag("alpha_cross", dp.size == bnb.size && is_free(tree, dp.witness),
       "tree DP alpha=" + std::to_string(dp.size) + " vs branch-and-bound " +
           std::to_string(bnb.size));

  rec.alpha_star_min = rec.alpha;
  for (vertex_t v = 0; v < tree.order(); ++v)
    rec.alpha_star_min = std::min(rec.alpha_star_min, alpha_star_tree(tree, v));

  const auto r2 = max_anti_radon_multiset(tree, 2);
  rec.r2 = r2.value;
  flag("certificate", r2.certificate_checked, "r2 witness failed re-verification");

  if (cfg.mode == SweepMode::theorem1) {
    const auto rk = max_anti_radon_multiset(tree, cfg.k);
    rec.rk[cfg.k] = rk.value;
    flag("certificate", rk.certificate_checked, "r" + std::to_string(cfg.k) + " witness failed re-verification");
  }

  if (cfg.mode == SweepMode::recursions) {
    bool all = true;
    std::ostringstream why;
    for (vertex_t v = 0; v < tree.order(); ++v) {
      const int rec_star = radon_star_tree(tree, v, cfg.k, &memo);
      const int brute_star = radon_star(tree, v, cfg.k).value;
      if (rec_star != brute_star) {
        all = false;
        why << "r*_" << cfg.k << "(v=" << v << "): recursion " << rec_star << " vs search "
            << brute_star << "; ";
      }
      const int rec_alpha = alpha_star_tree(tree, v);
      VertexSet forbid(static_cast<std::size_t>(tree.order()));
      forbid.set(v);
      const int brute_alpha = max_free_set_avoiding(tree, forbid).size;
      if (rec_alpha != brute_alpha) {
        all = false;
        why << "alpha*(v=" << v << "): recursion " << rec_alpha << " vs search " << brute_alpha
            << "; ";
      }
    }
    rec.eq2_ok = all;
    flag("eq2", all, why.str());
  }

  rec.finalize();
  for (auto [k, ok] : rec.thm1_ok)
    flag("thm1_k" + std::to_string(k), ok,
         "r" + std::to_string(k) + "=" + std::to_string(rec.rk[k]) + " > " + std::to_string(k - 1) +
             "*r2=" + std::to_string((k - 1) * rec.r2));
  flag("thm2", rec.thm2_ok,
       "r2=" + std::to_string(rec.r2) + " > 2*alpha=" + std::to_string(2 * rec.alpha));
  flag("lower", rec.lower_ok,
       "r2=" + std::to_string(rec.r2) + " < alpha=" + std::to_string(rec.alpha));

  if (cfg.timing)
    rec.runtime_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return out;
}

}  // namespace detail

/// Trees covered by a sweep, canonically labelled, in stream order followed by extras.
inline std::vector<Graph> sweep_inputs(const SweepConfig& cfg) {
  std::vector<Graph> trees;
  for (int n = cfg.min_n; n <= cfg.max_n; ++n) {
    auto stream = enumerate_trees(n);
    while (auto t = stream.next()) trees.push_back(canonical_tree(*t));
  }
  for (const auto& g6 : cfg.extra) {
    Graph g = from_graph6(g6);
    if (!is_tree(g)) throw structure_error("sweep input '" + g6 + "' is not a tree");
    trees.push_back(canonical_tree(g));
  }
  return trees;
}

inline unsigned resolve_jobs(unsigned requested) {
  if (requested > 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Evaluates every input tree, spreading batches of 64 trees over worker
/// threads. Records are reassembled in (n, tree_id) order, so the report does
/// not depend on scheduling. The sweep always runs to completion; violations
/// are collected, not thrown.
inline SweepReport run_sweep(const SweepConfig& cfg) {
  detail::check_sweep_limits(cfg);
  const auto trees = sweep_inputs(cfg);
  std::vector<detail::TreeOutcome> outcomes(trees.size());
  RadonMemo memo;

  constexpr std::size_t batch = 64;
  std::atomic<std::size_t> next_batch{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    for (;;) {
      const std::size_t b = next_batch.fetch_add(1);
      if (b * batch >= trees.size()) return;
      try {
        for (std::size_t i = b * batch; i < std::min(trees.size(), (b + 1) * batch); ++i)
          outcomes[i] = detail::evaluate_tree(trees[i], cfg, memo);
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };
  const unsigned jobs = std::min<unsigned>(resolve_jobs(cfg.jobs),
                                           static_cast<unsigned>((trees.size() + batch - 1) / batch));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  std::sort(outcomes.begin(), outcomes.end(), [](const auto& a, const auto& b) {
    return std::pair(a.record.n, a.record.tree_id) < std::pair(b.record.n, b.record.tree_id);
  });
  SweepReport report;
  report.config = cfg;
  for (auto& o : outcomes) {
    report.records.push_back(std::move(o.record));
    for (auto& v : o.violations) report.violations.push_back(std::move(v));
    for (const auto& [name, c] : o.counts) {
      report.by_check[name].checked += c.checked;
      report.by_check[name].violations += c.violations;
    }
  }
  return report;
}

/// Bound sweep: r2 <= 2 alpha and r2 >= alpha on every tree with n <= n_max.
inline SweepReport verify_theorem2(int n_max, int min_n = 1, unsigned jobs = 0, bool timing = true) {
  SweepConfig cfg;
  cfg.mode = SweepMode::theorem2;
  cfg.min_n = min_n;
  cfg.max_n = n_max;
  cfg.jobs = jobs;
  cfg.timing = timing;
  return run_sweep(cfg);
}

/// Multiplicity sweep: r_k <= (k-1) r_2.
inline SweepReport verify_theorem1(int n_max, int k, int min_n = 1, unsigned jobs = 0,
                                   bool timing = true) {
  SweepConfig cfg;
  cfg.mode = SweepMode::theorem1;
  cfg.min_n = min_n;
  cfg.max_n = n_max;
  cfg.k = k;
  cfg.jobs = jobs;
  cfg.timing = timing;
  return run_sweep(cfg);
}

/// Recursion sweep: tree recursions for r*_k and alpha* against exhaustive search at every vertex.
inline SweepReport verify_recursions(int n_max, int k, int min_n = 1, unsigned jobs = 0,
                                     bool timing = true) {
  SweepConfig cfg;
  cfg.mode = SweepMode::recursions;
  cfg.min_n = min_n;
  cfg.max_n = n_max;
  cfg.k = k;
  cfg.jobs = jobs;
  cfg.timing = timing;
  return run_sweep(cfg);
}

// JSON ----------------------------------------------------------------------

inline ordered_json to_json(const InvariantRecord& r) {
  ordered_json j;
  j["tree_id"] = r.tree_id;
  j["n"] = r.n;
  j["alpha"] = r.alpha;
  j["alpha_star_min"] = r.alpha_star_min;
  j["r2"] = r.r2;
  j["rk"] = ordered_json::object();
  for (auto [k, v] : r.rk) j["rk"][std::to_string(k)] = v;
  j["thm1_ok"] = ordered_json::object();
  for (auto [k, v] : r.thm1_ok) j["thm1_ok"][std::to_string(k)] = v;
  j["thm2_ok"] = r.thm2_ok;
  j["lower_ok"] = r.lower_ok;
  j["eq2_ok"] = r.eq2_ok ? ordered_json(*r.eq2_ok) : ordered_json(nullptr);
  j["runtime_ms"] = r.runtime_ms;
  return j;
}

inline InvariantRecord record_from_json(const ordered_json& j) {
  InvariantRecord r;
  r.tree_id = j.at("tree_id").get<std::string>();
  r.n = j.at("n").get<int>();
  r.alpha = j.at("alpha").get<int>();
  r.alpha_star_min = j.at("alpha_star_min").get<int>();
  r.r2 = j.at("r2").get<int>();
  for (const auto& [k, v] : j.at("rk").items()) r.rk[std::stoi(k)] = v.get<int>();
  for (const auto& [k, v] : j.at("thm1_ok").items()) r.thm1_ok[std::stoi(k)] = v.get<bool>();
  r.thm2_ok = j.at("thm2_ok").get<bool>();
  r.lower_ok = j.at("lower_ok").get<bool>();
  if (!j.at("eq2_ok").is_null()) r.eq2_ok = j.at("eq2_ok").get<bool>();
  r.runtime_ms = j.at("runtime_ms").get<double>();
  return r;
}

inline ordered_json to_json(const SweepReport& rep) {
  ordered_json j;
  j["schema"] = report_schema;
  auto& c = j["config"];
  c["mode"] = to_string(rep.config.mode);
  c["min_n"] = rep.config.min_n;
  c["max_n"] = rep.config.max_n;
  c["k"] = rep.config.k;
  c["timing"] = rep.config.timing;
  c["extra"] = rep.config.extra;
  j["records"] = ordered_json::array();
  for (const auto& r : rep.records) j["records"].push_back(to_json(r));
  auto& s = j["summary"];
  s["checked"] = rep.records.size();
  s["violations"] = ordered_json::array();
  for (const auto& v : rep.violations)
    s["violations"].push_back(
        {{"tree_id", v.tree_id}, {"check", v.check}, {"detail", v.detail}, {"reproducer", v.reproducer}});
  s["by_check"] = ordered_json::object();
  for (const auto& [name, cc] : rep.by_check)
    s["by_check"][name] = {{"checked", cc.checked}, {"violations", cc.violations}};
  return j;
}

inline SweepReport report_from_json(const ordered_json& j) {
  if (j.at("schema").get<std::string>() != report_schema)
    throw input_error("report: unsupported schema " + j.at("schema").dump());
  SweepReport rep;
  const auto& c = j.at("config");
  rep.config.mode = sweep_mode_from_string(c.at("mode").get<std::string>());
  rep.config.min_n = c.at("min_n").get<int>();
  rep.config.max_n = c.at("max_n").get<int>();
  rep.config.k = c.at("k").get<int>();
  rep.config.timing = c.at("timing").get<bool>();
  rep.config.extra = c.at("extra").get<std::vector<std::string>>();
  for (const auto& r : j.at("records")) rep.records.push_back(record_from_json(r));
  const auto& s = j.at("summary");
  if (s.at("checked").get<std::size_t>() != rep.records.size())
    throw input_error("report: summary.checked does not match record count");
  for (const auto& v : s.at("violations"))
    rep.violations.push_back({v.at("tree_id").get<std::string>(), v.at("check").get<std::string>(),
                              v.at("detail").get<std::string>(), v.at("reproducer").get<std::string>()});
  for (const auto& [name, cc] : s.at("by_check").items())
    rep.by_check[name] = {cc.at("checked").get<int>(), cc.at("violations").get<int>()};
  return rep;
}

// CSV -----------------------------------------------------------------------

inline std::string to_csv(const SweepReport& rep) {
  std::ostringstream out;
  out << "tree_id,n,alpha,alpha_star_min,r2,r3,r4,thm1_ok_3,thm1_ok_4,thm2_ok,lower_ok,eq2_ok,"
         "runtime_ms\n";
  auto opt_int = [](const std::map<int, int>& m, int k) {
    auto it = m.find(k);
    return it == m.end() ? std::string() : std::to_string(it->second);
  };
  auto opt_bool = [](const std::map<int, bool>& m, int k) {
    auto it = m.find(k);
    return it == m.end() ? std::string() : std::string(it->second ? "true" : "false");
  };
  auto b = [](bool v) { return v ? "true" : "false"; };
  for (const auto& r : rep.records) {
    // graph6 bytes lie in 63..126, so ids never need quoting.
    out << r.tree_id << ',' << r.n << ',' << r.alpha << ',' << r.alpha_star_min << ',' << r.r2 << ','
        << opt_int(r.rk, 3) << ',' << opt_int(r.rk, 4) << ',' << opt_bool(r.thm1_ok, 3) << ','
        << opt_bool(r.thm1_ok, 4) << ',' << b(r.thm2_ok) << ',' << b(r.lower_ok) << ','
        << (r.eq2_ok ? b(*r.eq2_ok) : "") << ',' << r.runtime_ms << '\n';
  }
  return out.str();
}

}  // namespace p3c
