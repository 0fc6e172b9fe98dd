#pragma once

// Command-line front end. Kept in a header so the tests can drive it in-process.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "p3c/p3c.hpp"

namespace p3c::cli {

enum exit_code : int { exit_ok = 0, exit_violation = 1, exit_usage = 2 };

struct InputOptions {
  std::string graph_file;
  std::string g6;
  std::string family;
  bool one_indexed = false;
};

inline void add_input_options(CLI::App* sub, InputOptions& in) {
  sub->add_option("--graph", in.graph_file, "graph file (graph6 or edge list, autodetected)");
  sub->add_option("--g6", in.g6, "inline graph6 string");
  sub->add_option("--family", in.family, "named graph: g1 | tm:<m>");
  sub->add_flag("--one-indexed", in.one_indexed, "vertex labels on the command line and in output start at 1");
}

inline Graph family_graph(const std::string& name) {
  if (name == "g1") return counterexample_g1();
  if (name.starts_with("tm:")) {
    int m = 0;
    try {
      std::size_t used = 0;
      m = std::stoi(name.substr(3), &used);
      if (used != name.size() - 3) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw input_error("family: bad size in '" + name + "'");
    }
    return sharpness_tree(m);
  }
  throw input_error("unknown family '" + name + "' (expected g1 or tm:<m>)");
}

inline Graph load_graph(const InputOptions& in) {
  const int given = !in.graph_file.empty() + !in.g6.empty() + !in.family.empty();
  if (given != 1) throw input_error("exactly one of --graph, --g6, --family is required");
  if (!in.g6.empty()) return from_graph6(in.g6);
  if (!in.family.empty()) return family_graph(in.family);
  std::ifstream f(in.graph_file);
  if (!f) throw input_error("cannot open graph file '" + in.graph_file + "'");
  std::stringstream buf;
  buf << f.rdbuf();
  return read_graph(buf.str());
}

inline int parse_vertex(const std::string& tok, const Graph& g, bool one_indexed) {
  int v = 0;
  try {
    std::size_t used = 0;
    v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    throw input_error("bad vertex label '" + tok + "'");
  }
  if (one_indexed) --v;
  if (!g.contains(v)) throw input_error("vertex '" + tok + "' out of range");
  return v;
}

inline std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back()))) tok.pop_back();
    std::size_t b = 0;
    while (b < tok.size() && std::isspace(static_cast<unsigned char>(tok[b]))) ++b;
    tok = tok.substr(b);
    if (tok.empty()) throw input_error("empty element in list '" + text + "'");
    out.push_back(tok);
  }
  return out;
}

inline VertexSet parse_set(const std::string& text, const Graph& g, bool one_indexed) {
  VertexSet s(static_cast<std::size_t>(g.order()));
  if (text.empty()) return s;
  for (const auto& tok : split_commas(text)) s.set(parse_vertex(tok, g, one_indexed));
  return s;
}

/// "v:m" pairs separated by commas; a bare "v" has multiplicity 1.
inline VertexMultiset parse_multiset(const std::string& text, const Graph& g, bool one_indexed) {
  VertexMultiset r(static_cast<std::size_t>(g.order()));
  if (text.empty()) return r;
  for (const auto& tok : split_commas(text)) {
    const auto colon = tok.find(':');
    const int v = parse_vertex(tok.substr(0, colon), g, one_indexed);
    int m = 1;
    if (colon != std::string::npos) {
      try {
        std::size_t used = 0;
        const std::string ms = tok.substr(colon + 1);
        m = std::stoi(ms, &used);
        if (used != ms.size() || m < 0) throw std::invalid_argument("bad");
      } catch (const std::exception&) {
        throw input_error("bad multiplicity in '" + tok + "'");
      }
    }
    r.add(v, m);
  }
  return r;
}

inline nlohmann::ordered_json labels(const std::vector<vertex_t>& vs, bool one_indexed) {
  auto j = nlohmann::ordered_json::array();
  for (vertex_t v : vs) j.push_back(v + (one_indexed ? 1 : 0));
  return j;
}
inline nlohmann::ordered_json labels(const VertexSet& s, bool one) { return labels(s.elements(), one); }
inline nlohmann::ordered_json labels(const VertexMultiset& r, bool one) { return labels(r.elements(), one); }

inline void emit(const std::string& text, const std::string& out_file, std::ostream& out) {
  if (out_file.empty()) {
    out << text;
    return;
  }
  std::ofstream f(out_file);
  if (!f) throw input_error("cannot write '" + out_file + "'");
  f << text;
}

inline void emit_json(const nlohmann::ordered_json& j, const std::string& out_file, std::ostream& out) {
  emit(j.dump() + "\n", out_file, out);
}

inline unsigned jobs_from_env(unsigned flag_value) {
  if (const char* env = std::getenv("P3C_JOBS")) {
    try {
      const int j = std::stoi(env);
      if (j > 0) return static_cast<unsigned>(j);
    } catch (const std::exception&) {
    }
    throw input_error(std::string("P3C_JOBS must be a positive integer, got '") + env + "'");
  }
  return flag_value;
}

/// Runs the CLI on argv. Exit codes: 0 success, 1 violation found, 2 usage or input error.
inline int cli_main(int argc, const char* const* argv, std::ostream& out = std::cout,
                    std::ostream& err = std::cerr) {
  CLI::App app{"Exact P3-convexity invariants: hulls, Radon numbers, free sets", "p3c"};
  app.require_subcommand(1);

  InputOptions in;
  std::string out_file;
  std::string set_text, multiset_text;
  int k = 2;

  auto common = [&](CLI::App* sub) {
    add_input_options(sub, in);
    sub->add_option("--out", out_file, "write output to this file instead of stdout");
  };

  auto* hull_cmd = app.add_subcommand("hull", "convex hull of a vertex set");
  common(hull_cmd);
  hull_cmd->add_option("--set", set_text, "comma-separated vertices")->required();
  bool trace = false;
  hull_cmd->add_flag("--trace", trace, "also list the vertices added in each closure round");

  auto* convex_cmd = app.add_subcommand("convex", "test whether a set is P3-convex");
  common(convex_cmd);
  convex_cmd->add_option("--set", set_text, "comma-separated vertices")->required();

  auto* free_cmd = app.add_subcommand("free", "test whether a set is free");
  common(free_cmd);
  free_cmd->add_option("--set", set_text, "comma-separated vertices")->required();

  auto* alpha_cmd = app.add_subcommand("alpha", "maximum free set");
  common(alpha_cmd);
  bool cover_leaves = false;
  alpha_cmd->add_flag("--cover-leaves", cover_leaves,
                      "trees only: return a maximum free set covering every endvertex");

  auto* radon_cmd = app.add_subcommand("radon", "anti-Radon test or largest anti-Radon multiset");
  common(radon_cmd);
  radon_cmd->add_option("--k", k, "number of parts")->check(CLI::Range(2, max_radon_k));
  radon_cmd->add_option("--multiset", multiset_text, "test this multiset (v or v:m, comma-separated)");
  bool sets_only = false;
  radon_cmd->add_flag("--sets", sets_only, "maximize over sets instead of multisets");

  auto* star_cmd = app.add_subcommand("radon-star", "largest anti-Radon multiset whose hull avoids a vertex");
  common(star_cmd);
  star_cmd->add_option("--k", k, "number of parts")->check(CLI::Range(2, max_radon_k));
  std::string vertex_text;
  star_cmd->add_option("--vertex", vertex_text, "the avoided vertex")->required();
  std::string method = "search";
  star_cmd->add_option("--method", method, "search | recursion | both")
      ->check(CLI::IsMember({"search", "recursion", "both"}));

  auto* family_cmd = app.add_subcommand("family", "print a named graph");
  common(family_cmd);
  std::string format = "g6";
  family_cmd->add_option("--format", format, "g6 | edges")->check(CLI::IsMember({"g6", "edges"}));

  auto* enum_cmd = app.add_subcommand("enumerate", "all unlabelled trees on n vertices, one per line");
  int enum_n = 0;
  enum_cmd->add_option("--n", enum_n, "vertex count (1..20)")->required();
  enum_cmd->add_option("--format", format, "g6 | edges")->check(CLI::IsMember({"g6", "edges"}));
  enum_cmd->add_option("--out", out_file, "write output to this file instead of stdout");

  auto* verify_cmd = app.add_subcommand("verify", "exhaustive sweeps over all small trees");
  common(verify_cmd);
  std::string mode;
  verify_cmd->add_option("mode", mode, "thm1 | thm2 | recursions")
      ->required()
      ->check(CLI::IsMember({"thm1", "thm2", "recursions"}));
  int max_n = 0, min_n = 1;
  unsigned jobs = 0;
  bool no_timing = false;
  std::string report_format = "json";
  verify_cmd->add_option("--max-n", max_n, "largest tree order to enumerate");
  verify_cmd->add_option("--min-n", min_n, "smallest tree order to enumerate");
  verify_cmd->add_option("--k", k, "parts for thm1 / recursions");
  verify_cmd->add_option("--jobs", jobs, "worker threads (default: all cores; P3C_JOBS overrides)");
  verify_cmd->add_flag("--no-timing", no_timing, "report runtime_ms as 0 for reproducible output");
  verify_cmd->add_option("--format", report_format, "json | csv")->check(CLI::IsMember({"json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  using nlohmann::ordered_json;
  const bool one = in.one_indexed;
  try {
    if (*hull_cmd) {
      const Graph g = load_graph(in);
      const VertexSet s = parse_set(set_text, g, one);
      ordered_json j;
      j["hull"] = labels(hull(g, s), one);
      if (trace) {
        j["rounds"] = ordered_json::array();
        for (const auto& r : hull_trace(g, s).rounds) j["rounds"].push_back(labels(r, one));
      }
      emit_json(j, out_file, out);
    } else if (*convex_cmd) {
      const Graph g = load_graph(in);
      emit_json({{"convex", is_convex(g, parse_set(set_text, g, one))}}, out_file, out);
    } else if (*free_cmd) {
      const Graph g = load_graph(in);
      emit_json({{"free", is_free(g, parse_set(set_text, g, one))}}, out_file, out);
    } else if (*alpha_cmd) {
      const Graph g = load_graph(in);
      ordered_json j;
      if (cover_leaves) {
        const auto a = free_set_covering_leaves(g);
        j["alpha"] = a.count();
        j["witness"] = labels(a, one);
        j["method"] = "tree_dp+leaf_exchange";
      } else if (is_tree(g)) {
        const auto a = alpha_tree(g);
        j["alpha"] = a.size;
        j["witness"] = labels(a.witness, one);
        j["method"] = "tree_dp";
      } else {
        const auto a = max_free_set(g);
        j["alpha"] = a.size;
        j["witness"] = labels(a.witness, one);
        j["method"] = "branch_and_bound";
      }
      emit_json(j, out_file, out);
    } else if (*radon_cmd) {
      const Graph g = load_graph(in);
      ordered_json j;
      if (!multiset_text.empty()) {
        const auto r = parse_multiset(multiset_text, g, one);
        const auto p = find_k_radon_partition(g, r, k);
        j["anti_radon"] = !p.has_value();
        if (p) {
          j["partition"] = ordered_json::array();
          for (const auto& part : p->parts) j["partition"].push_back(labels(part, one));
          const auto c = hulls_common_point(g, p->parts);
          j["common_point"] = c ? ordered_json(*c + (one ? 1 : 0)) : ordered_json(nullptr);
        }
      } else {
        const auto res = sets_only ? max_anti_radon_set(g, k) : max_anti_radon_multiset(g, k);
        j["k"] = k;
        j["kind"] = sets_only ? "set" : "multiset";
        j["value"] = res.value;
        j["witness"] = labels(res.witness, one);
        j["certificate_checked"] = res.certificate_checked;
      }
      emit_json(j, out_file, out);
    } else if (*star_cmd) {
      const Graph g = load_graph(in);
      const vertex_t v = parse_vertex(vertex_text, g, one);
      ordered_json j;
      j["k"] = k;
      j["vertex"] = v + (one ? 1 : 0);
      std::optional<int> searched, recursed;
      if (method != "recursion") {
        const auto res = radon_star(g, v, k);
        searched = res.value;
        j["value"] = res.value;
        j["witness"] = labels(res.witness, one);
        j["certificate_checked"] = res.certificate_checked;
      }
      if (method != "search") {
        recursed = radon_star_tree(g, v, k);
        j["recursion"] = *recursed;
        if (!searched) j["value"] = *recursed;
      }
      emit_json(j, out_file, out);
      if (searched && recursed && *searched != *recursed) return exit_violation;
    } else if (*family_cmd) {
      std::string name = in.family;
      if (name.empty()) throw input_error("family: --family is required");
      const Graph g = family_graph(name);
      emit(format == "g6" ? to_graph6(g) + "\n" : to_edge_list(g), out_file, out);
    } else if (*enum_cmd) {
      auto stream = enumerate_trees(enum_n);
      std::string text;
      while (auto t = stream.next()) {
        const Graph c = canonical_tree(*t);
        text += format == "g6" ? to_graph6(c) + "\n" : to_edge_list(c) + "\n";
      }
      emit(text, out_file, out);
    } else if (*verify_cmd) {
      SweepConfig cfg;
      cfg.mode = sweep_mode_from_string(mode);
      cfg.min_n = min_n;
      cfg.max_n = max_n;
      cfg.k = cfg.mode == SweepMode::theorem2 ? 2 : k;
      cfg.timing = !no_timing;
      cfg.jobs = jobs_from_env(jobs);
      if (!in.g6.empty() || !in.family.empty() || !in.graph_file.empty())
        cfg.extra.push_back(to_graph6(load_graph(in)));
      if (cfg.max_n == 0 && cfg.extra.empty())
        throw input_error("verify: give --max-n or a single tree via --g6/--graph/--family");
      const SweepReport rep = run_sweep(cfg);
      emit(report_format == "csv" ? to_csv(rep) : to_json(rep).dump(2) + "\n", out_file, out);
      if (!rep.ok()) {
        for (const auto& v : rep.violations)
          err << "violation [" << v.check << "] " << v.tree_id << ": " << v.detail
              << "\n  reproduce: " << v.reproducer << "\n";
        return exit_violation;
      }
    }
  } catch (const std::invalid_argument& e) {
    err << "p3c: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::length_error& e) {
    err << "p3c: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_ok;
}

}  // namespace p3c::cli
