#ifndef DCLIQUE_CLI_HPP
#define DCLIQUE_CLI_HPP

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "dclique/analytics.hpp"
#include "dclique/engine.hpp"
#include "dclique/export.hpp"
#include "dclique/generate.hpp"
#include "dclique/oracle.hpp"
#include "dclique/parse.hpp"
#include "dclique/static_graph.hpp"

namespace dclique::cli {

enum ExitCode : int {
  ok = 0,
  parse_error = 1,
  truncated = 2,
  io_error = 3,
  oracle_guard = 4,
  mismatch = 5,
};

/// Everything a command needs; filled from the command line by tools/dclique.
struct RunSpec {
  std::string input;
  std::int64_t delta = 0;
  SearchOrder order = SearchOrder::dfs;
  bool interval_narrowing = true;
  bool candidate_sets = true;
  std::optional<Timestamp> tmin;
  std::optional<Timestamp> tmax;
  std::int64_t time_scale = 1;
  std::optional<std::size_t> max_states;

  std::optional<std::string> out;
  std::optional<std::string> stats;
  std::optional<std::string> ccdf_sizes;
  std::optional<std::string> ccdf_durations;
  std::optional<std::string> discovery_log;

  OracleLimits guard;
  bool fault_skip_right_extension = false;
};

inline EngineConfig engine_config(const RunSpec &spec) {
  EngineConfig cfg;
  cfg.order = spec.order;
  cfg.use_interval_narrowing = spec.interval_narrowing;
  cfg.use_candidate_sets = spec.candidate_sets;
  cfg.max_states = spec.max_states;
  cfg.log_discovery = spec.discovery_log.has_value();
  cfg.fault_skip_right_extension = spec.fault_skip_right_extension;
  return cfg;
}

inline nlohmann::json to_json(const SummaryRow &row) {
  return {{"delta", row.delta},
          {"result_count", row.result_count},
          {"max_nodes", row.max_nodes},
          {"max_duration", row.max_duration},
          {"runtime_seconds", row.runtime_seconds},
          {"iterations", row.iterations},
          {"states_seen", row.states_seen},
          {"empty_result", row.empty_result}};
}

namespace detail {

struct Failure {
  int code;
};

/// Validates a RunSpec and loads its input, reporting failures on err.
inline LinkStream load(const RunSpec &spec, std::ostream &err) {
  if (spec.delta < 0) {
    err << "error: --delta must be non-negative\n";
    throw Failure{parse_error};
  }
  if (spec.tmin.has_value() != spec.tmax.has_value()) {
    err << "error: --tmin and --tmax must be given together\n";
    throw Failure{parse_error};
  }
  std::vector<std::string> paths;
  for (const auto *p : {&spec.out, &spec.stats, &spec.ccdf_sizes, &spec.ccdf_durations, &spec.discovery_log})
    if (*p)
      paths.push_back(**p);
  std::sort(paths.begin(), paths.end());
  if (std::adjacent_find(paths.begin(), paths.end()) != paths.end()) {
    err << "error: output paths must be distinct\n";
    throw Failure{parse_error};
  }

  ParseOptions opts;
  opts.time_scale = spec.time_scale;
  if (spec.tmin)
    opts.explicit_span = TimeInterval{*spec.tmin, *spec.tmax};
  try {
    LinkStream s = load_link_stream(spec.input, opts);
    if (s.collapsed_duplicates())
      err << "note: " << s.collapsed_duplicates() << " duplicate link line(s) collapsed\n";
    return s;
  } catch (const std::ios_base::failure &e) {
    err << "error: " << e.what() << '\n';
    throw Failure{io_error};
  } catch (const ParseError &e) {
    err << "error: " << spec.input << ": " << e.what() << '\n';
    throw Failure{parse_error};
  }
}

inline void write_file(const std::string &path, const std::function<void(std::ostream &)> &body, std::ostream &err) {
  std::ofstream f(path, std::ios::binary);
  if (f)
    body(f);
  if (!f) {
    err << "error: cannot write '" << path << "'\n";
    throw Failure{io_error};
  }
}

} // namespace detail

/// Enumerates maximal Δ-cliques and writes the requested outputs.
/// Cliques go to --out, or to `out` when no path is given.
inline int cmd_enumerate(const RunSpec &spec, std::ostream &out = std::cout, std::ostream &err = std::cerr) {
  try {
    LinkStream s = detail::load(spec, err);
    const Duration delta{spec.delta};
    EnumerationResult res;
    try {
      res = enumerate_maximal(s, delta, engine_config(spec));
    } catch (const TruncationError &e) {
      err << "error: " << e.what() << " (" << e.telemetry().iterations
          << " iterations); no results written since the set would be incomplete\n";
      return truncated;
    }
    if (res.telemetry.span_clamps)
      err << "note: " << res.telemetry.span_clamps << " extension(s) clamped to the explicit span\n";

    if (spec.out)
      detail::write_file(*spec.out, [&](std::ostream &f) { write_cliques(f, s, res.cliques); }, err);
    else
      write_cliques(out, s, res.cliques);

    if (spec.stats) {
      nlohmann::json j = to_json(summarize(delta, res.cliques, res.telemetry));
      j["span_clamps"] = res.telemetry.span_clamps;
      detail::write_file(*spec.stats, [&](std::ostream &f) { f << j.dump(2) << '\n'; }, err);
    }
    if (!res.cliques.empty()) {
      if (spec.ccdf_sizes)
        detail::write_file(*spec.ccdf_sizes, [&](std::ostream &f) { write_ccdf(f, ccdf(clique_sizes(res.cliques))); },
                           err);
      if (spec.ccdf_durations)
        detail::write_file(
            *spec.ccdf_durations, [&](std::ostream &f) { write_ccdf(f, ccdf(clique_durations(res.cliques))); }, err);
    }
    if (spec.discovery_log)
      detail::write_file(
          *spec.discovery_log, [&](std::ostream &f) { write_discovery_log(f, discovery_curve(res.telemetry)); }, err);
    return ok;
  } catch (const detail::Failure &f) {
    return f.code;
  }
}

/// Runs the engine and the brute-force oracle and reports any difference.
inline int cmd_compare(const RunSpec &spec, std::ostream &out = std::cout, std::ostream &err = std::cerr) {
  try {
    LinkStream s = detail::load(spec, err);
    const Duration delta{spec.delta};
    std::vector<DeltaClique> expected;
    try {
      expected = brute_force_maximal(s, delta, spec.guard);
    } catch (const OracleGuardError &e) {
      err << "error: " << e.what() << '\n';
      return oracle_guard;
    }
    EnumerationResult res;
    try {
      res = enumerate_maximal(s, delta, engine_config(spec));
    } catch (const TruncationError &e) {
      err << "error: " << e.what() << '\n';
      return truncated;
    }

    std::vector<DeltaClique> missing, extra;
    std::set_difference(expected.begin(), expected.end(), res.cliques.begin(), res.cliques.end(),
                        std::back_inserter(missing));
    std::set_difference(res.cliques.begin(), res.cliques.end(), expected.begin(), expected.end(),
                        std::back_inserter(extra));
    if (missing.empty() && extra.empty()) {
      out << "identical: " << expected.size() << " maximal cliques\n";
      return ok;
    }
    out << "mismatch: engine " << res.cliques.size() << ", oracle " << expected.size() << '\n';
    for (const auto &c : label_cliques(s, missing))
      out << "missing\t" << format_clique_line(c) << '\n';
    for (const auto &c : label_cliques(s, extra))
      out << "extra\t" << format_clique_line(c) << '\n';
    return mismatch;
  } catch (const detail::Failure &f) {
    return f.code;
  }
}

enum class GenerateKind { chain, burst, random };

struct GenerateSpec {
  GenerateKind kind = GenerateKind::random;
  generate::ChainParams chain;
  std::size_t burst_nodes = 4;
  generate::RandomParams random;
  std::optional<std::string> out;
};

inline int cmd_generate(const GenerateSpec &spec, std::ostream &out = std::cout, std::ostream &err = std::cerr) {
  std::string text;
  try {
    switch (spec.kind) {
    case GenerateKind::chain:
      text = generate::chain(spec.chain);
      break;
    case GenerateKind::burst:
      text = generate::burst(spec.burst_nodes);
      break;
    case GenerateKind::random:
      text = generate::random(spec.random);
      break;
    }
  } catch (const std::invalid_argument &e) {
    err << "error: " << e.what() << '\n';
    return parse_error;
  }
  if (!spec.out) {
    out << text;
    return ok;
  }
  try {
    detail::write_file(*spec.out, [&](std::ostream &f) { f << text; }, err);
  } catch (const detail::Failure &f) {
    return f.code;
  }
  return ok;
}

/// Stream-level statistics and static-graph clique analysis, plus an
/// enumeration summary for spec.delta when with_enumeration is set.
inline int cmd_stats(const RunSpec &spec, bool with_enumeration, std::ostream &out = std::cout,
                     std::ostream &err = std::cerr) {
  try {
    LinkStream s = detail::load(spec, err);
    StaticGraph g = induced_graph(s);
    auto cliques = static_maximal_cliques(g);
    std::size_t largest = 0;
    for (const auto &c : cliques)
      largest = std::max(largest, c.size());

    nlohmann::json j;
    j["nodes"] = s.node_count();
    j["links"] = s.link_count();
    j["pairs"] = s.pair_count();
    j["collapsed_duplicates"] = s.collapsed_duplicates();
    j["t_min"] = s.t_min();
    j["t_max"] = s.t_max();
    j["static_edges"] = g.edge_count();
    j["static_maximal_cliques"] = cliques.size();
    j["static_largest_clique"] = largest;
    bool all_classed = true;
    for (NodeId u = 0; u < s.node_count(); ++u)
      all_classed = all_classed && s.class_of(u).has_value();
    if (all_classed)
      j["static_class_homogeneity"] = class_homogeneity(cliques, s);

    if (with_enumeration) {
      try {
        auto res = enumerate_maximal(s, Duration{spec.delta}, engine_config(spec));
        j["enumeration"] = to_json(summarize(Duration{spec.delta}, res.cliques, res.telemetry));
      } catch (const TruncationError &e) {
        err << "error: " << e.what() << '\n';
        return truncated;
      }
    }

    if (spec.stats)
      detail::write_file(*spec.stats, [&](std::ostream &f) { f << j.dump(2) << '\n'; }, err);
    else
      out << j.dump(2) << '\n';
    return ok;
  } catch (const detail::Failure &f) {
    return f.code;
  }
}

} // namespace dclique::cli

#endif // DCLIQUE_CLI_HPP
