#ifndef DCLIQUE_ANALYTICS_HPP
#define DCLIQUE_ANALYTICS_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "dclique/engine.hpp"
#include "dclique/link_stream.hpp"

namespace dclique {

/// One row of the per-Δ results table.
struct SummaryRow {
  std::int64_t delta = 0;
  std::size_t result_count = 0;
  std::size_t max_nodes = 0;
  std::int64_t max_duration = 0;
  double runtime_seconds = 0.0;
  std::uint64_t iterations = 0;
  std::size_t states_seen = 0;
  /// Set when the result was empty and the max fields carry no information.
  bool empty_result = false;
};

inline SummaryRow summarize(Duration delta, std::span<const DeltaClique> cliques, const Telemetry &tel) {
  SummaryRow row;
  row.delta = delta.ticks();
  row.result_count = cliques.size();
  row.runtime_seconds = tel.wall_seconds;
  row.iterations = tel.iterations;
  row.states_seen = tel.states_seen;
  row.empty_result = cliques.empty();
  for (const DeltaClique &c : cliques) {
    row.max_nodes = std::max(row.max_nodes, c.nodes.size());
    row.max_duration = std::max(row.max_duration, c.duration());
  }
  return row;
}

struct CCDFPoint {
  std::int64_t value;
  /// Fraction of the population with a value >= this one.
  double fraction;

  friend bool operator==(const CCDFPoint &, const CCDFPoint &) = default;
};

using CCDFSeries = std::vector<CCDFPoint>;

/// Complementary cumulative distribution evaluated at each distinct value.
inline CCDFSeries ccdf(std::vector<std::int64_t> values) {
  if (values.empty())
    throw std::invalid_argument("ccdf of an empty population");
  std::sort(values.begin(), values.end());
  const double total = static_cast<double>(values.size());
  CCDFSeries out;
  for (std::size_t i = 0; i < values.size();) {
    std::size_t j = i;
    while (j < values.size() && values[j] == values[i])
      ++j;
    out.push_back({values[i], static_cast<double>(values.size() - i) / total});
    i = j;
  }
  return out;
}

inline std::vector<std::int64_t> clique_sizes(std::span<const DeltaClique> cliques) {
  std::vector<std::int64_t> v;
  v.reserve(cliques.size());
  for (const auto &c : cliques)
    v.push_back(static_cast<std::int64_t>(c.nodes.size()));
  return v;
}

inline std::vector<std::int64_t> clique_durations(std::span<const DeltaClique> cliques) {
  std::vector<std::int64_t> v;
  v.reserve(cliques.size());
  for (const auto &c : cliques)
    v.push_back(c.duration());
  return v;
}

/// Discovery progress over loop iterations. Requires EngineConfig::log_discovery.
inline std::vector<DiscoveryPoint> discovery_curve(const Telemetry &tel) {
  if (!tel.discovery_logged)
    throw std::logic_error("discovery logging was not enabled for this run");
  return tel.discovery_log;
}

/// Fraction of node sets whose members all carry the same class label.
inline double class_homogeneity(std::span<const NodeSet> cliques, const LinkStream &s) {
  if (cliques.empty())
    return 0.0;
  std::size_t same = 0;
  for (const NodeSet &xs : cliques) {
    const std::string *first = nullptr;
    bool homogeneous = true;
    for (NodeId u : xs) {
      const auto &cls = s.class_of(u);
      if (!cls)
        throw std::invalid_argument("no class label for node '" + s.label(u) + "'");
      if (!first)
        first = &*cls;
      else if (*first != *cls)
        homogeneous = false;
    }
    same += homogeneous;
  }
  return static_cast<double>(same) / static_cast<double>(cliques.size());
}

} // namespace dclique

#endif // DCLIQUE_ANALYTICS_HPP
