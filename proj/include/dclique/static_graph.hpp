#ifndef DCLIQUE_STATIC_GRAPH_HPP
#define DCLIQUE_STATIC_GRAPH_HPP

#include <algorithm>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dclique/link_stream.hpp"

namespace dclique {

/// Simple undirected graph with sorted adjacency lists.
class StaticGraph {
public:
  StaticGraph() = default;
  explicit StaticGraph(std::size_t n) : adj_(n) {}

  /// Builds from an edge list; duplicates are merged.
  StaticGraph(std::size_t n, std::span<const std::pair<NodeId, NodeId>> edges) : adj_(n) {
    for (auto [u, v] : edges) {
      if (u == v)
        throw std::invalid_argument("self-loop in static graph");
      adj_.at(u).push_back(v);
      adj_.at(v).push_back(u);
    }
    for (auto &nb : adj_) {
      std::sort(nb.begin(), nb.end());
      nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    }
  }

  std::size_t vertex_count() const noexcept { return adj_.size(); }

  std::size_t edge_count() const noexcept {
    std::size_t twice = 0;
    for (const auto &nb : adj_)
      twice += nb.size();
    return twice / 2;
  }

  std::span<const NodeId> neighbors(NodeId u) const { return adj_.at(u); }

  bool adjacent(NodeId u, NodeId v) const {
    const auto &nb = adj_.at(u);
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  bool is_clique(std::span<const NodeId> xs) const {
    for (std::size_t i = 0; i < xs.size(); ++i)
      for (std::size_t j = i + 1; j < xs.size(); ++j)
        if (!adjacent(xs[i], xs[j]))
          return false;
    return true;
  }

private:
  std::vector<std::vector<NodeId>> adj_;
};

/// One edge per pair that interacts at least once.
inline StaticGraph induced_graph(const LinkStream &s) {
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId u = 0; u < s.node_count(); ++u)
    for (NodeId v : s.neighbors(u))
      if (u < v)
        edges.emplace_back(u, v);
  return StaticGraph(s.node_count(), edges);
}

} // namespace dclique

#endif // DCLIQUE_STATIC_GRAPH_HPP
