#ifndef DCLIQUE_ORACLE_HPP
#define DCLIQUE_ORACLE_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dclique/link_stream.hpp"
#include "dclique/predicates.hpp"
#include "dclique/static_graph.hpp"

namespace dclique {

class OracleGuardError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct OracleLimits {
  std::size_t max_nodes = 8;
  std::size_t max_links = 30;
  /// Also try every boundary candidate shifted by +-1 tick.
  bool widen_grid = false;
};

/// inner.nodes ⊆ outer.nodes and [inner.b, inner.e] ⊆ [outer.b, outer.e].
inline bool contains(const DeltaClique &outer, const DeltaClique &inner) {
  return outer.interval.contains(inner.interval) &&
         std::includes(outer.nodes.begin(), outer.nodes.end(), inner.nodes.begin(), inner.nodes.end());
}

/// Exhaustive maximal Δ-clique enumeration for tiny streams.
///
/// Tries every node subset against every (b, e) drawn from the span ends, the
/// link times and the link times shifted by ±Δ, then keeps the cliques not
/// contained in another one.
inline std::vector<DeltaClique> brute_force_maximal(const LinkStream &s, Duration delta,
                                                    const OracleLimits &limits = {}) {
  const std::size_t n = s.node_count();
  if (n > limits.max_nodes || s.link_count() > limits.max_links)
    throw OracleGuardError("stream too large for brute force (n=" + std::to_string(n) +
                           ", m=" + std::to_string(s.link_count()) + ")");

  const TimeInterval span = effective_span(s, delta);
  std::vector<Timestamp> starts{span.b}, ends{span.e};
  for (const Link &l : s.links()) {
    starts.push_back(l.t);
    starts.push_back(l.t - delta);
    ends.push_back(l.t);
    ends.push_back(l.t + delta);
  }
  auto finish = [&](std::vector<Timestamp> &v) {
    if (limits.widen_grid) {
      const std::size_t k = v.size();
      for (std::size_t i = 0; i < k; ++i) {
        v.push_back(v[i] - 1);
        v.push_back(v[i] + 1);
      }
    }
    for (auto &t : v)
      t = std::clamp(t, span.b, span.e);
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  finish(starts);
  finish(ends);

  std::vector<DeltaClique> found;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (std::popcount(mask) < 2)
      continue;
    NodeSet xs;
    for (NodeId u = 0; u < n; ++u)
      if (mask >> u & 1)
        xs.push_back(u);
    for (Timestamp b : starts)
      for (Timestamp e : ends) {
        if (b > e)
          continue;
        DeltaClique c{xs, TimeInterval{b, e}};
        if (is_delta_clique(s, c, delta))
          found.push_back(std::move(c));
      }
  }

  std::vector<DeltaClique> maximal;
  for (std::size_t i = 0; i < found.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < found.size() && !dominated; ++j)
      dominated = i != j && contains(found[j], found[i]);
    if (!dominated)
      maximal.push_back(found[i]);
  }
  std::sort(maximal.begin(), maximal.end());
  return maximal;
}

/// All maximal cliques of g (Bron-Kerbosch with Tomita pivoting), each sorted,
/// listed in lexicographic order.
inline std::vector<NodeSet> static_maximal_cliques(const StaticGraph &g) {
  std::vector<NodeSet> out;
  auto intersect = [&](const NodeSet &xs, NodeId v) {
    auto nb = g.neighbors(v);
    NodeSet r;
    std::set_intersection(xs.begin(), xs.end(), nb.begin(), nb.end(), std::back_inserter(r));
    return r;
  };

  NodeSet r;
  std::function<void(NodeSet, NodeSet)> expand = [&](NodeSet p, NodeSet x) {
    if (p.empty()) {
      if (x.empty() && !r.empty()) {
        NodeSet c = r;
        std::sort(c.begin(), c.end());
        out.push_back(std::move(c));
      }
      return;
    }
    // pivot maximizing |P ∩ N(u)| over P ∪ X
    NodeId pivot = p.front();
    std::size_t best = 0;
    for (const NodeSet *side : {&p, &x})
      for (NodeId u : *side) {
        auto nb = g.neighbors(u);
        std::size_t cnt = 0;
        for (NodeId w : p)
          cnt += std::binary_search(nb.begin(), nb.end(), w);
        if (cnt >= best) {
          best = cnt;
          pivot = u;
        }
      }
    NodeSet branch;
    auto pn = g.neighbors(pivot);
    std::set_difference(p.begin(), p.end(), pn.begin(), pn.end(), std::back_inserter(branch));
    for (NodeId v : branch) {
      r.push_back(v);
      expand(intersect(p, v), intersect(x, v));
      r.pop_back();
      p.erase(std::lower_bound(p.begin(), p.end(), v));
      x.insert(std::lower_bound(x.begin(), x.end(), v), v);
    }
  };

  NodeSet all(g.vertex_count());
  for (NodeId v = 0; v < all.size(); ++v)
    all[v] = v;
  expand(all, {});
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace dclique

#endif // DCLIQUE_ORACLE_HPP
