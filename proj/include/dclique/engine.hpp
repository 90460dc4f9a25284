#ifndef DCLIQUE_ENGINE_HPP
#define DCLIQUE_ENGINE_HPP

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "dclique/link_stream.hpp"
#include "dclique/predicates.hpp"

namespace dclique {

enum class SearchOrder {
  bfs, ///< FIFO: take from the front of the pending queue
  dfs, ///< LIFO: take from the back
};

struct EngineConfig {
  SearchOrder order = SearchOrder::dfs;
  /// Restrict first/last occurrence searches to [b, min(e, b+Δ)] and [max(b, e-Δ), e].
  bool use_interval_narrowing = true;
  /// Carry a candidate node set with each state instead of scanning V \ X.
  bool use_candidate_sets = true;
  /// Fail with TruncationError once more than this many states have been seen.
  std::optional<std::size_t> max_states;
  bool log_discovery = false;
  /// Re-check that every state pushed is a Δ-clique (slow; for small inputs).
  bool check_soundness = false;
  /// Test hook: skip the right-extension step entirely.
  bool fault_skip_right_extension = false;
};

struct DiscoveryPoint {
  std::uint64_t iteration;
  std::size_t maximal_count;
  /// Largest |X| * (e - b) among maximal cliques found so far.
  std::int64_t max_size;
};

struct Telemetry {
  std::uint64_t iterations = 0;
  std::size_t states_seen = 0;
  std::size_t maximal_found = 0;
  /// Extensions cut short by an explicit span boundary.
  std::size_t span_clamps = 0;
  bool discovery_logged = false;
  std::vector<DiscoveryPoint> discovery_log;
  double wall_seconds = 0.0;
};

/// The configuration space outgrew EngineConfig::max_states; the partial
/// result is withheld because it would not be complete.
class TruncationError : public std::runtime_error {
public:
  explicit TruncationError(Telemetry t)
      : std::runtime_error("state limit exceeded after " + std::to_string(t.states_seen) + " states"),
        telemetry_(std::move(t)) {}

  const Telemetry &telemetry() const noexcept { return telemetry_; }

private:
  Telemetry telemetry_;
};

/// A pending clique plus the nodes still worth testing for extension.
/// candidates == nullopt means "every node outside the clique".
struct SearchState {
  DeltaClique clique;
  std::optional<NodeSet> candidates;
};

/// Identity of a clique for memoization.
struct CliqueKey {
  NodeSet nodes;
  Timestamp b = 0;
  Timestamp e = 0;

  friend bool operator==(const CliqueKey &, const CliqueKey &) = default;
};

struct CliqueKeyHash {
  std::size_t operator()(const CliqueKey &k) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ull;
    auto mix = [&h](std::uint64_t x) {
      h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    };
    mix(static_cast<std::uint64_t>(k.b));
    mix(static_cast<std::uint64_t>(k.e));
    for (NodeId u : k.nodes)
      mix(u);
    return static_cast<std::size_t>(h);
  }
};

inline CliqueKey canonical_key(const DeltaClique &c) { return CliqueKey{c.nodes, c.b(), c.e()}; }

/// Insert-only set of cliques already examined.
class SeenSet {
public:
  /// True when c was not present before.
  bool insert(const DeltaClique &c) { return keys_.insert(canonical_key(c)).second; }
  bool contains(const DeltaClique &c) const { return keys_.count(canonical_key(c)) != 0; }
  std::size_t size() const noexcept { return keys_.size(); }

private:
  std::unordered_set<CliqueKey, CliqueKeyHash> keys_;
};

namespace detail {

/// Nodes adjacent (in the induced graph) to every node of xs, excluding xs.
inline NodeSet common_neighbors(const LinkStream &s, std::span<const NodeId> xs) {
  auto first = s.neighbors(xs[0]);
  NodeSet acc(first.begin(), first.end());
  NodeSet tmp;
  for (std::size_t i = 1; i < xs.size() && !acc.empty(); ++i) {
    auto nb = s.neighbors(xs[i]);
    tmp.clear();
    std::set_intersection(acc.begin(), acc.end(), nb.begin(), nb.end(), std::back_inserter(tmp));
    acc.swap(tmp);
  }
  std::erase_if(acc, [&](NodeId v) { return std::binary_search(xs.begin(), xs.end(), v); });
  return acc;
}

inline NodeSet with_node(const NodeSet &xs, NodeId v) {
  NodeSet out;
  out.reserve(xs.size() + 1);
  auto it = std::lower_bound(xs.begin(), xs.end(), v);
  out.insert(out.end(), xs.begin(), it);
  out.push_back(v);
  out.insert(out.end(), it, xs.end());
  return out;
}

struct Extension {
  Timestamp bound;
  bool clamped;
};

inline Extension left_extension_impl(const LinkStream &s, const DeltaClique &c, Duration delta, TimeInterval span,
                                     bool narrowing) {
  const Timestamp b = c.b();
  Timestamp f = b;
  const TimeInterval window{b, narrowing ? std::min(c.e(), b + delta) : c.e()};
  for (std::size_t i = 0; i < c.nodes.size(); ++i)
    for (std::size_t j = i + 1; j < c.nodes.size(); ++j) {
      std::optional<Timestamp> first;
      if (narrowing) {
        auto ts = times_within(s, c.nodes[i], c.nodes[j], window);
        if (!ts.empty())
          first = ts.front();
      } else {
        first = first_occurrence(s, c.nodes[i], c.nodes[j], b);
      }
      if (!first) // not a Δ-clique; nothing is certified
        return {b, false};
      f = std::max(f, *first);
    }
  Timestamp nb = f - delta;
  bool clamped = false;
  if (nb < span.b) {
    nb = span.b;
    clamped = true;
  }
  if (nb >= b)
    return {b, false};
  return {nb, clamped};
}

inline Extension right_extension_impl(const LinkStream &s, const DeltaClique &c, Duration delta, TimeInterval span,
                                      bool narrowing) {
  const Timestamp e = c.e();
  Timestamp l = e;
  const TimeInterval window{narrowing ? std::max(c.b(), e - delta) : c.b(), e};
  for (std::size_t i = 0; i < c.nodes.size(); ++i)
    for (std::size_t j = i + 1; j < c.nodes.size(); ++j) {
      std::optional<Timestamp> last;
      if (narrowing) {
        auto ts = times_within(s, c.nodes[i], c.nodes[j], window);
        if (!ts.empty())
          last = ts.back();
      } else {
        last = last_occurrence(s, c.nodes[i], c.nodes[j], e);
      }
      if (!last)
        return {e, false};
      l = std::min(l, *last);
    }
  Timestamp ne = l + delta;
  bool clamped = false;
  if (ne > span.e) {
    ne = span.e;
    clamped = true;
  }
  if (ne <= e)
    return {e, false};
  return {ne, clamped};
}

} // namespace detail

/// Earliest start b' <= b certified from the links inside c: f - Δ where f is
/// the latest first occurrence after b over all pairs, clamped to the span.
/// Returns c.b() when no earlier start is certified.
inline Timestamp left_extension(const LinkStream &s, const DeltaClique &c, Duration delta, TimeInterval span,
                                bool narrowing = true) {
  return detail::left_extension_impl(s, c, delta, span, narrowing).bound;
}

/// Mirror of left_extension: l + Δ where l is the earliest last occurrence.
inline Timestamp right_extension(const LinkStream &s, const DeltaClique &c, Duration delta, TimeInterval span,
                                 bool narrowing = true) {
  return detail::right_extension_impl(s, c, delta, span, narrowing).bound;
}

struct NodeExtensions {
  /// Children (X + v, [b, e]) in ascending v.
  std::vector<SearchState> children;
  /// Every v for which X + v stays a Δ-clique on [b, e].
  NodeSet passing;
};

/// All single-node extensions of state.clique over its candidate nodes.
inline NodeExtensions node_extensions(const LinkStream &s, const SearchState &state, Duration delta,
                                      bool inherit_candidates = true) {
  const DeltaClique &c = state.clique;
  NodeExtensions out;
  auto passes = [&](NodeId v) {
    for (NodeId u : c.nodes)
      if (!pair_covers(s, u, v, c.interval, delta))
        return false;
    return true;
  };
  if (state.candidates) {
    for (NodeId v : *state.candidates)
      if (passes(v))
        out.passing.push_back(v);
  } else {
    for (NodeId v = 0; v < s.node_count(); ++v)
      if (!std::binary_search(c.nodes.begin(), c.nodes.end(), v) && passes(v))
        out.passing.push_back(v);
  }
  out.children.reserve(out.passing.size());
  for (NodeId v : out.passing) {
    SearchState child{DeltaClique{detail::with_node(c.nodes, v), c.interval}, std::nullopt};
    if (inherit_candidates) {
      NodeSet cand;
      cand.reserve(out.passing.size() - 1);
      for (NodeId w : out.passing)
        if (w != v)
          cand.push_back(w);
      child.candidates = std::move(cand);
    }
    out.children.push_back(std::move(child));
  }
  return out;
}

struct SeedResult {
  std::deque<SearchState> pending;
  SeenSet seen;
};

/// One trivial clique ({u, v}, [t, t]) per link.
inline SeedResult seed(const LinkStream &s, bool with_candidates = true) {
  SeedResult r;
  for (const Link &l : s.links()) {
    SearchState st{DeltaClique{NodeSet{l.u, l.v}, TimeInterval{l.t, l.t}}, std::nullopt};
    if (with_candidates)
      st.candidates = detail::common_neighbors(s, st.clique.nodes);
    r.seen.insert(st.clique);
    r.pending.push_back(std::move(st));
  }
  return r;
}

struct EnumerationResult {
  /// Sorted by (b, e, node ids).
  std::vector<DeltaClique> cliques;
  Telemetry telemetry;
};

/// Enumerates every maximal Δ-clique of the stream.
///
/// Each state taken from the pending container is extended by one node, by an
/// earlier start and by a later end; every extension not seen before is
/// queued. A state with no extension at all is maximal. Extensions mark the
/// state non-maximal even when the extended clique was already seen.
inline EnumerationResult enumerate_maximal(const LinkStream &s, Duration delta, const EngineConfig &cfg = {}) {
  const auto started = std::chrono::steady_clock::now();
  const TimeInterval span = effective_span(s, delta);

  EnumerationResult out;
  Telemetry &tel = out.telemetry;
  tel.discovery_logged = cfg.log_discovery;
  auto [pending, seen] = seed(s, cfg.use_candidate_sets);
  std::int64_t best_size = 0;

  auto finish_clock = [&] {
    tel.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    tel.states_seen = seen.size();
    tel.maximal_found = out.cliques.size();
  };

  auto push = [&](SearchState st) {
    if (!seen.insert(st.clique))
      return;
    if (cfg.check_soundness && !is_delta_clique(s, st.clique, delta))
      throw std::logic_error("non-clique state generated: " + to_string(st.clique));
    if (cfg.max_states && seen.size() > *cfg.max_states) {
      finish_clock();
      throw TruncationError(tel);
    }
    pending.push_back(std::move(st));
  };

  while (!pending.empty()) {
    SearchState st;
    if (cfg.order == SearchOrder::bfs) {
      st = std::move(pending.front());
      pending.pop_front();
    } else {
      st = std::move(pending.back());
      pending.pop_back();
    }
    ++tel.iterations;
    const DeltaClique &c = st.clique;
    bool is_max = true;

    NodeExtensions ext = node_extensions(s, st, delta, cfg.use_candidate_sets);
    if (!ext.passing.empty())
      is_max = false;

    // Candidates for interval extensions: nodes that fail on [b, e] also fail
    // on any enclosing interval only when e - b >= Δ.
    auto interval_child_candidates = [&]() -> std::optional<NodeSet> {
      if (!cfg.use_candidate_sets)
        return std::nullopt;
      if (c.duration() >= delta.ticks())
        return ext.passing;
      return detail::common_neighbors(s, c.nodes);
    };

    auto left = detail::left_extension_impl(s, c, delta, span, cfg.use_interval_narrowing);
    if (left.bound != c.b()) {
      is_max = false;
      tel.span_clamps += left.clamped;
    }
    std::optional<detail::Extension> right;
    if (!cfg.fault_skip_right_extension) {
      right = detail::right_extension_impl(s, c, delta, span, cfg.use_interval_narrowing);
      if (right->bound != c.e()) {
        is_max = false;
        tel.span_clamps += right->clamped;
      }
    }

    if (is_max) {
      best_size = std::max<std::int64_t>(best_size, static_cast<std::int64_t>(c.nodes.size()) * c.duration());
      out.cliques.push_back(c);
      if (cfg.log_discovery)
        tel.discovery_log.push_back({tel.iterations, out.cliques.size(), best_size});
      continue;
    }

    // Node children go last so DFS follows node growth first.
    if (left.bound != c.b())
      push(SearchState{DeltaClique{c.nodes, TimeInterval{left.bound, c.e()}}, interval_child_candidates()});
    if (right && right->bound != c.e())
      push(SearchState{DeltaClique{c.nodes, TimeInterval{c.b(), right->bound}}, interval_child_candidates()});
    for (auto &child : ext.children)
      push(std::move(child));
  }

  std::sort(out.cliques.begin(), out.cliques.end());
  finish_clock();
  return out;
}

} // namespace dclique

#endif // DCLIQUE_ENGINE_HPP
