#ifndef DCLIQUE_PREDICATES_HPP
#define DCLIQUE_PREDICATES_HPP

#include <algorithm>
#include <limits>
#include <span>
#include <utility>

#include "dclique/link_stream.hpp"

namespace dclique {

/// Link times of {u, v} that fall inside [iv.b, iv.e].
inline std::span<const Timestamp> times_within(const LinkStream &s, NodeId u, NodeId v, TimeInterval iv) {
  auto tl = s.timeline(u, v);
  auto lo = std::lower_bound(tl.begin(), tl.end(), iv.b);
  auto hi = std::upper_bound(lo, tl.end(), iv.e);
  return {lo, hi};
}

/// Whether {u, v} interacts at least once in every window of length delta
/// inside [b, e].
///
/// The window condition ranges over real-valued window starts; with the link
/// times t_1 < ... < t_k restricted to [b, e] it reduces to: k >= 1, and when
/// e - b > delta, t_1 <= b + delta, t_k >= e - delta and every gap
/// t_{i+1} - t_i <= delta.
inline bool pair_covers(const LinkStream &s, NodeId u, NodeId v, TimeInterval iv, Duration delta) {
  auto ts = times_within(s, u, v, iv);
  if (ts.empty())
    return false;
  const std::int64_t d = delta.ticks();
  if (iv.e - iv.b <= d)
    return true;
  if (ts.front() > iv.b + d || ts.back() < iv.e - d)
    return false;
  for (std::size_t i = 1; i < ts.size(); ++i)
    if (ts[i] - ts[i - 1] > d)
      return false;
  return true;
}

inline bool is_delta_clique(const LinkStream &s, const DeltaClique &c, Duration delta) {
  if (c.nodes.size() < 2)
    return false;
  for (std::size_t i = 0; i < c.nodes.size(); ++i)
    for (std::size_t j = i + 1; j < c.nodes.size(); ++j)
      if (!pair_covers(s, c.nodes[i], c.nodes[j], c.interval, delta))
        return false;
  return true;
}

/// Earliest and latest link times among the clique's pairs within its interval.
/// Requires every pair to have at least one link there (true for Δ-cliques).
inline std::pair<Timestamp, Timestamp> span_bounds(const LinkStream &s, const DeltaClique &c) {
  Timestamp lo = std::numeric_limits<Timestamp>::max();
  Timestamp hi = std::numeric_limits<Timestamp>::min();
  for (std::size_t i = 0; i < c.nodes.size(); ++i)
    for (std::size_t j = i + 1; j < c.nodes.size(); ++j) {
      auto ts = times_within(s, c.nodes[i], c.nodes[j], c.interval);
      if (ts.empty())
        continue;
      lo = std::min(lo, ts.front());
      hi = std::max(hi, ts.back());
    }
  return {lo, hi};
}

} // namespace dclique

#endif // DCLIQUE_PREDICATES_HPP
