#ifndef DCLIQUE_TYPES_HPP
#define DCLIQUE_TYPES_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace dclique {

/// Instant in integer ticks (seconds for contact traces). Negative values are
/// legal: the default span pads the earliest link time by -delta.
using Timestamp = std::int64_t;

/// Dense node identifier, 0..n-1 in order of first appearance.
using NodeId = std::uint32_t;

/// Sorted, duplicate-free set of node ids.
using NodeSet = std::vector<NodeId>;

/// Non-negative length of time. Kept distinct from Timestamp so the two cannot
/// be swapped silently at call sites.
class Duration {
public:
  constexpr Duration() = default;
  constexpr explicit Duration(std::int64_t ticks) : ticks_(ticks) {
    if (ticks < 0)
      throw std::invalid_argument("duration must be non-negative");
  }

  constexpr std::int64_t ticks() const noexcept { return ticks_; }

  friend constexpr auto operator<=>(Duration, Duration) = default;

private:
  std::int64_t ticks_ = 0;
};

constexpr Timestamp operator+(Timestamp t, Duration d) noexcept { return t + d.ticks(); }
constexpr Timestamp operator-(Timestamp t, Duration d) noexcept { return t - d.ticks(); }

/// Closed interval [b, e] with b <= e.
struct TimeInterval {
  Timestamp b = 0;
  Timestamp e = 0;

  constexpr std::int64_t length() const noexcept { return e - b; }
  constexpr bool contains(Timestamp t) const noexcept { return b <= t && t <= e; }
  constexpr bool contains(const TimeInterval &o) const noexcept {
    return b <= o.b && o.e <= e;
  }

  friend constexpr auto operator<=>(const TimeInterval &, const TimeInterval &) = default;
};

/// A node set together with the interval during which it is claimed to form a
/// clique. Nodes are kept sorted so equality and ordering are structural.
struct DeltaClique {
  NodeSet nodes;
  TimeInterval interval;

  DeltaClique() = default;
  DeltaClique(NodeSet xs, TimeInterval iv) : nodes(std::move(xs)), interval(iv) {
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  }
  DeltaClique(NodeSet xs, Timestamp b, Timestamp e) : DeltaClique(std::move(xs), TimeInterval{b, e}) {}

  Timestamp b() const noexcept { return interval.b; }
  Timestamp e() const noexcept { return interval.e; }
  std::int64_t duration() const noexcept { return interval.length(); }

  friend bool operator==(const DeltaClique &, const DeltaClique &) = default;

  /// Output order: by b, then e, then node ids.
  friend std::strong_ordering operator<=>(const DeltaClique &l, const DeltaClique &r) {
    if (auto c = l.interval.b <=> r.interval.b; c != 0)
      return c;
    if (auto c = l.interval.e <=> r.interval.e; c != 0)
      return c;
    return std::lexicographical_compare_three_way(l.nodes.begin(), l.nodes.end(), r.nodes.begin(),
                                                  r.nodes.end());
  }
};

inline std::string to_string(const DeltaClique &c) {
  std::string s = "({";
  for (std::size_t i = 0; i < c.nodes.size(); ++i) {
    if (i)
      s += ',';
    s += std::to_string(c.nodes[i]);
  }
  s += "},[" + std::to_string(c.b()) + ',' + std::to_string(c.e()) + "])";
  return s;
}

} // namespace dclique

#endif // DCLIQUE_TYPES_HPP
