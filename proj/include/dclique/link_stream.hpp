#ifndef DCLIQUE_LINK_STREAM_HPP
#define DCLIQUE_LINK_STREAM_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dclique/types.hpp"

namespace dclique {

/// One undirected link, stored with u < v.
struct Link {
  Timestamp t;
  NodeId u;
  NodeId v;

  friend auto operator<=>(const Link &, const Link &) = default;
};

namespace detail {
constexpr std::uint64_t pair_key(NodeId u, NodeId v) noexcept {
  if (u > v)
    std::swap(u, v);
  return (std::uint64_t{u} << 32) | v;
}
} // namespace detail

class LinkStreamBuilder;

/// Immutable set of timestamped undirected links.
///
/// Every pair that interacts owns a strictly increasing timeline of link
/// times; all occurrence queries are binary searches on those timelines.
/// Instances are safe to share across threads once built.
class LinkStream {
public:
  std::size_t node_count() const noexcept { return labels_.size(); }
  std::size_t link_count() const noexcept { return links_.size(); }
  std::size_t pair_count() const noexcept { return timelines_.size(); }

  /// Links sorted by (t, u, v) with u < v.
  std::span<const Link> links() const noexcept { return links_; }

  Timestamp t_min() const noexcept { return links_.front().t; }
  Timestamp t_max() const noexcept { return t_max_; }

  const std::optional<TimeInterval> &explicit_span() const noexcept { return explicit_span_; }

  /// Sorted link times of pair {u, v}; empty when the pair never interacts.
  std::span<const Timestamp> timeline(NodeId u, NodeId v) const {
    auto it = timelines_.find(detail::pair_key(u, v));
    if (it == timelines_.end())
      return {};
    return it->second;
  }

  /// Nodes sharing at least one link with u, ascending.
  std::span<const NodeId> neighbors(NodeId u) const { return neighbors_.at(u); }

  const std::string &label(NodeId u) const { return labels_.at(u); }
  const std::vector<std::string> &labels() const noexcept { return labels_; }

  std::optional<NodeId> find(std::string_view label) const {
    auto it = ids_.find(std::string(label));
    if (it == ids_.end())
      return std::nullopt;
    return it->second;
  }

  const std::optional<std::string> &class_of(NodeId u) const { return classes_.at(u); }

  /// Input lines dropped because they repeated an existing link.
  std::size_t collapsed_duplicates() const noexcept { return collapsed_; }

private:
  friend class LinkStreamBuilder;
  LinkStream() = default;

  std::vector<Link> links_;
  std::unordered_map<std::uint64_t, std::vector<Timestamp>> timelines_;
  std::vector<std::vector<NodeId>> neighbors_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, NodeId> ids_;
  std::vector<std::optional<std::string>> classes_;
  std::optional<TimeInterval> explicit_span_;
  Timestamp t_max_ = 0;
  std::size_t collapsed_ = 0;
};

/// Accumulates labelled links and produces a validated LinkStream.
class LinkStreamBuilder {
public:
  NodeId intern(std::string_view label) {
    auto [it, inserted] = ids_.try_emplace(std::string(label), static_cast<NodeId>(labels_.size()));
    if (inserted) {
      labels_.emplace_back(label);
      classes_.emplace_back();
    }
    return it->second;
  }

  /// Adds link (t, u, v). Self-loops are rejected.
  void add(Timestamp t, std::string_view u, std::string_view v) {
    if (u == v)
      throw std::invalid_argument("self-loop on node '" + std::string(u) + "'");
    NodeId a = intern(u);
    NodeId b = intern(v);
    raw_.push_back(Link{t, std::min(a, b), std::max(a, b)});
  }

  /// Records a class label for a node; the first label seen wins.
  void set_class(std::string_view node, std::string_view cls) {
    NodeId id = intern(node);
    if (!classes_[id])
      classes_[id] = std::string(cls);
  }

  void set_span(TimeInterval span) {
    if (span.b > span.e)
      throw std::invalid_argument("span start exceeds span end");
    span_ = span;
  }

  LinkStream build() && {
    if (raw_.empty())
      throw std::invalid_argument("link stream has no links");

    LinkStream s;
    std::sort(raw_.begin(), raw_.end());
    auto last = std::unique(raw_.begin(), raw_.end());
    s.collapsed_ = static_cast<std::size_t>(raw_.end() - last);
    raw_.erase(last, raw_.end());

    if (span_) {
      for (const Link &l : raw_)
        if (!span_->contains(l.t))
          throw std::invalid_argument("link at time " + std::to_string(l.t) + " lies outside span [" +
                                      std::to_string(span_->b) + "," + std::to_string(span_->e) + "]");
    }

    s.neighbors_.resize(labels_.size());
    s.t_max_ = raw_.front().t;
    for (const Link &l : raw_) {
      auto &tl = s.timelines_[detail::pair_key(l.u, l.v)];
      if (tl.empty()) {
        s.neighbors_[l.u].push_back(l.v);
        s.neighbors_[l.v].push_back(l.u);
      }
      tl.push_back(l.t); // raw_ is time-sorted, so each timeline is increasing
      s.t_max_ = std::max(s.t_max_, l.t);
    }
    for (auto &nb : s.neighbors_)
      std::sort(nb.begin(), nb.end());

    s.links_ = std::move(raw_);
    s.labels_ = std::move(labels_);
    s.ids_ = std::move(ids_);
    s.classes_ = std::move(classes_);
    s.explicit_span_ = span_;
    return s;
  }

private:
  std::vector<Link> raw_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, NodeId> ids_;
  std::vector<std::optional<std::string>> classes_;
  std::optional<TimeInterval> span_;
};

/// The explicit span when one was given, otherwise [t_min - delta, t_max + delta].
inline TimeInterval effective_span(const LinkStream &s, Duration delta) {
  if (s.explicit_span())
    return *s.explicit_span();
  return {s.t_min() - delta, s.t_max() + delta};
}

/// Smallest link time t >= b on pair {u, v}.
inline std::optional<Timestamp> first_occurrence(const LinkStream &s, NodeId u, NodeId v, Timestamp b) {
  auto tl = s.timeline(u, v);
  auto it = std::lower_bound(tl.begin(), tl.end(), b);
  if (it == tl.end())
    return std::nullopt;
  return *it;
}

/// Largest link time t <= e on pair {u, v}.
inline std::optional<Timestamp> last_occurrence(const LinkStream &s, NodeId u, NodeId v, Timestamp e) {
  auto tl = s.timeline(u, v);
  auto it = std::upper_bound(tl.begin(), tl.end(), e);
  if (it == tl.begin())
    return std::nullopt;
  return *std::prev(it);
}

} // namespace dclique

#endif // DCLIQUE_LINK_STREAM_HPP
