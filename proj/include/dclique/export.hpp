#ifndef DCLIQUE_EXPORT_HPP
#define DCLIQUE_EXPORT_HPP

#include <algorithm>
#include <ostream>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "dclique/analytics.hpp"
#include "dclique/link_stream.hpp"

namespace dclique {

/// A clique with its nodes replaced by their original labels, sorted.
struct LabeledClique {
  Timestamp b;
  Timestamp e;
  std::vector<std::string> labels;

  friend auto operator<=>(const LabeledClique &, const LabeledClique &) = default;
};

inline std::vector<LabeledClique> label_cliques(const LinkStream &s, std::span<const DeltaClique> cliques) {
  std::vector<LabeledClique> out;
  out.reserve(cliques.size());
  for (const auto &c : cliques) {
    LabeledClique lc{c.b(), c.e(), {}};
    for (NodeId u : c.nodes)
      lc.labels.push_back(s.label(u));
    std::sort(lc.labels.begin(), lc.labels.end());
    out.push_back(std::move(lc));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::string format_clique_line(const LabeledClique &c) {
  std::string line = std::to_string(c.b) + '\t' + std::to_string(c.e) + '\t';
  for (std::size_t i = 0; i < c.labels.size(); ++i) {
    if (i)
      line += ' ';
    line += c.labels[i];
  }
  return line;
}

/// One line per clique: `b<TAB>e<TAB>label label ...`, sorted by (b, e, labels).
inline void write_cliques(std::ostream &out, const LinkStream &s, std::span<const DeltaClique> cliques) {
  for (const auto &c : label_cliques(s, cliques))
    out << format_clique_line(c) << '\n';
}

inline void write_ccdf(std::ostream &out, const CCDFSeries &series) {
  out << "value\tccdf\n";
  auto old = out.precision(17);
  for (const auto &p : series)
    out << p.value << '\t' << p.fraction << '\n';
  out.precision(old);
}

inline void write_discovery_log(std::ostream &out, std::span<const DiscoveryPoint> log) {
  out << "iteration\tmaximal_count\tmax_size\n";
  for (const auto &p : log)
    out << p.iteration << '\t' << p.maximal_count << '\t' << p.max_size << '\n';
}

} // namespace dclique

#endif // DCLIQUE_EXPORT_HPP
