#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dclique/dclique.hpp"

namespace dclique::testing {

/// Three nodes, four links: (3,a,b) (4,b,c) (5,a,c) (6,a,b).
inline const char *kExampleText = "3 a b\n4 b c\n5 a c\n6 a b\n";

inline LinkStream example_stream(std::optional<TimeInterval> span = std::nullopt) {
  ParseOptions opts;
  opts.explicit_span = span;
  return parse_link_stream(kExampleText, opts);
}

/// Node ids of the given labels, e.g. ids(s, {"a", "b"}).
inline NodeSet ids(const LinkStream &s, std::initializer_list<const char *> labels) {
  NodeSet out;
  for (const char *l : labels)
    out.push_back(s.find(l).value());
  std::sort(out.begin(), out.end());
  return out;
}

inline DeltaClique clique(const LinkStream &s, std::initializer_list<const char *> labels, Timestamp b,
                          Timestamp e) {
  return DeltaClique{ids(s, labels), TimeInterval{b, e}};
}

inline LinkStream random_stream(std::size_t n, std::size_t m, std::int64_t t_max, std::uint64_t seed) {
  generate::RandomParams p;
  p.nodes = n;
  p.links = m;
  p.t_min = 0;
  p.t_max = t_max;
  p.seed = seed;
  return parse_link_stream(generate::random(p));
}

} // namespace dclique::testing
