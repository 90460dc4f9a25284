#ifndef DCLIQUE_GENERATE_HPP
#define DCLIQUE_GENERATE_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "dclique/types.hpp"

// Synthetic streams in the text input format. chain and burst realize the two
// worst cases of the search: O(m^2) distinct intervals on a single pair, and
// every node subset at a single instant.

namespace dclique::generate {

struct ChainParams {
  std::size_t pairs = 1;
  std::size_t links = 3;
  std::int64_t spacing = 1;
};

/// `pairs` disjoint pairs (u<i>, v<i>), each linked at 0, spacing, 2*spacing, ...
inline std::string chain(const ChainParams &p) {
  if (p.pairs == 0 || p.links == 0)
    throw std::invalid_argument("chain needs at least one pair and one link");
  if (p.spacing <= 0)
    throw std::invalid_argument("chain spacing must be positive");
  std::ostringstream out;
  for (std::size_t k = 0; k < p.links; ++k)
    for (std::size_t i = 0; i < p.pairs; ++i)
      out << static_cast<std::int64_t>(k) * p.spacing << " u" << i << " v" << i << '\n';
  return out.str();
}

/// Every pair among n nodes linked once at t = 0.
inline std::string burst(std::size_t n) {
  if (n < 2)
    throw std::invalid_argument("burst needs at least two nodes");
  std::ostringstream out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      out << "0 n" << i << " n" << j << '\n';
  return out.str();
}

struct RandomParams {
  std::size_t nodes = 5;
  std::size_t links = 10;
  std::int64_t t_min = 0;
  std::int64_t t_max = 20;
  std::uint64_t seed = 1;
};

/// Exactly `links` distinct links touching all `nodes` nodes, times uniform in
/// [t_min, t_max]. A random perfect-ish matching covers every node first; the
/// rest are uniform draws with rejection of duplicates.
inline std::string random(const RandomParams &p) {
  if (p.nodes < 2)
    throw std::invalid_argument("random stream needs at least two nodes");
  if (p.t_max < p.t_min)
    throw std::invalid_argument("random stream time range is empty");
  const std::size_t cover = (p.nodes + 1) / 2;
  const long double capacity = static_cast<long double>(p.nodes) * (p.nodes - 1) / 2 *
                               (static_cast<long double>(p.t_max - p.t_min) + 1);
  if (p.links < cover)
    throw std::invalid_argument("random stream needs at least " + std::to_string(cover) + " links to cover " +
                                std::to_string(p.nodes) + " nodes");
  if (static_cast<long double>(p.links) > capacity)
    throw std::invalid_argument("more links requested than distinct (t, u, v) triples exist");

  std::mt19937_64 rng(p.seed);
  std::uniform_int_distribution<std::int64_t> time(p.t_min, p.t_max);
  std::uniform_int_distribution<std::size_t> node(0, p.nodes - 1);

  std::set<std::tuple<std::int64_t, std::size_t, std::size_t>> links;
  std::vector<std::tuple<std::int64_t, std::size_t, std::size_t>> ordered;
  auto add = [&](std::int64_t t, std::size_t u, std::size_t v) {
    if (u > v)
      std::swap(u, v);
    if (links.emplace(t, u, v).second)
      ordered.emplace_back(t, u, v);
  };

  std::vector<std::size_t> perm(p.nodes);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  for (std::size_t i = 0; i + 1 < p.nodes; i += 2)
    add(time(rng), perm[i], perm[i + 1]);
  if (p.nodes % 2 == 1) {
    std::size_t partner = perm[std::uniform_int_distribution<std::size_t>(0, p.nodes - 2)(rng)];
    add(time(rng), perm.back(), partner);
  }
  while (ordered.size() < p.links) {
    std::size_t u = node(rng), v = node(rng);
    if (u != v)
      add(time(rng), u, v);
  }

  std::ostringstream out;
  for (auto [t, u, v] : ordered)
    out << t << " n" << u << " n" << v << '\n';
  return out.str();
}

} // namespace dclique::generate

#endif // DCLIQUE_GENERATE_HPP
