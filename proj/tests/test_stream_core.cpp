#include <gtest/gtest.h>

#include <random>

#include "dclique/dclique.hpp"
#include "support/fixtures.hpp"
#include "support/tau_scan.hpp"

using namespace dclique;
using namespace dclique::testing;

TEST(Parse, ExampleStream) {
  LinkStream s = example_stream();
  EXPECT_EQ(s.node_count(), 3u);
  EXPECT_EQ(s.link_count(), 4u);
  NodeId a = *s.find("a"), b = *s.find("b");
  auto tl = s.timeline(a, b);
  EXPECT_EQ(std::vector<Timestamp>(tl.begin(), tl.end()), (std::vector<Timestamp>{3, 6}));
}

TEST(Parse, IdsFollowFirstAppearance) {
  LinkStream s = parse_link_stream("1 z y\n2 x z\n");
  EXPECT_EQ(*s.find("z"), 0u);
  EXPECT_EQ(*s.find("y"), 1u);
  EXPECT_EQ(*s.find("x"), 2u);
  EXPECT_EQ(s.label(2), "x");
}

TEST(Parse, ReversedDuplicateCollapses) {
  LinkStream s = parse_link_stream("3 a b\n3 b a\n");
  EXPECT_EQ(s.link_count(), 1u);
  EXPECT_EQ(s.collapsed_duplicates(), 1u);
}

TEST(Parse, SelfLoopRejectedWithLine) {
  try {
    parse_link_stream("5 x x\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError &e) {
    EXPECT_EQ(e.line(), 1u);
  }
  try {
    parse_link_stream("# header\n1 a b\n5 x x\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError &e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(Parse, Errors) {
  EXPECT_THROW(parse_link_stream(""), ParseError);
  EXPECT_THROW(parse_link_stream("# only a comment\n"), ParseError);
  EXPECT_THROW(parse_link_stream("1 a\n"), ParseError);
  EXPECT_THROW(parse_link_stream("x a b\n"), ParseError);
  EXPECT_THROW(parse_link_stream("1.5 a b\n"), ParseError);
  EXPECT_THROW(parse_link_stream("1e3 a b\n"), ParseError);
}

TEST(Parse, TimeScale) {
  ParseOptions opts;
  opts.time_scale = 10;
  LinkStream s = parse_link_stream("1.5 a b\n-0.2 b c\n3 a c\n", opts);
  EXPECT_EQ(s.t_min(), -2);
  EXPECT_EQ(s.t_max(), 30);
  auto tl = s.timeline(*s.find("a"), *s.find("b"));
  EXPECT_EQ(tl.front(), 15);

  opts.time_scale = 4;
  EXPECT_THROW(parse_link_stream("1.3 a b\n", opts), ParseError);
  EXPECT_EQ(parse_link_stream("1.25 a b\n", opts).t_min(), 5);
}

TEST(Parse, ClassColumnsAndComments) {
  LinkStream s = parse_link_stream("# t i j Ci Cj\n20\t1\t2\tMP\tPC\n40\t2\t3\tPC\tPC\textra\n");
  EXPECT_EQ(s.class_of(*s.find("1")), "MP");
  EXPECT_EQ(s.class_of(*s.find("2")), "PC");
  EXPECT_EQ(s.class_of(*s.find("3")), "PC");
  LinkStream plain = parse_link_stream("1 a b extra\n");
  EXPECT_FALSE(plain.class_of(0).has_value());
}

TEST(Parse, ExplicitSpanMustContainLinks) {
  ParseOptions opts;
  opts.explicit_span = TimeInterval{4, 9};
  EXPECT_THROW(parse_link_stream(kExampleText, opts), ParseError);
}

TEST(EffectiveSpan, Examples) {
  LinkStream s = example_stream();
  EXPECT_EQ(effective_span(s, Duration{3}), (TimeInterval{0, 9}));
  EXPECT_EQ(effective_span(s, Duration{1}), (TimeInterval{2, 7}));
  LinkStream pinned = example_stream(TimeInterval{0, 9});
  EXPECT_EQ(effective_span(pinned, Duration{1}), (TimeInterval{0, 9}));
}

TEST(Occurrence, FirstAndLast) {
  LinkStream s = example_stream();
  NodeId a = *s.find("a"), b = *s.find("b");
  EXPECT_EQ(first_occurrence(s, a, b, 0), 3);
  EXPECT_EQ(first_occurrence(s, a, b, 4), 6);
  EXPECT_EQ(first_occurrence(s, b, a, 7), std::nullopt);
  EXPECT_EQ(last_occurrence(s, a, b, 9), 6);
  EXPECT_EQ(last_occurrence(s, a, b, 5), 3);
  EXPECT_EQ(last_occurrence(s, b, a, 2), std::nullopt);
}

TEST(Occurrence, UnknownPairIsAbsent) {
  LinkStream s = parse_link_stream("1 a b\n2 c d\n");
  EXPECT_EQ(first_occurrence(s, *s.find("a"), *s.find("c"), 0), std::nullopt);
  EXPECT_EQ(last_occurrence(s, *s.find("a"), *s.find("c"), 9), std::nullopt);
}

TEST(Occurrence, AgreesWithLinearScan) {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 50; ++round) {
    LinkStream s = random_stream(5, 14, 30, round + 1);
    for (NodeId u = 0; u < s.node_count(); ++u)
      for (NodeId v = u + 1; v < s.node_count(); ++v)
        for (Timestamp t = -2; t <= 32; ++t) {
          std::optional<Timestamp> first, last;
          for (Timestamp x : s.timeline(u, v)) {
            if (x >= t && !first)
              first = x;
            if (x <= t)
              last = x;
          }
          ASSERT_EQ(first_occurrence(s, u, v, t), first);
          ASSERT_EQ(last_occurrence(s, u, v, t), last);
        }
  }
}

TEST(PairCovers, Examples) {
  LinkStream s = example_stream();
  NodeId a = *s.find("a"), b = *s.find("b"), c = *s.find("c");
  EXPECT_FALSE(pair_covers(s, a, c, {1, 4}, Duration{3}));
  EXPECT_TRUE(pair_covers(s, a, b, {6, 6}, Duration{3}));
  EXPECT_FALSE(pair_covers(s, a, b, {1, 8}, Duration{2}));
  EXPECT_FALSE(pair_covers_by_tau_scan(s, a, b, {1, 8}, Duration{2}));
}

TEST(PairCovers, ZeroDelta) {
  LinkStream s = example_stream();
  NodeId a = *s.find("a"), b = *s.find("b");
  EXPECT_TRUE(pair_covers(s, a, b, {3, 3}, Duration{0}));
  EXPECT_FALSE(pair_covers(s, a, b, {4, 4}, Duration{0}));
  EXPECT_FALSE(pair_covers(s, a, b, {3, 4}, Duration{0}));
}

TEST(PairCovers, GapExactlyDeltaIsCovered) {
  LinkStream s = parse_link_stream("0 a b\n5 a b\n");
  EXPECT_TRUE(pair_covers(s, 0, 1, {-5, 10}, Duration{5}));
  EXPECT_FALSE(pair_covers(s, 0, 1, {-5, 10}, Duration{4}));
  EXPECT_FALSE(pair_covers(s, 0, 1, {-6, 10}, Duration{5}));
}

TEST(PairCovers, MatchesTauScan) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    LinkStream s = random_stream(4, 12, 15, seed);
    for (std::int64_t d = 0; d <= 5; ++d)
      for (NodeId u = 0; u < s.node_count(); ++u)
        for (NodeId v = u + 1; v < s.node_count(); ++v)
          for (Timestamp b = -3; b <= 18; ++b)
            for (Timestamp e = b; e <= 18; ++e) {
              TimeInterval iv{b, e};
              ASSERT_EQ(pair_covers(s, u, v, iv, Duration{d}), pair_covers_by_tau_scan(s, u, v, iv, Duration{d}))
                  << "seed " << seed << " pair " << u << "," << v << " [" << b << "," << e << "] d=" << d;
            }
  }
}

TEST(PairCovers, SymmetricAndMonotoneInDelta) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    LinkStream s = random_stream(4, 10, 15, seed);
    for (NodeId u = 0; u < s.node_count(); ++u)
      for (NodeId v = u + 1; v < s.node_count(); ++v)
        for (Timestamp b = -2; b <= 16; b += 2)
          for (Timestamp e = b; e <= 17; ++e)
            for (std::int64_t d = 0; d <= 6; ++d) {
              bool here = pair_covers(s, u, v, {b, e}, Duration{d});
              ASSERT_EQ(here, pair_covers(s, v, u, {b, e}, Duration{d}));
              if (here) {
                ASSERT_TRUE(pair_covers(s, u, v, {b, e}, Duration{d + 1}));
              }
            }
  }
}

TEST(IsDeltaClique, ExampleStream) {
  LinkStream s = example_stream();
  EXPECT_TRUE(is_delta_clique(s, clique(s, {"a", "b", "c"}, 2, 7), Duration{3}));
  EXPECT_FALSE(is_delta_clique(s, clique(s, {"a", "b", "c"}, 1, 7), Duration{3}));
  EXPECT_TRUE(is_delta_clique(s, clique(s, {"a", "b"}, 1, 9), Duration{3}));
  EXPECT_FALSE(is_delta_clique(s, clique(s, {"a"}, 3, 3), Duration{3}));
}

// Sub-intervals inherit the clique property only when they are at least Δ long;
// shorter ones can fall between two links.
TEST(IsDeltaClique, SubIntervalMonotonicity) {
  LinkStream ex = example_stream();
  EXPECT_TRUE(is_delta_clique(ex, clique(ex, {"a", "b"}, 0, 9), Duration{3}));
  EXPECT_FALSE(is_delta_clique(ex, clique(ex, {"a", "b"}, 4, 5), Duration{3}));

  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    LinkStream s = random_stream(4, 10, 12, seed);
    for (std::int64_t d = 1; d <= 4; ++d) {
      const Duration delta{d};
      NodeSet all{0, 1, 2, 3};
      for (unsigned mask = 3; mask < 16; ++mask) {
        if (std::popcount(mask) < 2)
          continue;
        NodeSet xs;
        for (NodeId u : all)
          if (mask >> u & 1)
            xs.push_back(u);
        for (Timestamp b = -4; b <= 16; ++b)
          for (Timestamp e = b; e <= 16; ++e) {
            if (!is_delta_clique(s, DeltaClique{xs, b, e}, delta))
              continue;
            for (Timestamp b2 = b; b2 <= e; ++b2)
              for (Timestamp e2 = b2 + d; e2 <= e; ++e2)
                ASSERT_TRUE(is_delta_clique(s, DeltaClique{xs, b2, e2}, delta));
          }
      }
    }
  }
}

TEST(InducedGraph, Examples) {
  StaticGraph g = induced_graph(example_stream());
  EXPECT_EQ(g.vertex_count(), 3u);
  EXPECT_EQ(g.edge_count(), 3u);
  EXPECT_TRUE(g.is_clique(std::vector<NodeId>{0, 1, 2}));

  StaticGraph single = induced_graph(parse_link_stream("0 a b\n"));
  EXPECT_EQ(single.edge_count(), 1u);

  StaticGraph path = induced_graph(parse_link_stream("0 a b\n1 b c\n2 a b\n"));
  EXPECT_EQ(path.edge_count(), 2u);
  EXPECT_FALSE(path.adjacent(0, 2));
}

TEST(SpanBounds, Examples) {
  LinkStream s = example_stream();
  EXPECT_EQ(span_bounds(s, clique(s, {"a", "b", "c"}, 2, 7)), std::make_pair(Timestamp{3}, Timestamp{6}));
  EXPECT_EQ(span_bounds(s, clique(s, {"a", "b"}, 0, 9)), std::make_pair(Timestamp{3}, Timestamp{6}));
  EXPECT_EQ(span_bounds(s, clique(s, {"b", "c"}, 1, 7)), std::make_pair(Timestamp{4}, Timestamp{4}));
}

TEST(Duration, RejectsNegative) { EXPECT_THROW(Duration{-1}, std::invalid_argument); }
