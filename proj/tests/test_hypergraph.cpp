#include <gtest/gtest.h>

#include <thread>

#include "fixtures.hpp"
#include "nestorw/hypergraph.hpp"

using namespace nestorw;
using namespace fixtures;

namespace {

// Connectivity straight from the partition definition: no split X = A + B with every edge inside A or B.
bool connected_by_partition(const OrderedHypergraph& h, VertexSet x) {
  bool split = false;
  for_each_nonempty_subset(x, [&](VertexSet a) {
    if (split || a == x) return;
    VertexSet b = x - a;
    bool ok = true;
    for (VertexSet e : h.edges())
      if (e.subset_of(x) && !e.subset_of(a) && !e.subset_of(b)) ok = false;
    if (ok) split = true;
  });
  return !split;
}

std::vector<VertexSet> edges_of(const OrderedHypergraph& h) { return h.edges(); }

}  // namespace

TEST(Hypergraph, RejectsNonAtomic) {
  EXPECT_THROW(OrderedHypergraph(3, {{1}, {2}, {1, 2, 3}}), validation_error);
  OrderedHypergraph h = OrderedHypergraph::atomized(3, {{1, 2, 3}});
  EXPECT_EQ(h.edges().size(), 4u);
}

TEST(Hypergraph, CanonicalStorage) {
  OrderedHypergraph a(3, {{2, 3}, {1}, {3}, {2}, {1, 2}, {2, 3}});
  EXPECT_EQ(a.edges(), (std::vector<VertexSet>{{1}, {1, 2}, {2}, {2, 3}, {3}}));
  EXPECT_TRUE(a.same_structure(pent()));
}

TEST(Hypergraph, OutOfRangeEdge) { EXPECT_THROW(OrderedHypergraph(2, {{1}, {2}, {1, 3}}), domain_error); }

TEST(Hypergraph, IsConnectedExamples) {
  EXPECT_TRUE(is_connected(pent(), {1, 2, 3}));
  EXPECT_FALSE(is_connected(pent(), {1, 3}));
  EXPECT_FALSE(is_connected(tri(), {1, 2}));
  EXPECT_THROW(is_connected(pent(), VertexSet{}), domain_error);
}

TEST(Hypergraph, DecomposeExamples) {
  EXPECT_EQ(decompose(pent(), {2}).components, (std::vector<VertexSet>{{1}, {3}}));
  EXPECT_EQ(decompose(pent(), {1}).components, (std::vector<VertexSet>{{2, 3}}));
  EXPECT_TRUE(decompose(pent(), {1, 2, 3}).components.empty());
}

TEST(Hypergraph, ComponentsOrderedByMax) {
  // edges 1-4, 2-3, 3-5; removing 3 leaves {1,4}, {2}, {5}
  OrderedHypergraph h(5, {{1}, {2}, {3}, {4}, {5}, {1, 4}, {2, 3}, {3, 5}});
  EXPECT_EQ(decompose(h, {3}).components, (std::vector<VertexSet>{{2}, {1, 4}, {5}}));
}

TEST(Hypergraph, RestrictPlainExamples) {
  EXPECT_EQ(edges_of(restrict_plain(pent(), {1, 2}).graph), (std::vector<VertexSet>{{1}, {1, 2}, {2}}));
  EXPECT_EQ(edges_of(restrict_plain(tri(), {1, 2}).graph), (std::vector<VertexSet>{{1}, {2}}));
  EXPECT_EQ(restrict_plain(pent(), {1, 2, 3}).graph, pent());
  EXPECT_THROW(restrict_plain(pent(), VertexSet{}), domain_error);
  SubHypergraph s = restrict_plain(pent(), {2, 3});
  EXPECT_EQ(s.parent_vertex, (std::vector<VertexId>{2, 3}));
  EXPECT_EQ(s.lift({1}), VertexSet({2}));
  EXPECT_EQ(s.lower({3}), VertexSet({2}));
}

TEST(Hypergraph, SaturateExamples) {
  EXPECT_EQ(edges_of(saturate(pent())), (std::vector<VertexSet>{{1}, {1, 2}, {1, 2, 3}, {2}, {2, 3}, {3}}));
  EXPECT_EQ(edges_of(saturate(tri())), (std::vector<VertexSet>{{1}, {1, 2, 3}, {2}, {3}}));
  EXPECT_EQ(saturate(saturate(pent())), saturate(pent()));
}

TEST(Hypergraph, ReconnectedRestrictExamples) {
  EXPECT_EQ(edges_of(reconnected_restrict(pent(), {1, 3}).graph), (std::vector<VertexSet>{{1}, {1, 2}, {2}}));
  SubHypergraph q = reconnected_restrict(h42(), {1, 2, 3});
  EXPECT_EQ(edges_of(q.graph), (std::vector<VertexSet>{{1}, {1, 2, 3}, {1, 3}, {2}, {3}}));
  EXPECT_EQ(q.graph.labels(), (std::vector<std::string>{"x", "y", "z"}));
  EXPECT_EQ(reconnected_restrict(pent(), {1, 2, 3}).graph, saturate(pent()));
}

TEST(Hypergraph, DisconnectsExamples) {
  EXPECT_TRUE(disconnects(pent(), 2, 1, 3));
  EXPECT_FALSE(disconnects(pent(), 1, 2, 3));
  EXPECT_FALSE(disconnects(cyc4(), 2, 1, 3));
  EXPECT_THROW(disconnects(pent(), 1, 1, 3), domain_error);
}

TEST(Hypergraph, ConnectivityMatchesPartitionOracle) {
  for (int n = 1; n <= 4; ++n)
    for (const OrderedHypergraph& h : all_connected(n))
      for_each_nonempty_subset(h.vertices(),
                               [&](VertexSet x) { ASSERT_EQ(is_connected(h, x), connected_by_partition(h, x)); });
}

TEST(Hypergraph, ComponentsAreMaximalAndConnected) {
  for (const OrderedHypergraph& h : all_connected(4)) {
    for_each_nonempty_subset(h.vertices(), [&](VertexSet x) {
      VertexSet rest = h.vertices() - x;
      VertexSet seen;
      VertexId last = 0;
      for (VertexSet c : decompose(h, x).components) {
        ASSERT_TRUE(is_connected(h, c));
        ASSERT_FALSE(c.intersects(seen));
        ASSERT_GT(c.max(), last);
        last = c.max();
        seen |= c;
        for (VertexId v : (rest - c).elements()) ASSERT_FALSE(is_connected(h, c | VertexSet::singleton(v)));
      }
      ASSERT_EQ(seen, rest);
    });
  }
}

TEST(Hypergraph, SaturationMonotoneUnderEdgeAddition) {
  const auto all = all_connected(3);
  for (const OrderedHypergraph& a : all)
    for (const OrderedHypergraph& b : all) {
      bool sub = std::includes(b.edges().begin(), b.edges().end(), a.edges().begin(), a.edges().end(), LexLess{});
      if (!sub) continue;
      for (VertexSet z : a.saturation()) ASSERT_TRUE(b.in_saturation(z));
    }
}

TEST(Hypergraph, DisconnectsMatchesReconnectedTriple) {
  for (int n = 3; n <= 4; ++n)
    for (const OrderedHypergraph& h : all_connected(n))
      for (VertexId x = 1; x <= n; ++x)
        for (VertexId y = 1; y <= n; ++y)
          for (VertexId z = 1; z <= n; ++z) {
            if (x == y || y == z || x == z) continue;
            SubHypergraph r = reconnected_restrict(h, {x, y, z});
            bool split = decompose(r.graph, r.lower({x})).components.size() == 2;
            ASSERT_EQ(disconnects(h, x, y, z), split);
          }
}

TEST(Hypergraph, RestrictionsStayAtomic) {
  for (const OrderedHypergraph& h : all_connected(4))
    for_each_nonempty_subset(h.vertices(), [&](VertexSet x) {
      // construction would throw otherwise
      ASSERT_EQ(restrict_plain(h, x).graph.size(), x.size());
      ASSERT_EQ(reconnected_restrict(h, x).graph.size(), x.size());
    });
}

TEST(Hypergraph, SaturationIsThreadSafe) {
  OrderedHypergraph h = complete(10);
  std::vector<std::thread> workers;
  std::vector<std::size_t> sizes(8);
  for (std::size_t i = 0; i < sizes.size(); ++i)
    workers.emplace_back([&, i] { sizes[i] = h.saturation().size(); });
  for (auto& w : workers) w.join();
  for (std::size_t s : sizes) EXPECT_EQ(s, 1023u);
}

TEST(Hypergraph, CapacityIsEnforced) {
  EXPECT_THROW(require_capacity(17, default_cap), capacity_error);
  EXPECT_NO_THROW(require_capacity(16, default_cap));
}
