#include <gtest/gtest.h>

#include <set>

#include "fixtures.hpp"
#include "nestorw/families.hpp"
#include "nestorw/rewrite.hpp"
#include "orders.hpp"

using namespace nestorw;
using namespace fixtures;

namespace {

std::size_t binomial(int n, int k) {
  std::size_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
  return r;
}

std::size_t catalan(int n) { return binomial(2 * n, n) / static_cast<std::size_t>(n + 1); }

orders::Arcs facial_arcs(const OrderedHypergraph& h) {
  FacialOrderReport r = facial_order_report(h);
  orders::Arcs out;
  for (auto [s, t] : r.arcs) out.emplace(r.lattice.constructs[s], r.lattice.constructs[t]);
  return out;
}

}  // namespace

TEST(Families, VertexCounts) {
  for (int d = 0; d <= 4; ++d) {
    std::size_t fact = 1;
    for (int i = 2; i <= d + 1; ++i) fact *= static_cast<std::size_t>(i);
    EXPECT_EQ(enumerate_constructions(generate(FamilyKind::simplex, d)).size(), static_cast<std::size_t>(d + 1));
    EXPECT_EQ(enumerate_constructions(generate(FamilyKind::cube, d)).size(), std::size_t{1} << d);
    EXPECT_EQ(enumerate_constructions(generate(FamilyKind::associahedron, d)).size(), catalan(d + 1));
    EXPECT_EQ(enumerate_constructions(generate(FamilyKind::permutahedron, d)).size(), fact);
    if (d >= 1) {
      EXPECT_EQ(enumerate_constructions(generate(FamilyKind::cyclohedron, d)).size(), binomial(2 * d, d));
    }
  }
  EXPECT_TRUE(generate(FamilyKind::associahedron, 2).same_structure(pent()));
  EXPECT_TRUE(generate(FamilyKind::permutahedron, 2).same_structure(k3()));
  EXPECT_TRUE(generate(FamilyKind::cube, 2).same_structure(square()));
  EXPECT_TRUE(generate(FamilyKind::simplex, 2).same_structure(tri()));
  EXPECT_THROW(generate(FamilyKind::simplex, -1), domain_error);
}

TEST(Families, PlanarTreeAndLineGraph) {
  PlanarTree t = parse_planar_tree("a(z:b(x:c,y:d),u:e)");
  EXPECT_EQ(t.edge_count(), 4u);
  EXPECT_EQ(to_string(t), "a(z:b(x:c,y:d),u:e)");
  EXPECT_EQ(t.edges_preorder(), (std::vector<std::string>{"z", "x", "y", "u"}));
  OrderedHypergraph g = line_graph(t, {"z", "u", "x", "y"});
  OrderedHypergraph expected = OrderedHypergraph::atomized(4, {{1, 2}, {1, 3}, {1, 4}, {3, 4}});
  EXPECT_TRUE(g.same_structure(expected));
  EXPECT_EQ(g.label(2), "u");
  EXPECT_EQ(graph_class(g), GraphClass::clawfree_block);

  EXPECT_THROW(parse_planar_tree("a(x:b,x:c)"), parse_error);
  EXPECT_THROW(parse_planar_tree("a(b"), parse_error);
  EXPECT_THROW(line_graph(parse_planar_tree("a")), domain_error);
  EXPECT_THROW(line_graph(t, {"z", "u"}), domain_error);

  // a path of edges gives a linear graph; a star gives a complete one
  EXPECT_EQ(graph_class(line_graph(parse_planar_tree("a(b(c(d)))"))), GraphClass::linear);
  EXPECT_EQ(graph_class(line_graph(parse_planar_tree("a(b,c,d)"))), GraphClass::complete);
}

TEST(Families, PlanarTreeCounts) {
  for (int k = 0; k <= 6; ++k) EXPECT_EQ(all_planar_trees(k).size(), catalan(k));
  for (const PlanarTree& t : all_planar_trees(4)) {
    EXPECT_EQ(t.edge_count(), 4u);
    OrderedHypergraph g = line_graph(t);
    EXPECT_TRUE(is_connected(g));
    GraphClass c = graph_class(g);
    EXPECT_TRUE(c == GraphClass::linear || c == GraphClass::complete || c == GraphClass::clawfree_block);
  }
}

TEST(Families, GraphClasses) {
  EXPECT_EQ(graph_class(pent()), GraphClass::linear);
  EXPECT_EQ(graph_class(k3()), GraphClass::complete);
  EXPECT_EQ(graph_class(cyc4()), GraphClass::cycle);
  EXPECT_EQ(graph_class(tri()), GraphClass::proper_hypergraph);
  EXPECT_EQ(graph_class(OrderedHypergraph::atomized(3, {{1, 3}, {2, 3}})), GraphClass::clawfree_block);
  EXPECT_EQ(graph_class(OrderedHypergraph::atomized(4, {{1, 2}, {1, 3}, {1, 4}})), GraphClass::other_graph);
  EXPECT_EQ(graph_class(OrderedHypergraph::atomized(4, {{1, 2}, {2, 3}, {3, 4}, {1, 3}, {2, 4}})),
            GraphClass::other_graph);
  EXPECT_EQ(graph_class(OrderedHypergraph::atomized(3, {{1, 2}})), GraphClass::other_graph);
  EXPECT_TRUE(underlying_graph(OrderedHypergraph::atomized(3, {{1, 2}, {2, 3}, {1, 2, 3}})).has_value());
  EXPECT_FALSE(underlying_graph(tri()).has_value());
}

TEST(Families, ContextualExamples) {
  EXPECT_TRUE(is_contextual(pent()).contextual);
  EXPECT_TRUE(is_contextual(k3()).contextual);
  EXPECT_TRUE(is_contextual(square()).contextual);

  ContextualityReport a = is_contextual(h42());
  EXPECT_FALSE(a.contextual);
  ASSERT_TRUE(a.witness.has_value());
  EXPECT_EQ(a.witness->first, VertexSet({1, 2, 3}));
  EXPECT_EQ(a.witness->second, VertexSet({1, 2, 3}));

  ContextualityReport b = is_contextual(cyc4());
  EXPECT_FALSE(b.contextual);
  EXPECT_EQ(b.witness->first, VertexSet({1, 2, 3}));
  EXPECT_FALSE(b.condition1);

  EXPECT_THROW(is_contextual(OrderedHypergraph::atomized(3, {{1, 2}})), validation_error);
}

TEST(Families, ContextualConditionsAgree) {
  for (int n = 1; n <= 4; ++n)
    for (const OrderedHypergraph& h : all_connected(n)) {
      ContextualityReport r = is_contextual(h);
      ASSERT_EQ(r.contextual, r.condition1);
      if (!r.contextual) continue;
      // closed under reconnected restriction to connected subsets
      for_each_nonempty_subset(h.vertices(), [&](VertexSet x) {
        OrderedHypergraph g = reconnected_restrict(h, x).graph;
        ASSERT_TRUE(is_contextual(g).contextual);
      });
    }
}

TEST(Families, FamilyChecks) {
  for (FamilyClass f : {FamilyClass::simplex, FamilyClass::cube, FamilyClass::associahedron,
                        FamilyClass::permutahedron}) {
    FamilyReport r = contextual_family_check(f, 4);
    EXPECT_TRUE(r.pass()) << to_string(f) << ": " << r.first_failure()->witness;
    EXPECT_EQ(r.instances, 5u);
    EXPECT_EQ(r.entries.size(), 15u);
  }
  FamilyReport op = contextual_family_check(FamilyClass::operahedron, 3);
  EXPECT_TRUE(op.pass());
  EXPECT_GT(op.instances, 5u);

  FamilyReport cyc = contextual_family_check(FamilyClass::cyclohedron, 3);
  EXPECT_FALSE(cyc.pass());
  ASSERT_TRUE(cyc.first_failure().has_value());
  EXPECT_EQ(cyc.first_failure()->condition, 1);

  EXPECT_TRUE(contextual_family_check(FamilyClass::graph, 3).pass());
  EXPECT_TRUE(contextual_family_check(FamilyClass::hypergraph, 3).pass());
  EXPECT_THROW(contextual_family_check(FamilyClass::hypergraph, 4), capacity_error);
}

TEST(Families, MembershipModuloSaturation) {
  EXPECT_TRUE(is_member(FamilyClass::associahedron, OrderedHypergraph::atomized(3, {{1, 2}, {2, 3}, {1, 2, 3}})));
  EXPECT_FALSE(is_member(FamilyClass::associahedron, OrderedHypergraph::atomized(3, {{1, 3}, {2, 3}})));
  EXPECT_TRUE(is_member(FamilyClass::operahedron, OrderedHypergraph::atomized(3, {{1, 3}, {2, 3}})));
  EXPECT_TRUE(is_member(FamilyClass::permutahedron, generate(FamilyKind::permutahedron, 0)));
  EXPECT_TRUE(is_member(FamilyClass::cube, square()));
  EXPECT_FALSE(is_member(FamilyClass::cube, pent()));
  EXPECT_FALSE(is_member(FamilyClass::graph, tri()));
  EXPECT_TRUE(is_member(FamilyClass::hypergraph, tri()));
}

TEST(Families, Parenthesization) {
  const auto h = path(3);
  EXPECT_EQ(to_parenthesization(h, parse_and_validate("2(1,3)", h)), "(X0⊗X1)⊗(X2⊗X3)");
  EXPECT_EQ(to_parenthesization(h, parse_and_validate("3(2(1))", h)), "((X0⊗X1)⊗X2)⊗X3");
  EXPECT_EQ(from_parenthesization(h, "X0⊗(X1⊗(X2⊗X3))"), parse_and_validate("1(2(3))", h));
  EXPECT_EQ(to_parenthesization(pent(), parse_and_validate("1(2(3))", pent()), {"X", "Y", "Z", "U"}),
            "X⊗(Y⊗(Z⊗U))");
  EXPECT_THROW(from_parenthesization(h, "X0⊗X1⊗X2⊗X3"), parse_error);
  EXPECT_THROW(from_parenthesization(h, "(X1⊗X0)⊗(X2⊗X3)"), parse_error);
  EXPECT_THROW(to_parenthesization(k3(), parse_and_validate("1(2(3))", k3())), domain_error);
  for (int m = 1; m <= 5; ++m) {
    const auto g = path(m);
    std::set<std::string> words;
    for (const Construction& s : enumerate_constructions(g)) {
      std::string w = to_parenthesization(g, s);
      words.insert(w);
      ASSERT_EQ(from_parenthesization(g, w), s);
    }
    EXPECT_EQ(words.size(), catalan(m));
  }
}

TEST(Families, FacialOrderMatchesClassicalOrders) {
  for (int n = 1; n <= 4; ++n) {
    const auto perm = generate(FamilyKind::permutahedron, n - 1);
    EXPECT_EQ(facial_arcs(perm), orders::partition_order(n)) << n;
    const auto assoc = generate(FamilyKind::associahedron, n - 1);
    EXPECT_EQ(facial_arcs(assoc), orders::tamari_order(n)) << n;
  }
  EXPECT_EQ(orders::ordered_set_partitions(4).size(), 75u);
  EXPECT_EQ(orders::planar_trees(5).size(), 45u);
}

TEST(Families, DisconnectsMatchesReconnectedTripleOnFamilies) {
  std::vector<OrderedHypergraph> corpus;
  for (FamilyKind k : {FamilyKind::simplex, FamilyKind::cube, FamilyKind::associahedron, FamilyKind::permutahedron,
                       FamilyKind::cyclohedron})
    for (int d = 2; d <= 5; ++d) corpus.push_back(generate(k, d));
  for (int k = 3; k <= 6; ++k)
    for (const PlanarTree& t : all_planar_trees(k)) corpus.push_back(line_graph(t));
  for (const OrderedHypergraph& h : corpus) {
    const int n = h.size();
    for (VertexId x = 1; x <= n; ++x)
      for (VertexId y = 1; y <= n; ++y)
        for (VertexId z = y + 1; z <= n; ++z) {
          if (x == y || x == z) continue;
          SubHypergraph r = reconnected_restrict(h, {x, y, z});
          ASSERT_EQ(disconnects(h, x, y, z), decompose(r.graph, r.lower({x})).components.size() == 2);
        }
  }
}

TEST(Families, XFacesOfContextualHypergraphsShareOneShape) {
  std::vector<OrderedHypergraph> corpus;
  for (int n = 3; n <= 4; ++n)
    for (OrderedHypergraph& h : all_connected(n)) corpus.push_back(std::move(h));
  for (FamilyKind k : {FamilyKind::simplex, FamilyKind::cube, FamilyKind::associahedron, FamilyKind::permutahedron})
    corpus.push_back(generate(k, 4));
  for (const PlanarTree& t : all_planar_trees(5)) corpus.push_back(line_graph(t));
  std::size_t checked = 0;
  for (const OrderedHypergraph& h : corpus) {
    if (!is_contextual(h).contextual) continue;
    for (const Construct& t : all_constructs(h)) {
      if (dimension(t) != 2) continue;
      TwoFace f = classify_two_face(h, t);
      if (f.tag == ShapeTag::A) continue;
      ASSERT_TRUE(f.shape->graph.same_structure(reconnected_restrict(h, f.x).graph)) << to_string(t, h);
      ++checked;
    }
  }
  EXPECT_GT(checked, 1000u);
}
