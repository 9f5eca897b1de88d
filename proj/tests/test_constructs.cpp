#include <gtest/gtest.h>

#include <set>

#include "fixtures.hpp"
#include "nestorw/construct.hpp"

using namespace nestorw;
using namespace fixtures;

namespace {

std::set<std::string> strings(const std::vector<Construct>& ts, const OrderedHypergraph& h) {
  std::set<std::string> out;
  for (const Construct& t : ts) out.insert(to_string(t, h));
  return out;
}

Construct top(const OrderedHypergraph& h) { return Construct{h.vertices(), {}}; }

}  // namespace

TEST(Constructs, ValidateExamples) {
  const auto h = pent();
  EXPECT_EQ(to_string(parse_and_validate("2(3,1)", h), h), "2(1,3)");
  EXPECT_EQ(to_string(parse_and_validate("{3,1}(2)", h), h), "{1,3}(2)");
  EXPECT_THROW(parse_and_validate("1(2,3)", h), validation_error);
  EXPECT_THROW(parse_and_validate("1(2(2))", h), validation_error);
  EXPECT_THROW(parse_and_validate("1({2,3})(", h), parse_error);
  EXPECT_THROW(parse_and_validate("7", h), parse_error);
  EXPECT_THROW(validate(h, Construct{{}, {}}), validation_error);
}

TEST(Constructs, EnumerationCounts) {
  EXPECT_EQ(all_constructs(pent()).size(), 11u);
  EXPECT_EQ(all_constructs(tri()).size(), 7u);
  EXPECT_EQ(all_constructs(k3()).size(), 13u);
  EXPECT_EQ(f_vector(pent()), (std::vector<std::size_t>{5, 5, 1}));
  EXPECT_EQ(f_vector(tri()), (std::vector<std::size_t>{3, 3, 1}));
  EXPECT_EQ(f_vector(square()), (std::vector<std::size_t>{4, 4, 1}));
}

TEST(Constructs, PentagonVertices) {
  const auto h = pent();
  EXPECT_EQ(strings(enumerate_constructions(h), h),
            (std::set<std::string>{"1(2(3))", "1(3(2))", "2(1,3)", "3(1(2))", "3(2(1))"}));
}

TEST(Constructs, CatalanAndFactorial) {
  const std::size_t catalan[] = {1, 1, 2, 5, 14, 42, 132};
  for (int m = 1; m <= 6; ++m) EXPECT_EQ(enumerate_constructions(path(m)).size(), catalan[m]);
  std::size_t fact = 1;
  for (int m = 1; m <= 5; ++m) {
    fact *= static_cast<std::size_t>(m);
    EXPECT_EQ(enumerate_constructions(complete(m)).size(), fact);
  }
}

TEST(Constructs, Dimension) {
  const auto h = pent();
  EXPECT_EQ(dimension(top(h)), 2);
  EXPECT_EQ(dimension(parse_and_validate("2(1,3)", h)), 0);
  EXPECT_EQ(dimension(parse_and_validate("{1,2}(3)", h)), 1);
  EXPECT_TRUE(parse_and_validate("2(1,3)", h).is_construction());
}

TEST(Constructs, ContractionExamples) {
  const auto h = pent();
  std::set<std::string> got;
  for (const Contraction& c : contractions(parse_and_validate("1(2(3))", h))) got.insert(to_string(c.result, h));
  EXPECT_EQ(got, (std::set<std::string>{"{1,2}(3)", "1({2,3})"}));
  auto one = contractions(parse_and_validate("{1,2}(3)", h));
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].result, top(h));
  EXPECT_TRUE(contractions(top(h)).empty());
}

TEST(Constructs, ExpansionExamples) {
  const auto h = pent();
  std::vector<Construct> below;
  for (const Expansion& e : expansions(h, top(h))) below.push_back(e.result);
  std::vector<Construct> dim1;
  for (const Construct& t : all_constructs(h))
    if (dimension(t) == 1) dim1.push_back(t);
  EXPECT_EQ(strings(below, h), strings(dim1, h));
  EXPECT_EQ(below.size(), 5u);
  EXPECT_TRUE(expansions(h, parse_and_validate("2(1,3)", h)).empty());
}

TEST(Constructs, ExpansionsDualToContractions) {
  for (int n = 1; n <= 4; ++n)
    for (const OrderedHypergraph& h : all_connected(n)) {
      FaceLattice lat = enumerate_constructs(h);
      std::set<std::pair<std::size_t, std::size_t>> up(lat.covers.begin(), lat.covers.end()), down;
      for (std::size_t i = 0; i < lat.constructs.size(); ++i)
        for (const Expansion& e : expansions(h, lat.constructs[i])) {
          ASSERT_EQ(validate(h, e.result), e.result);
          down.emplace(lat.index_of(e.result), i);
        }
      ASSERT_EQ(up, down);
    }
}

TEST(Constructs, LatticeIsGraded) {
  for (int n = 1; n <= 4; ++n)
    for (const OrderedHypergraph& h : all_connected(n)) {
      FaceLattice lat = enumerate_constructs(h);
      ASSERT_EQ(lat.constructs[lat.top()], top(h));
      std::vector<bool> has_lower(lat.constructs.size(), false), has_upper(lat.constructs.size(), false);
      for (auto [lo, hi] : lat.covers) {
        ASSERT_EQ(dimension(lat.constructs[lo]) + 1, dimension(lat.constructs[hi]));
        has_lower[hi] = has_upper[lo] = true;
      }
      for (std::size_t i = 0; i < lat.constructs.size(); ++i) {
        ASSERT_EQ(!has_lower[i], lat.constructs[i].is_construction());
        ASSERT_EQ(!has_upper[i], i == lat.top());
      }
    }
}

TEST(Constructs, EnumerationEqualsExpansionClosure) {
  for (int n = 1; n <= 4; ++n)
    for (const OrderedHypergraph& h : all_connected(n)) {
      std::set<Construct> seen{top(h)};
      std::vector<Construct> frontier{top(h)};
      while (!frontier.empty()) {
        Construct t = frontier.back();
        frontier.pop_back();
        for (const Expansion& e : expansions(h, t))
          if (seen.insert(e.result).second) frontier.push_back(e.result);
      }
      auto all = all_constructs(h);
      ASSERT_EQ(std::set<Construct>(all.begin(), all.end()), seen);
      ASSERT_EQ(all.size(), seen.size());
    }
}

TEST(Constructs, PrintParseRoundTrip) {
  for (const OrderedHypergraph& h : {pent(), h42(), cyc4(), complete(4), path(5)})
    for (const Construct& t : all_constructs(h)) ASSERT_EQ(parse_and_validate(to_string(t, h), h), t);
}

TEST(Constructs, SubconstructIsConstructOfItsSupport) {
  for (const OrderedHypergraph& h : all_connected(4))
    for (const Construct& t : all_constructs(h))
      for (const NodePath& p : node_paths(t)) {
        const Construct& occ = node_at(t, p);
        SubHypergraph sub = restrict_plain(h, occ.support());
        auto lower = [&](auto&& self, const Construct& c) -> Construct {
          Construct out{sub.lower(c.decoration), {}};
          for (const Construct& ch : c.children) out.children.push_back(self(self, ch));
          return out;
        };
        ASSERT_NO_THROW(validate(sub.graph, lower(lower, occ)));
      }
}

TEST(Constructs, SubfaceRelation) {
  const auto h = pent();
  EXPECT_TRUE(is_subface(parse_and_validate("2(1,3)", h), top(h)));
  EXPECT_TRUE(is_subface(parse_and_validate("2(1,3)", h), parse_and_validate("{1,2}(3)", h)));
  EXPECT_FALSE(is_subface(parse_and_validate("1(2(3))", h), parse_and_validate("{1,3}(2)", h)));
}

TEST(Constructs, CapacityError) { EXPECT_THROW(all_constructs(path(5), 4), capacity_error); }
