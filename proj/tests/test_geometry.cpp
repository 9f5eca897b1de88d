#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "fixtures.hpp"
#include "minkowski.hpp"
#include "nestorw/geometry.hpp"
#include "nestorw/rewrite.hpp"

using namespace nestorw;
using namespace fixtures;

namespace {

Construct c(const char* text, const OrderedHypergraph& h) { return parse_and_validate(text, h); }

}  // namespace

TEST(Geometry, CoordinateExamples) {
  const auto h = pent();
  EXPECT_EQ(coordinate_vector(h, c("1(2(3))", h)), (CoordinateVector{3, 2, 1}));
  EXPECT_EQ(coordinate_vector(h, c("2(1,3)", h)), (CoordinateVector{1, 4, 1}));
  EXPECT_EQ(coordinate_vector(h, c("3(2(1))", h)), (CoordinateVector{1, 2, 3}));
  EXPECT_THROW(coordinate_vector(h, c("{1,2}(3)", h)), domain_error);
}

TEST(Geometry, VertexMapExamples) {
  auto p = postnikov_vertex_map(pent());
  ASSERT_EQ(p.size(), 5u);
  for (const auto& v : p) EXPECT_EQ(std::accumulate(v.coordinates.begin(), v.coordinates.end(), 0LL), 6);
  auto t = postnikov_vertex_map(tri());
  ASSERT_EQ(t.size(), 3u);
  for (const auto& v : t) EXPECT_EQ(std::accumulate(v.coordinates.begin(), v.coordinates.end(), 0LL), 4);
}

TEST(Geometry, EdgeDifferenceExamples) {
  const auto h = pent();
  for (const RewriteStep& st : flip_digraph(h, FlipOrientation::promote_smaller).steps) {
    EdgeDifference d = edge_difference(h, st);
    if (st.source == c("2(1,3)", h)) {
      EXPECT_EQ(st.target, c("1(2(3))", h));
      EXPECT_EQ(d.lambda, 2);
      EXPECT_EQ(d.difference, (CoordinateVector{-2, 2, 0}));
    }
    if (st.source == c("3(2(1))", h) && st.target == c("3(1(2))", h)) {
      EXPECT_EQ(d.lambda, 1);
      EXPECT_EQ(d.difference, (CoordinateVector{-1, 1, 0}));
    }
  }
}

TEST(Geometry, OrientationVectorExamples) {
  EXPECT_TRUE(is_orientation_vector(pent(), {3, 2, 1}).ok);
  OrientationCheck flat = is_orientation_vector(pent(), {1, 1, 1});
  EXPECT_FALSE(flat.ok);
  EXPECT_TRUE(flat.offending.has_value());
  EXPECT_TRUE(is_orientation_vector(complete(4), {5, -2, 7, 0}).ok);
  EXPECT_FALSE(is_orientation_vector(complete(4), {5, -2, 7, 5}).ok);
  EXPECT_THROW(is_orientation_vector(pent(), {1, 2}), domain_error);
}

TEST(Geometry, MonotoneAlongEveryEdge) {
  for (int n = 2; n <= 4; ++n)
    for (const OrderedHypergraph& h : all_connected(n)) {
      std::vector<std::int64_t> dec(static_cast<std::size_t>(n)), inc(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) {
        dec[static_cast<std::size_t>(i)] = 3 * (n - i) + (i % 2);
        inc[static_cast<std::size_t>(i)] = i * i + 1;
      }
      TerminationVerdict a = check_termination(h, FlipOrientation::promote_smaller, dec);
      TerminationVerdict b = check_termination(h, FlipOrientation::promote_larger, inc);
      ASSERT_TRUE(a.ok && a.sign == 1);
      ASSERT_TRUE(b.ok && b.sign == 1);
    }
}

TEST(Geometry, VerticesOfMinkowskiSum) {
  for (int n = 1; n <= 4; ++n)
    for (const OrderedHypergraph& h : all_connected(n)) {
      std::set<CoordinateVector> ours;
      for (const auto& v : postnikov_vertex_map(h)) ours.insert(v.coordinates);
      ASSERT_EQ(ours, minkowski::vertices(h));
    }
}
