#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "nestorw/construct.hpp"
#include "nestorw/errors.hpp"
#include "nestorw/flip.hpp"
#include "nestorw/hypergraph.hpp"

namespace nestorw {

// Indexed by vertex id minus one.
using CoordinateVector = std::vector<std::int64_t>;

/// v^S_x = |{e in Sat : x in e, e inside supp(occ_S(x))}|.
inline CoordinateVector coordinate_vector(const OrderedHypergraph& h, const Construction& s) {
  CoordinateVector v(static_cast<std::size_t>(h.size()), 0);
  for (const NodePath& p : node_paths(s)) {
    const Construct& node = node_at(s, p);
    if (node.decoration.size() != 1) throw domain_error("coordinate vectors are defined on constructions");
    const VertexId x = node.decoration.min();
    const VertexSet k = node.support();
    std::int64_t count = 0;
    for (VertexSet e : h.saturation())
      if (e.contains(x) && e.subset_of(k)) ++count;
    v.at(static_cast<std::size_t>(x - 1)) = count;
  }
  return v;
}

inline std::int64_t dot(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  if (a.size() != b.size()) throw domain_error("vector length mismatch");
  return std::inner_product(a.begin(), a.end(), b.begin(), std::int64_t{0});
}

struct VertexCoordinates {
  Construction construction;
  CoordinateVector coordinates;
};

/// The map S -> v^S over all constructions; checked injective with constant entry sum |Sat|.
inline std::vector<VertexCoordinates> postnikov_vertex_map(const OrderedHypergraph& h, int cap = default_cap) {
  std::vector<VertexCoordinates> out;
  std::map<CoordinateVector, std::size_t> seen;
  const auto total = static_cast<std::int64_t>(h.saturation().size());
  for (Construction& s : enumerate_constructions(h, cap)) {
    CoordinateVector v = coordinate_vector(h, s);
    check_invariant(std::accumulate(v.begin(), v.end(), std::int64_t{0}) == total,
                    "coordinate vector does not sum to |Sat|");
    check_invariant(seen.emplace(v, out.size()).second, "coordinate map is not injective");
    out.push_back({std::move(s), std::move(v)});
  }
  return out;
}

/// v^S - v^T = lambda (e_x - e_y) for a flip promoting y over x.
struct EdgeDifference {
  VertexId x = 0;
  VertexId y = 0;
  std::int64_t lambda = 0;
  CoordinateVector difference;  // v^S - v^T
};

inline EdgeDifference edge_difference(const OrderedHypergraph& h, const RewriteStep& step) {
  EdgeDifference d{step.parent, step.child, 0, {}};
  CoordinateVector vs = coordinate_vector(h, step.source), vt = coordinate_vector(h, step.target);
  for (std::size_t i = 0; i < vs.size(); ++i) d.difference.push_back(vs[i] - vt[i]);
  const VertexSet pair{step.parent, step.child};
  for (VertexSet e : h.saturation())
    if (pair.subset_of(e) && e.subset_of(step.support)) ++d.lambda;
  for (VertexId v = 1; v <= h.size(); ++v) {
    const std::int64_t expect = v == d.x ? d.lambda : v == d.y ? -d.lambda : 0;
    check_invariant(d.difference[static_cast<std::size_t>(v - 1)] == expect,
                    "edge difference is not lambda (e_x - e_y)");
  }
  check_invariant(d.lambda >= 1, "edge difference vanishes");
  return d;
}

struct OrientationCheck {
  bool ok = true;
  std::optional<RewriteStep> offending;
};

/// True iff <mu, v^S - v^T> is non-zero on every flip edge.
inline OrientationCheck is_orientation_vector(const OrderedHypergraph& h, const std::vector<std::int64_t>& mu,
                                              int cap = default_cap) {
  if (static_cast<int>(mu.size()) != h.size()) throw domain_error("orientation vector has the wrong length");
  // each edge appears once under either orientation
  for (RewriteStep& st : flip_digraph(h, FlipOrientation::promote_smaller, cap).steps)
    if (dot(mu, edge_difference(h, st).difference) == 0) return {false, std::move(st)};
  return {};
}

}  // namespace nestorw
