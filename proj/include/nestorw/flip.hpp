#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nestorw/construct.hpp"
#include "nestorw/errors.hpp"
#include "nestorw/hypergraph.hpp"

namespace nestorw {

/// Which parent-child pairs x(y) are rewritten to y(x).
enum class FlipOrientation {
  promote_smaller,  // fires when y < x
  promote_larger,   // fires when x < y
};

inline bool fires(FlipOrientation o, VertexId parent, VertexId child) {
  return o == FlipOrientation::promote_smaller ? child < parent : parent < child;
}

inline FlipOrientation opposite(FlipOrientation o) {
  return o == FlipOrientation::promote_smaller ? FlipOrientation::promote_larger : FlipOrientation::promote_smaller;
}

inline std::string to_string(FlipOrientation o) {
  return o == FlipOrientation::promote_smaller ? "promote-smaller" : "promote-larger";
}

inline FlipOrientation parse_orientation(const std::string& s) {
  if (s == "promote-smaller") return FlipOrientation::promote_smaller;
  if (s == "promote-larger") return FlipOrientation::promote_larger;
  throw parse_error("unknown orientation '" + s + "'");
}

/// One flip S -> T exchanging the parent x with its child y.
struct RewriteStep {
  Construction source;
  Construction target;
  VertexId parent = 0;  // x
  VertexId child = 0;   // y, promoted
  VertexSet support;    // supp(occ_S(x))
  NodePath path;        // position of x in S, and of y in T
};

/// Replaces x(y(..),..) by y(x(..),..), regrouping the grandchildren by connectivity.
inline Construction flip(const OrderedHypergraph& h, const Construction& s, VertexId x, VertexId y) {
  auto where = find_node(s, VertexSet::singleton(x));
  if (!where) throw domain_error("flip: vertex " + std::to_string(x) + " is not a node");
  const Construct& node = node_at(s, *where);
  auto yit = std::find_if(node.children.begin(), node.children.end(),
                          [&](const Construct& c) { return c.decoration == VertexSet::singleton(y); });
  if (yit == node.children.end()) throw domain_error("flip: " + std::to_string(y) + " is not a child of " + std::to_string(x));

  std::vector<const Construct*> pool;
  for (const Construct& c : node.children)
    if (&c != &*yit) pool.push_back(&c);
  for (const Construct& c : yit->children) pool.push_back(&c);
  auto take = [&](VertexSet comp) {
    auto it = std::find_if(pool.begin(), pool.end(), [&](const Construct* c) { return c->support() == comp; });
    check_invariant(it != pool.end(), "flip: component without a matching subtree");
    return **it;
  };

  const VertexSet support = node.support();
  Construct top{VertexSet::singleton(y), {}};
  for (VertexSet comp : decompose_within(h, support, VertexSet::singleton(y))) {
    if (!comp.contains(x)) {
      top.children.push_back(take(comp));
      continue;
    }
    Construct lower{VertexSet::singleton(x), {}};
    for (VertexSet c : decompose_within(h, comp, VertexSet::singleton(x))) lower.children.push_back(take(c));
    sort_children(lower.children);
    top.children.push_back(std::move(lower));
  }
  sort_children(top.children);
  return replace_at(s, *where, std::move(top));
}

/// All parent-child pairs that fire under `o`, in preorder of the parent.
inline std::vector<RewriteStep> redexes(const OrderedHypergraph& h, const Construction& s, FlipOrientation o) {
  std::vector<RewriteStep> out;
  for (const NodePath& p : node_paths(s)) {
    const Construct& node = node_at(s, p);
    const VertexId x = node.decoration.min();
    for (const Construct& c : node.children) {
      const VertexId y = c.decoration.min();
      if (fires(o, x, y)) out.push_back({s, flip(h, s, x, y), x, y, node.support(), p});
    }
  }
  return out;
}

/// The oriented flip graph on all constructions.
struct FlipDigraph {
  std::vector<Construction> vertices;  // canonical order
  std::map<Construction, std::size_t> index;
  std::vector<RewriteStep> steps;
  std::vector<std::pair<std::size_t, std::size_t>> arcs;  // parallel to steps

  std::size_t index_of(const Construction& s) const {
    auto it = index.find(s);
    if (it == index.end()) throw domain_error("construction not in flip digraph");
    return it->second;
  }
};

inline FlipDigraph flip_digraph(const OrderedHypergraph& h, FlipOrientation o, int cap = default_cap) {
  FlipDigraph g;
  g.vertices = enumerate_constructions(h, cap);
  for (std::size_t i = 0; i < g.vertices.size(); ++i) g.index.emplace(g.vertices[i], i);
  for (std::size_t i = 0; i < g.vertices.size(); ++i)
    for (RewriteStep& st : redexes(h, g.vertices[i], o)) {
      g.arcs.emplace_back(i, g.index_of(st.target));
      g.steps.push_back(std::move(st));
    }
  return g;
}

// Order reversal v -> n+1-v.
inline VertexSet mirror(VertexSet s, int n) {
  VertexSet out;
  for (VertexId v : s.elements()) out.insert(n + 1 - v);
  return out;
}

inline OrderedHypergraph mirror(const OrderedHypergraph& h) {
  std::vector<VertexSet> edges;
  for (VertexSet e : h.edges()) edges.push_back(mirror(e, h.size()));
  std::vector<std::string> labels(h.labels().rbegin(), h.labels().rend());
  return OrderedHypergraph(h.size(), std::move(edges), std::move(labels));
}

inline Construct mirror(const Construct& t, int n) {
  Construct out{mirror(t.decoration, n), {}};
  for (const Construct& c : t.children) out.children.push_back(mirror(c, n));
  sort_children(out.children);
  return out;
}

}  // namespace nestorw
