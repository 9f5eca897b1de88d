#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "nestorw/construct.hpp"
#include "nestorw/errors.hpp"
#include "nestorw/flip.hpp"
#include "nestorw/geometry.hpp"
#include "nestorw/hypergraph.hpp"
#include "nestorw/terms.hpp"

namespace nestorw {

// ---------------------------------------------------------------------------
// Normal forms

struct NormalForm {
  Construction result;
  std::vector<RewriteStep> trace;
};

/// Reduces by always firing the first redex in preorder.
inline NormalForm normal_form(const OrderedHypergraph& h, const Construction& s, FlipOrientation o) {
  NormalForm nf{s, {}};
  const std::size_t guard = std::size_t{1} << std::min(2 * h.size(), 40);
  while (true) {
    std::vector<RewriteStep> r = redexes(h, nf.result, o);
    if (r.empty()) return nf;
    check_invariant(nf.trace.size() < guard, "rewriting does not terminate");
    nf.result = r.front().target;
    nf.trace.push_back(std::move(r.front()));
  }
}

/// Breadth-first search for a common reduct; slow, used to cross-check normal-form joins.
inline bool joinable(const OrderedHypergraph& h, const Construction& a, const Construction& b, FlipOrientation o) {
  auto reach = [&](const Construction& from) {
    std::set<Construction> seen{from};
    std::vector<Construction> queue{from};
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (RewriteStep& st : redexes(h, queue[i], o))
        if (seen.insert(st.target).second) queue.push_back(std::move(st.target));
    return seen;
  };
  std::set<Construction> ra = reach(a), rb = reach(b);
  return std::any_of(ra.begin(), ra.end(), [&](const Construction& c) { return rb.count(c) != 0; });
}

// A directed cycle, if any (vertex indices in order).
inline std::optional<std::vector<std::size_t>> find_cycle(std::size_t n,
                                                          const std::vector<std::pair<std::size_t, std::size_t>>& arcs) {
  std::vector<std::vector<std::size_t>> out(n);
  for (auto [a, b] : arcs) out[a].push_back(b);
  std::vector<int> colour(n, 0);
  std::vector<std::size_t> parent(n, n);
  for (std::size_t root = 0; root < n; ++root) {
    if (colour[root]) continue;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
    colour[root] = 1;
    while (!stack.empty()) {
      auto& [v, i] = stack.back();
      if (i == out[v].size()) {
        colour[v] = 2;
        stack.pop_back();
        continue;
      }
      std::size_t w = out[v][i++];
      if (colour[w] == 1) {
        std::vector<std::size_t> cycle{w};
        for (std::size_t u = v; u != w; u = parent[u]) cycle.push_back(u);
        std::reverse(cycle.begin() + 1, cycle.end());
        return cycle;
      }
      if (colour[w] == 0) {
        colour[w] = 1;
        parent[w] = v;
        stack.emplace_back(w, 0);
      }
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Facial steps

struct FacialStep {
  Construct lower;
  Construct upper;
  VertexSet parent;  // X, the kept node of the lower construct
  VertexSet child;   // Y, merged into X in the upper construct
  bool upward = true;  // lower -> upper

  const Construct& source() const { return upward ? lower : upper; }
  const Construct& target() const { return upward ? upper : lower; }
};

// Up when max(Y) < min(X), down when max(X) < min(Y), unoriented otherwise.
inline std::optional<bool> facial_direction(VertexSet parent, VertexSet child) {
  if (child.max() < parent.min()) return true;
  if (parent.max() < child.min()) return false;
  return std::nullopt;
}

/// Oriented covering moves with S as either end.
inline std::vector<FacialStep> facial_steps(const OrderedHypergraph& h, const Construct& s) {
  std::vector<FacialStep> out;
  for (const Contraction& c : contractions(s))
    if (auto up = facial_direction(c.parent, c.child)) out.push_back({s, c.result, c.parent, c.child, *up});
  for (const Expansion& e : expansions(h, s))
    if (auto up = facial_direction(e.parent, e.child)) out.push_back({e.result, s, e.parent, e.child, *up});
  return out;
}

struct FacialOrderReport {
  FaceLattice lattice;
  std::vector<std::pair<std::size_t, std::size_t>> arcs;  // source, target
  std::size_t unoriented_covers = 0;
  std::optional<std::vector<std::size_t>> cycle;

  bool acyclic() const { return !cycle.has_value(); }
};

inline FacialOrderReport facial_order_report(const OrderedHypergraph& h, int cap = default_cap) {
  FacialOrderReport r;
  r.lattice = enumerate_constructs(h, cap);
  for (std::size_t i = 0; i < r.lattice.constructs.size(); ++i)
    for (const Contraction& c : contractions(r.lattice.constructs[i])) {
      const std::size_t j = r.lattice.index_of(c.result);
      auto up = facial_direction(c.parent, c.child);
      if (!up) ++r.unoriented_covers;
      else if (*up) r.arcs.emplace_back(i, j);
      else r.arcs.emplace_back(j, i);
    }
  std::sort(r.arcs.begin(), r.arcs.end());
  r.cycle = find_cycle(r.lattice.constructs.size(), r.arcs);
  return r;
}

/// The flip as contraction to the {x,y} node followed by expansion.
struct FlipDecomposition {
  Construct middle;
  FacialStep contraction;  // S and middle
  FacialStep expansion;    // T and middle
  bool aligned = false;    // both facial steps point from S towards T
};

inline FlipDecomposition simulate_flip_by_facial(const OrderedHypergraph& h, const RewriteStep& step) {
  const VertexSet x = VertexSet::singleton(step.parent), y = VertexSet::singleton(step.child);
  auto find = [](const Construct& s, VertexSet p, VertexSet c) {
    for (Contraction& k : contractions(s))
      if (k.parent == p && k.child == c) return std::move(k.result);
    throw domain_error("simulate: not a parent-child pair");
  };
  FlipDecomposition d;
  d.middle = find(step.source, x, y);
  check_invariant(find(step.target, y, x) == d.middle, "flip does not factor through the {x,y} face");
  check_invariant(validate(h, d.middle) == d.middle, "middle of a flip is not a construct");
  auto first = facial_direction(x, y), second = facial_direction(y, x);
  check_invariant(first && second && *first != *second, "singleton pairs are always oriented");
  d.contraction = {step.source, d.middle, x, y, *first};
  d.expansion = {step.target, d.middle, y, x, *second};
  d.aligned = *first && !*second;
  return d;
}

// ---------------------------------------------------------------------------
// 2-faces and shapes

enum class ShapeTag { A, B1, B2, B3, B4 };

inline std::string to_string(ShapeTag t) {
  switch (t) {
    case ShapeTag::A: return "A";
    case ShapeTag::B1: return "B1";
    case ShapeTag::B2: return "B2";
    case ShapeTag::B3: return "B3";
    case ShapeTag::B4: return "B4";
  }
  return "?";
}

// B1..B4 from the number of vertices disconnecting the other two (3, 2, 1, 0).
inline ShapeTag shape_tag(const OrderedHypergraph& shape) {
  if (shape.size() != 3 || !is_connected(shape)) throw domain_error("shape tags apply to connected 3-vertex hypergraphs");
  int n = 0;
  for (VertexId v = 1; v <= 3; ++v) {
    VertexId a = v == 1 ? 2 : 1, b = v == 3 ? 2 : 3;
    n += disconnects(shape, v, a, b) ? 1 : 0;
  }
  static constexpr ShapeTag by_n[] = {ShapeTag::B4, ShapeTag::B3, ShapeTag::B2, ShapeTag::B1};
  const ShapeTag tag = by_n[n];
  check_invariant(saturate(shape).edges().size() == static_cast<std::size_t>(7 - n), "shape has an unexpected size");
  return tag;
}

struct TwoFace {
  ShapeTag tag = ShapeTag::A;
  VertexSet x;                         // the triple node, type B only
  std::optional<SubHypergraph> shape;  // type B only
};

inline TwoFace classify_two_face(const OrderedHypergraph& h, const Construct& t) {
  if (dimension(t) != 2) throw domain_error("classify_two_face: dimension is not 2");
  int big = 0;
  for (const NodePath& p : node_paths(t)) big += node_at(t, p).decoration.size() > 1 ? 1 : 0;
  if (big == 2) return {};
  XFace f = x_face(h, t);
  return {shape_tag(f.shape.graph), f.x, f.shape};
}

struct TwoFaceCensus {
  std::size_t type_a = 0;
  std::size_t type_b = 0;
};

inline TwoFaceCensus two_face_census(const OrderedHypergraph& h, int cap = default_cap) {
  TwoFaceCensus c;
  for (const Construct& t : all_constructs(h, cap))
    if (dimension(t) == 2) ++(classify_two_face(h, t).tag == ShapeTag::A ? c.type_a : c.type_b);
  return c;
}

struct CriticalShape {
  VertexSet y;
  VertexSet x;
  SubHypergraph shape;  // reconnected restriction of H_Y to X
  ShapeTag tag;
};

/// Distinct shapes over connected Y and 3-subsets X of Y, first witness kept (by |Y|, then Y, then X).
inline std::vector<CriticalShape> critical_pair_shapes(const OrderedHypergraph& h, int cap = default_cap) {
  require_capacity(h.size(), cap);
  require_connected(h);
  std::vector<VertexSet> ys;
  for (VertexSet y : h.saturation())
    if (y.size() >= 3) ys.push_back(y);
  std::stable_sort(ys.begin(), ys.end(), [](VertexSet a, VertexSet b) { return a.size() < b.size(); });
  std::vector<CriticalShape> out;
  for (VertexSet y : ys) {
    SubHypergraph local = restrict_plain(h, y);
    std::vector<VertexSet> xs;
    for_each_nonempty_subset(y, [&](VertexSet x) {
      if (x.size() == 3) xs.push_back(x);
    });
    std::sort(xs.begin(), xs.end(), LexLess{});
    for (VertexSet x : xs) {
      SubHypergraph shape = compose(local, reconnected_restrict(local.graph, local.lower(x)));
      bool known = std::any_of(out.begin(), out.end(),
                               [&](const CriticalShape& c) { return c.shape.graph.same_structure(shape.graph); });
      if (known) continue;
      ShapeTag tag = shape_tag(shape.graph);
      out.push_back({y, x, std::move(shape), tag});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Local confluence diagrams

enum class DiagramClass { a1, a2, b_sibling, b_chain };

inline std::string to_string(DiagramClass c) {
  switch (c) {
    case DiagramClass::a1: return "a1";
    case DiagramClass::a2: return "a2";
    case DiagramClass::b_sibling: return "b-sibling";
    case DiagramClass::b_chain: return "b-chain";
  }
  return "?";
}

inline bool is_type_b(DiagramClass c) { return c == DiagramClass::b_sibling || c == DiagramClass::b_chain; }

struct LocalDiagram {
  Construction peak;
  RewriteStep left;
  RewriteStep right;
  std::vector<RewriteStep> left_join;   // left.target ->* join
  std::vector<RewriteStep> right_join;  // right.target ->* join
  Construction join;
  bool joined = false;
  DiagramClass cls = DiagramClass::a1;
  Construct face;  // both edges contracted
  TwoFace shape;
};

namespace detail {

inline Construct contract_edge(const Construct& t, VertexId parent, VertexId child) {
  for (Contraction& c : contractions(t))
    if (c.parent.contains(parent) && c.child.contains(child)) return std::move(c.result);
  throw invariant_error("contract_edge: no such edge");
}

inline bool is_prefix(const NodePath& a, const NodePath& b) {
  return a.size() <= b.size() && std::equal(a.begin(), a.end(), b.begin());
}

}  // namespace detail

inline DiagramClass classify_peak(const RewriteStep& l, const RewriteStep& r) {
  const VertexId x = l.parent, y = l.child, u = r.parent, v = r.child;
  if (x == u) return DiagramClass::b_sibling;
  if (y == u || v == x) return DiagramClass::b_chain;
  check_invariant(y != v, "a node has a single parent");
  if (detail::is_prefix(l.path, r.path) || detail::is_prefix(r.path, l.path)) return DiagramClass::a2;
  return DiagramClass::a1;
}

inline LocalDiagram make_diagram(const OrderedHypergraph& h, const RewriteStep& l, const RewriteStep& r,
                                 FlipOrientation o) {
  LocalDiagram d;
  d.peak = l.source;
  d.left = l;
  d.right = r;
  NormalForm a = normal_form(h, l.target, o), b = normal_form(h, r.target, o);
  d.left_join = std::move(a.trace);
  d.right_join = std::move(b.trace);
  d.joined = a.result == b.result;
  d.join = std::move(a.result);
  d.cls = classify_peak(l, r);
  d.face = detail::contract_edge(detail::contract_edge(d.peak, l.parent, l.child), r.parent, r.child);
  d.shape = classify_two_face(h, d.face);
  check_invariant((d.shape.tag == ShapeTag::A) != is_type_b(d.cls), "peak class disagrees with its 2-face");
  return d;
}

/// One diagram per unordered pair of redexes at each construction, ordered by peak then by pair.
inline std::vector<LocalDiagram> peaks_and_joins(const OrderedHypergraph& h, FlipOrientation o,
                                                 int cap = default_cap) {
  std::vector<LocalDiagram> out;
  for (const Construction& s : enumerate_constructions(h, cap)) {
    std::vector<RewriteStep> r = redexes(h, s, o);
    for (std::size_t i = 0; i < r.size(); ++i)
      for (std::size_t j = i + 1; j < r.size(); ++j) out.push_back(make_diagram(h, r[i], r[j], o));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Whole-system verdicts

struct ConfluenceReport {
  std::size_t constructions = 0;
  std::size_t edges = 0;
  bool terminating = false;
  bool unique_normal_forms = false;
  std::vector<Construction> sinks;
  std::vector<LocalDiagram> diagrams;
  std::map<DiagramClass, std::size_t> class_counts;
  TwoFaceCensus census;

  std::size_t count(DiagramClass c) const {
    auto it = class_counts.find(c);
    return it == class_counts.end() ? 0 : it->second;
  }
  bool all_joined() const {
    return std::all_of(diagrams.begin(), diagrams.end(), [](const LocalDiagram& d) { return d.joined; });
  }
  bool census_matches() const {
    return count(DiagramClass::a1) + count(DiagramClass::a2) == census.type_a &&
           count(DiagramClass::b_sibling) + count(DiagramClass::b_chain) == census.type_b;
  }
  bool confluent() const { return terminating && unique_normal_forms && sinks.size() == 1 && all_joined(); }
};

inline ConfluenceReport confluence_report(const OrderedHypergraph& h, FlipOrientation o, int cap = default_cap) {
  ConfluenceReport r;
  FlipDigraph g = flip_digraph(h, o, cap);
  const std::size_t n = g.vertices.size();
  r.constructions = n;
  r.edges = g.arcs.size();
  r.terminating = !find_cycle(n, g.arcs).has_value();
  std::vector<std::vector<std::size_t>> out(n);
  for (auto [a, b] : g.arcs) out[a].push_back(b);
  for (std::size_t i = 0; i < n; ++i)
    if (out[i].empty()) r.sinks.push_back(g.vertices[i]);
  if (r.terminating) {
    // reachable sinks per vertex, memoized depth-first
    std::vector<std::optional<std::set<std::size_t>>> memo(n);
    auto sinks_of = [&](auto&& self, std::size_t v) -> const std::set<std::size_t>& {
      if (!memo[v]) {
        std::set<std::size_t> acc;
        if (out[v].empty()) acc.insert(v);
        for (std::size_t w : out[v]) {
          const auto& sw = self(self, w);
          acc.insert(sw.begin(), sw.end());
        }
        memo[v] = std::move(acc);
      }
      return *memo[v];
    };
    r.unique_normal_forms = true;
    for (std::size_t v = 0; v < n; ++v) r.unique_normal_forms = r.unique_normal_forms && sinks_of(sinks_of, v).size() == 1;
    r.diagrams = peaks_and_joins(h, o, cap);
  }
  for (const LocalDiagram& d : r.diagrams) ++r.class_counts[d.cls];
  r.census = two_face_census(h, cap);
  return r;
}

struct TerminationVerdict {
  bool ok = false;
  int sign = 0;  // sign of <mu, v^T - v^S> along every step
  std::optional<RewriteStep> offending;
};

/// Checks that <mu, v^T - v^S> has one strict sign over all rewrite steps.
inline TerminationVerdict check_termination(const OrderedHypergraph& h, FlipOrientation o,
                                            const std::vector<std::int64_t>& mu, int cap = default_cap) {
  if (static_cast<int>(mu.size()) != h.size()) throw domain_error("orientation vector has the wrong length");
  TerminationVerdict v;
  for (RewriteStep& st : flip_digraph(h, o, cap).steps) {
    const std::int64_t gain = -dot(mu, edge_difference(h, st).difference);
    const int s = gain > 0 ? 1 : gain < 0 ? -1 : 0;
    if (s == 0 || (v.sign != 0 && s != v.sign)) {
      v.ok = false;
      v.offending = std::move(st);
      return v;
    }
    v.sign = s;
  }
  v.ok = true;
  return v;
}

}  // namespace nestorw
