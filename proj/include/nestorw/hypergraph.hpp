#pragma once

#include <algorithm>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "nestorw/errors.hpp"
#include "nestorw/vertex_set.hpp"

namespace nestorw {

// Default bound on the vertex count for anything that enumerates subsets.
inline constexpr int default_cap = 16;

// Hard bound for the saturation cache regardless of the user cap.
inline constexpr int saturation_limit = 24;

inline void require_capacity(int n, int cap) {
  if (n > cap)
    throw capacity_error("hypergraph has " + std::to_string(n) + " vertices; enumeration cap is " +
                         std::to_string(cap));
}

/// A finite, totally ordered, atomic hypergraph on the vertices 1..n.
///
/// Hyperedges are kept duplicate-free and sorted lexicographically. External
/// vertex labels are only used for reporting; the order is the integer order.
/// The saturation is computed on first use and shared between copies.
class OrderedHypergraph {
 public:
  OrderedHypergraph() : OrderedHypergraph(1, {VertexSet::singleton(1)}) {}

  // Throws validation_error when a singleton {x} is missing; domain_error on out-of-range edges.
  OrderedHypergraph(int n, std::vector<VertexSet> edges, std::vector<std::string> labels = {})
      : n_(n), edges_(std::move(edges)), labels_(std::move(labels)), cache_(std::make_shared<Cache>()) {
    if (n < 1 || n > max_vertices) throw domain_error("vertex count must be in 1..64");
    if (labels_.empty()) {
      for (int v = 1; v <= n; ++v) labels_.push_back(std::to_string(v));
    }
    if (static_cast<int>(labels_.size()) != n) throw domain_error("label count does not match vertex count");
    const VertexSet all = VertexSet::range(n);
    for (VertexSet e : edges_) {
      if (e.empty()) throw domain_error("empty hyperedge");
      if (!e.subset_of(all)) throw domain_error("hyperedge uses a vertex outside 1..n");
    }
    std::sort(edges_.begin(), edges_.end(), LexLess{});
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    for (int v = 1; v <= n; ++v) {
      if (!std::binary_search(edges_.begin(), edges_.end(), VertexSet::singleton(v), LexLess{}))
        throw validation_error("hypergraph is not atomic: missing singleton {" + labels_[v - 1] + "}");
    }
  }

  // Same as the constructor, but inserts missing singletons first.
  static OrderedHypergraph atomized(int n, std::vector<VertexSet> edges, std::vector<std::string> labels = {}) {
    for (int v = 1; v <= n; ++v) edges.push_back(VertexSet::singleton(v));
    return OrderedHypergraph(n, std::move(edges), std::move(labels));
  }

  int size() const { return n_; }
  VertexSet vertices() const { return VertexSet::range(n_); }
  const std::vector<VertexSet>& edges() const { return edges_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(VertexId v) const { return labels_.at(v - 1); }

  std::optional<VertexId> vertex_of(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<VertexId>(it - labels_.begin()) + 1;
  }

  bool has_edge(VertexSet e) const { return std::binary_search(edges_.begin(), edges_.end(), e, LexLess{}); }

  // All non-empty X with the plain restriction to X connected, sorted lexicographically.
  const std::vector<VertexSet>& saturation() const;

  // Membership in the saturation, i.e. connectivity of X (X non-empty).
  bool in_saturation(VertexSet x) const {
    saturation();
    return cache_->members.count(x) != 0;
  }

  // Structural equality: same order-preserving hypergraph, labels ignored.
  bool same_structure(const OrderedHypergraph& other) const { return n_ == other.n_ && edges_ == other.edges_; }

  bool operator==(const OrderedHypergraph& other) const {
    return same_structure(other) && labels_ == other.labels_;
  }

 private:
  struct Cache {
    std::once_flag once;
    std::vector<VertexSet> saturation;
    std::unordered_set<VertexSet> members;
  };

  int n_;
  std::vector<VertexSet> edges_;
  std::vector<std::string> labels_;
  std::shared_ptr<Cache> cache_;
};

/// A relabelled sub-hypergraph together with the embedding of its vertices.
struct SubHypergraph {
  OrderedHypergraph graph;
  // parent_vertex[i] is the parent id of vertex i+1 of `graph`.
  std::vector<VertexId> parent_vertex;

  VertexSet lift(VertexSet s) const {
    VertexSet out;
    for (VertexId v : s.elements()) out.insert(parent_vertex.at(v - 1));
    return out;
  }
  VertexSet lower(VertexSet s) const {
    VertexSet out;
    for (VertexId v : s.elements()) {
      auto it = std::lower_bound(parent_vertex.begin(), parent_vertex.end(), v);
      if (it == parent_vertex.end() || *it != v) throw domain_error("vertex outside the sub-hypergraph");
      out.insert(static_cast<VertexId>(it - parent_vertex.begin()) + 1);
    }
    return out;
  }
};

namespace detail {

// Grows `seed` (a subset of x) by repeatedly merging hyperedges inside x that touch it.
inline VertexSet merge_closure(const std::vector<VertexSet>& edges, VertexSet x, VertexSet seed) {
  VertexSet comp = seed;
  bool changed = true;
  while (changed) {
    changed = false;
    for (VertexSet e : edges) {
      if (e.subset_of(x) && e.intersects(comp) && !e.subset_of(comp)) {
        comp |= e;
        changed = true;
      }
    }
  }
  return comp;
}

inline std::vector<VertexSet> components_of(const std::vector<VertexSet>& edges, VertexSet x) {
  std::vector<VertexSet> comps;
  VertexSet rest = x;
  while (!rest.empty()) {
    VertexSet comp = merge_closure(edges, x, VertexSet::singleton(rest.min()));
    comps.push_back(comp);
    rest -= comp;
  }
  std::sort(comps.begin(), comps.end(), [](VertexSet a, VertexSet b) { return a.max() < b.max(); });
  return comps;
}

inline SubHypergraph relabel(const OrderedHypergraph& h, VertexSet x, const std::vector<VertexSet>& parent_edges) {
  SubHypergraph sub;
  sub.parent_vertex = x.elements();
  std::vector<std::string> labels;
  for (VertexId v : sub.parent_vertex) labels.push_back(h.label(v));
  std::vector<VertexSet> edges;
  edges.reserve(parent_edges.size());
  const auto& pv = sub.parent_vertex;
  for (VertexSet e : parent_edges) {
    VertexSet mapped;
    for (VertexId v : e.elements())
      mapped.insert(static_cast<VertexId>(std::lower_bound(pv.begin(), pv.end(), v) - pv.begin()) + 1);
    edges.push_back(mapped);
  }
  sub.graph = OrderedHypergraph(static_cast<int>(pv.size()), std::move(edges), std::move(labels));
  return sub;
}

}  // namespace detail

inline const std::vector<VertexSet>& OrderedHypergraph::saturation() const {
  std::call_once(cache_->once, [this] {
    require_capacity(n_, saturation_limit);
    std::vector<VertexSet> sat;
    for_each_nonempty_subset(vertices(), [&](VertexSet x) {
      if (detail::merge_closure(edges_, x, VertexSet::singleton(x.min())) == x) sat.push_back(x);
    });
    std::sort(sat.begin(), sat.end(), LexLess{});
    cache_->members.insert(sat.begin(), sat.end());
    cache_->saturation = std::move(sat);
  });
  return cache_->saturation;
}

inline void require_subset(const OrderedHypergraph& h, VertexSet x) {
  if (!x.subset_of(h.vertices())) throw domain_error("vertex subset is not contained in the hypergraph");
}

inline void require_nonempty_subset(const OrderedHypergraph& h, VertexSet x) {
  if (x.empty()) throw domain_error("vertex subset must be non-empty");
  require_subset(h, x);
}

/// True iff the plain restriction to X admits no non-trivial split.
inline bool is_connected(const OrderedHypergraph& h, VertexSet x) {
  require_nonempty_subset(h, x);
  return detail::merge_closure(h.edges(), x, VertexSet::singleton(x.min())) == x;
}

inline bool is_connected(const OrderedHypergraph& h) { return is_connected(h, h.vertices()); }

/// Connected components of the plain restriction to `within`, by increasing maximal vertex.
inline std::vector<VertexSet> components(const OrderedHypergraph& h, VertexSet within) {
  require_subset(h, within);
  return detail::components_of(h.edges(), within);
}

struct Decomposition {
  VertexSet removed;
  std::vector<VertexSet> components;
};

/// Components of H with the vertices of X removed.
inline Decomposition decompose(const OrderedHypergraph& h, VertexSet x) {
  require_subset(h, x);
  return {x, detail::components_of(h.edges(), h.vertices() - x)};
}

/// Components of the plain restriction to `support` once X is removed.
inline std::vector<VertexSet> decompose_within(const OrderedHypergraph& h, VertexSet support, VertexSet x) {
  return detail::components_of(h.edges(), support - x);
}

inline SubHypergraph restrict_plain(const OrderedHypergraph& h, VertexSet x) {
  require_nonempty_subset(h, x);
  std::vector<VertexSet> kept;
  for (VertexSet e : h.edges())
    if (e.subset_of(x)) kept.push_back(e);
  return detail::relabel(h, x, kept);
}

inline OrderedHypergraph saturate(const OrderedHypergraph& h) {
  return OrderedHypergraph(h.size(), h.saturation(), h.labels());
}

/// Traces on X of the saturated hyperedges meeting X.
inline SubHypergraph reconnected_restrict(const OrderedHypergraph& h, VertexSet x) {
  require_nonempty_subset(h, x);
  std::vector<VertexSet> traces;
  for (VertexSet z : h.saturation())
    if (z.intersects(x)) traces.push_back(z & x);
  return detail::relabel(h, x, traces);
}

/// Whether removing x leaves y and z in different components.
inline bool disconnects(const OrderedHypergraph& h, VertexId x, VertexId y, VertexId z) {
  if (x == y || y == z || x == z) throw domain_error("disconnects needs three distinct vertices");
  const VertexSet all = h.vertices();
  if (!all.contains(x) || !all.contains(y) || !all.contains(z)) throw domain_error("vertex outside hypergraph");
  for (VertexSet comp : decompose(h, VertexSet::singleton(x)).components)
    if (comp.contains(y)) return !comp.contains(z);
  throw invariant_error("vertex missing from decomposition");
}

}  // namespace nestorw
