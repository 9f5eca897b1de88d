#pragma once

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nestorw/construct.hpp"
#include "nestorw/errors.hpp"
#include "nestorw/hypergraph.hpp"

namespace nestorw {

// ---------------------------------------------------------------------------
// Planar trees

/// Rooted tree with ordered children and labelled edges; node 0 is the root.
struct PlanarTree {
  struct Node {
    std::string label;
    std::vector<std::size_t> children;
    std::vector<std::string> edge_labels;  // edge to children[i]
  };
  std::vector<Node> nodes;

  std::size_t edge_count() const { return nodes.empty() ? 0 : nodes.size() - 1; }

  std::vector<std::string> edges_preorder() const {
    std::vector<std::string> out;
    auto walk = [&](auto&& self, std::size_t v) -> void {
      for (std::size_t i = 0; i < nodes[v].children.size(); ++i) {
        out.push_back(nodes[v].edge_labels[i]);
        self(self, nodes[v].children[i]);
      }
    };
    if (!nodes.empty()) walk(walk, 0);
    return out;
  }
};

namespace detail {

// `a(z:b(x:c,y:d),u:e)`; an unlabelled edge takes the label of its child.
class PlanarTreeParser {
 public:
  explicit PlanarTreeParser(std::string_view text) : text_(text) {}

  PlanarTree parse() {
    node();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing characters");
    std::set<std::string> seen;
    for (const auto& n : tree_.nodes)
      for (const auto& e : n.edge_labels)
        if (!seen.insert(e).second) fail("repeated edge label '" + e + "'");
    return std::move(tree_);
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw parse_error("planar tree '" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " + what);
  }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  std::string name() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::string_view("():, \t\n").find(text_[pos_]) == std::string_view::npos) ++pos_;
    if (start == pos_) fail("expected a label");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::size_t node() {
    std::size_t id = tree_.nodes.size();
    tree_.nodes.push_back({name(), {}, {}});
    if (accept('(')) {
      do {
        std::string first = name();
        std::string edge;
        std::size_t child;
        if (accept(':')) {
          edge = first;
          child = node();
        } else {
          pos_ -= first.size();
          child = node();
          edge = tree_.nodes[child].label;
        }
        tree_.nodes[id].children.push_back(child);
        tree_.nodes[id].edge_labels.push_back(edge);
      } while (accept(','));
      if (!accept(')')) fail("expected ')'");
    }
    return id;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  PlanarTree tree_;
};

}  // namespace detail

inline PlanarTree parse_planar_tree(std::string_view text) { return detail::PlanarTreeParser(text).parse(); }

inline std::string to_string(const PlanarTree& t) {
  auto walk = [&](auto&& self, std::size_t v) -> std::string {
    std::string s = t.nodes[v].label;
    if (t.nodes[v].children.empty()) return s;
    s += '(';
    for (std::size_t i = 0; i < t.nodes[v].children.size(); ++i) {
      if (i) s += ',';
      s += t.nodes[v].edge_labels[i] + ':' + self(self, t.nodes[v].children[i]);
    }
    return s + ')';
  };
  return t.nodes.empty() ? std::string() : walk(walk, 0);
}

/// Vertices are the tree edges in `order` (default: preorder); two are adjacent when the edges share a node.
inline OrderedHypergraph line_graph(const PlanarTree& t, std::vector<std::string> order = {}) {
  if (t.edge_count() == 0) throw domain_error("line graph of a tree without edges");
  std::vector<std::string> pre = t.edges_preorder();
  if (order.empty()) order = pre;
  {
    std::vector<std::string> a = order, b = pre;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) throw domain_error("edge order must list every tree edge exactly once");
  }
  auto id = [&](const std::string& label) {
    return static_cast<VertexId>(std::find(order.begin(), order.end(), label) - order.begin()) + 1;
  };
  std::vector<VertexSet> edges;
  for (const PlanarTree::Node& n : t.nodes) {
    // edges at this node: the ones to its children plus the one to its parent
    std::vector<VertexId> here;
    for (const std::string& e : n.edge_labels) here.push_back(id(e));
    edges.push_back(VertexSet::from(here));
  }
  for (std::size_t v = 0; v < t.nodes.size(); ++v)
    for (std::size_t i = 0; i < t.nodes[v].children.size(); ++i) {
      const std::size_t c = t.nodes[v].children[i];
      VertexId up = id(t.nodes[v].edge_labels[i]);
      for (const std::string& e : t.nodes[c].edge_labels) edges.push_back({up, id(e)});
    }
  // keep pairs only: a node with k incident edges contributes a k-clique
  std::vector<VertexSet> pairs;
  for (VertexSet e : edges) {
    auto el = e.elements();
    for (std::size_t i = 0; i < el.size(); ++i)
      for (std::size_t j = i + 1; j < el.size(); ++j) pairs.push_back({el[i], el[j]});
  }
  const int n = static_cast<int>(order.size());
  return OrderedHypergraph::atomized(n, std::move(pairs), std::move(order));
}

/// Every plane rooted tree with k edges; nodes labelled v0, v1, .. and edges e1, e2, .. in preorder.
inline std::vector<PlanarTree> all_planar_trees(int k) {
  // shapes as nested child lists
  struct Shape {
    std::vector<Shape> kids;
  };
  auto forests = [&](auto&& self, int edges) -> std::vector<std::vector<Shape>> {
    if (edges == 0) return {{}};
    std::vector<std::vector<Shape>> out;
    for (int first = 1; first <= edges; ++first) {
      // first subtree uses `first` edges including the one to the root
      std::vector<std::vector<Shape>> heads = self(self, first - 1);
      for (const auto& head : heads)
        for (const auto& rest : self(self, edges - first)) {
          std::vector<Shape> f{Shape{head}};
          f.insert(f.end(), rest.begin(), rest.end());
          out.push_back(std::move(f));
        }
    }
    return out;
  };
  std::vector<PlanarTree> out;
  for (const auto& forest : forests(forests, k)) {
    PlanarTree t;
    int edge = 0;
    auto build = [&](auto&& self, const std::vector<Shape>& kids) -> std::size_t {
      std::size_t id = t.nodes.size();
      t.nodes.push_back({"v" + std::to_string(id), {}, {}});
      for (const Shape& s : kids) {
        std::string label = "e" + std::to_string(++edge);
        std::size_t c = self(self, s.kids);
        t.nodes[id].children.push_back(c);
        t.nodes[id].edge_labels.push_back(label);
      }
      return id;
    };
    build(build, forest);
    out.push_back(std::move(t));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Family generators

enum class FamilyKind { simplex, cube, associahedron, permutahedron, cyclohedron, operahedron, graph, hypergraph };

inline std::string to_string(FamilyKind k) {
  switch (k) {
    case FamilyKind::simplex: return "simplex";
    case FamilyKind::cube: return "cube";
    case FamilyKind::associahedron: return "associahedron";
    case FamilyKind::permutahedron: return "permutahedron";
    case FamilyKind::cyclohedron: return "cyclohedron";
    case FamilyKind::operahedron: return "operahedron";
    case FamilyKind::graph: return "graph";
    case FamilyKind::hypergraph: return "hypergraph";
  }
  return "?";
}

inline FamilyKind parse_family(const std::string& s) {
  for (FamilyKind k : {FamilyKind::simplex, FamilyKind::cube, FamilyKind::associahedron, FamilyKind::permutahedron,
                       FamilyKind::cyclohedron, FamilyKind::operahedron, FamilyKind::graph, FamilyKind::hypergraph})
    if (to_string(k) == s) return k;
  throw parse_error("unknown family '" + s + "'");
}

struct FamilyDescriptor {
  FamilyKind kind = FamilyKind::simplex;
  int dimension = 0;                        // closed-form kinds
  std::optional<PlanarTree> tree;           // operahedron
  std::vector<std::string> edge_order;      // operahedron, optional
  int vertices = 0;                         // graph, hypergraph
  std::vector<VertexSet> edges;             // graph, hypergraph; singletons added
};

namespace detail {

inline std::vector<VertexSet> singletons(int n) {
  std::vector<VertexSet> e;
  for (int i = 1; i <= n; ++i) e.push_back(VertexSet::singleton(i));
  return e;
}

}  // namespace detail

inline OrderedHypergraph generate(const FamilyDescriptor& d) {
  const int n = d.dimension + 1;
  auto closed_form = [&] {
    if (d.dimension < 0 || n > max_vertices) throw domain_error("dimension out of range");
    return detail::singletons(n);
  };
  switch (d.kind) {
    case FamilyKind::simplex: {
      auto e = closed_form();
      e.push_back(VertexSet::range(n));
      return OrderedHypergraph(n, e);
    }
    case FamilyKind::cube: {
      auto e = closed_form();
      for (int i = 1; i <= n; ++i) e.push_back(VertexSet::range(i));
      return OrderedHypergraph(n, e);
    }
    case FamilyKind::associahedron:
    case FamilyKind::cyclohedron: {
      auto e = closed_form();
      for (int i = 1; i < n; ++i) e.push_back({i, i + 1});
      if (d.kind == FamilyKind::cyclohedron && n >= 2) e.push_back({n, 1});
      return OrderedHypergraph(n, e);
    }
    case FamilyKind::permutahedron: {
      auto e = closed_form();
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) e.push_back({i, j});
      return OrderedHypergraph(n, e);
    }
    case FamilyKind::operahedron:
      if (!d.tree) throw domain_error("operahedron needs a planar tree");
      return line_graph(*d.tree, d.edge_order);
    case FamilyKind::graph:
    case FamilyKind::hypergraph: {
      if (d.vertices < 1) throw domain_error("vertex count must be positive");
      for (VertexSet e : d.edges)
        if (d.kind == FamilyKind::graph && e.size() > 2) throw domain_error("graph edges have at most two vertices");
      std::vector<VertexSet> e = d.edges;
      return OrderedHypergraph::atomized(d.vertices, std::move(e));
    }
  }
  throw domain_error("unknown family");
}

inline OrderedHypergraph generate(FamilyKind kind, int dimension) {
  FamilyDescriptor d;
  d.kind = kind;
  d.dimension = dimension;
  return generate(d);
}

// ---------------------------------------------------------------------------
// Graph classes

enum class GraphClass { linear, complete, cycle, clawfree_block, other_graph, proper_hypergraph };

inline std::string to_string(GraphClass c) {
  switch (c) {
    case GraphClass::linear: return "linear";
    case GraphClass::complete: return "complete";
    case GraphClass::cycle: return "cycle";
    case GraphClass::clawfree_block: return "clawfree-block";
    case GraphClass::other_graph: return "other-graph";
    case GraphClass::proper_hypergraph: return "proper-hypergraph";
  }
  return "?";
}

namespace detail {

inline bool is_graph(const OrderedHypergraph& h) {
  return std::all_of(h.edges().begin(), h.edges().end(), [](VertexSet e) { return e.size() <= 2; });
}

inline std::vector<VertexSet> neighbourhoods(const OrderedHypergraph& h) {
  std::vector<VertexSet> adj(static_cast<std::size_t>(h.size()) + 1);
  for (VertexSet e : h.edges())
    if (e.size() == 2) {
      adj[static_cast<std::size_t>(e.min())].insert(e.max());
      adj[static_cast<std::size_t>(e.max())].insert(e.min());
    }
  return adj;
}

}  // namespace detail

inline bool is_linear_graph(const OrderedHypergraph& h) {
  if (!detail::is_graph(h)) return false;
  std::size_t pairs = 0;
  for (VertexSet e : h.edges()) {
    if (e.size() != 2) continue;
    if (e.max() != e.min() + 1) return false;
    ++pairs;
  }
  return pairs == static_cast<std::size_t>(h.size() - 1);
}

inline bool is_complete_graph(const OrderedHypergraph& h) {
  const auto n = static_cast<std::size_t>(h.size());
  return detail::is_graph(h) && h.edges().size() == n + n * (n - 1) / 2;
}

inline bool is_cycle_graph(const OrderedHypergraph& h) {
  if (!detail::is_graph(h) || h.size() < 4 || !is_connected(h)) return false;
  auto adj = detail::neighbourhoods(h);
  for (VertexId v = 1; v <= h.size(); ++v)
    if (adj[static_cast<std::size_t>(v)].size() != 2) return false;
  return true;
}

/// Connected, every block a clique, no induced claw.
inline bool is_clawfree_block_graph(const OrderedHypergraph& h) {
  if (!detail::is_graph(h) || !is_connected(h)) return false;
  auto adj = detail::neighbourhoods(h);
  const int n = h.size();
  for (VertexId c = 1; c <= n; ++c) {
    auto nb = adj[static_cast<std::size_t>(c)].elements();
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j)
        for (std::size_t k = j + 1; k < nb.size(); ++k) {
          auto a = static_cast<std::size_t>(nb[i]), b = static_cast<std::size_t>(nb[j]);
          if (!adj[a].contains(nb[j]) && !adj[a].contains(nb[k]) && !adj[b].contains(nb[k])) return false;
        }
  }
  // two vertices in one block stay connected after deleting any single vertex
  for (VertexId u = 1; u <= n; ++u)
    for (VertexId v = u + 1; v <= n; ++v) {
      if (adj[static_cast<std::size_t>(u)].contains(v)) continue;
      bool separated = false;
      for (VertexId w = 1; w <= n && !separated; ++w)
        if (w != u && w != v) separated = disconnects(h, w, u, v);
      if (!separated) return false;
    }
  return true;
}

inline GraphClass graph_class(const OrderedHypergraph& h) {
  if (!detail::is_graph(h)) return GraphClass::proper_hypergraph;
  if (!is_connected(h)) return GraphClass::other_graph;
  if (is_linear_graph(h)) return GraphClass::linear;
  if (is_complete_graph(h)) return GraphClass::complete;
  if (is_cycle_graph(h)) return GraphClass::cycle;
  if (is_clawfree_block_graph(h)) return GraphClass::clawfree_block;
  return GraphClass::other_graph;
}

/// The graph made of the two-element connected subsets, if it has the same saturation as H.
inline std::optional<OrderedHypergraph> underlying_graph(const OrderedHypergraph& h) {
  std::vector<VertexSet> e;
  for (VertexSet z : h.saturation())
    if (z.size() <= 2) e.push_back(z);
  OrderedHypergraph g(h.size(), std::move(e), h.labels());
  if (g.saturation() != h.saturation()) return std::nullopt;
  return g;
}

// ---------------------------------------------------------------------------
// Contextuality

struct ContextualityReport {
  bool contextual = true;                              // condition (2)
  std::optional<std::pair<VertexSet, VertexSet>> witness;  // minimal (Y, X) for (2)
  bool condition1 = true;
  std::optional<std::pair<VertexSet, VertexSet>> witness1;
};

/// Reconnected restriction of H_Y to X, as an ordered hypergraph on |X| vertices.
inline OrderedHypergraph local_shape(const OrderedHypergraph& h, VertexSet y, VertexSet x) {
  SubHypergraph local = restrict_plain(h, y);
  return reconnected_restrict(local.graph, local.lower(x)).graph;
}

inline ContextualityReport is_contextual(const OrderedHypergraph& h) {
  require_connected(h);
  std::vector<VertexSet> ys;
  for (VertexSet y : h.saturation())
    if (y.size() >= 3) ys.push_back(y);
  std::stable_sort(ys.begin(), ys.end(), [](VertexSet a, VertexSet b) { return a.size() < b.size(); });
  ContextualityReport r;
  for (VertexSet y : ys) {
    SubHypergraph local = restrict_plain(h, y);
    std::vector<VertexSet> xs;
    for_each_nonempty_subset(y, [&](VertexSet x) {
      if (x.size() == 3) xs.push_back(x);
    });
    std::sort(xs.begin(), xs.end(), LexLess{});
    for (VertexSet x : xs) {
      const bool same = reconnected_restrict(h, x).graph.same_structure(
          reconnected_restrict(local.graph, local.lower(x)).graph);
      if (!same && r.contextual) {
        r.contextual = false;
        r.witness = {y, x};
      }
      auto v = x.elements();
      bool agree = true;
      for (int i = 0; i < 3; ++i) {
        VertexId a = v[static_cast<std::size_t>(i)], b = v[static_cast<std::size_t>((i + 1) % 3)],
                 c = v[static_cast<std::size_t>((i + 2) % 3)];
        const bool in_y = disconnects(local.graph, local.lower({a}).min(), local.lower({b}).min(),
                                      local.lower({c}).min());
        agree = agree && in_y == disconnects(h, a, b, c);
      }
      if (!agree && r.condition1) {
        r.condition1 = false;
        r.witness1 = {y, x};
      }
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Family membership and closure

enum class FamilyClass { simplex, cube, associahedron, permutahedron, cyclohedron, operahedron, graph, hypergraph };

inline std::string to_string(FamilyClass k) {
  static const char* names[] = {"simplex",     "cube",        "associahedron", "permutahedron",
                                "cyclohedron", "operahedron", "graph-family",  "hypergraph-family"};
  return names[static_cast<int>(k)];
}

inline FamilyClass parse_family_class(const std::string& s) {
  for (int i = 0; i <= static_cast<int>(FamilyClass::hypergraph); ++i)
    if (to_string(static_cast<FamilyClass>(i)) == s) return static_cast<FamilyClass>(i);
  throw parse_error("unknown family '" + s + "'");
}

/// Membership up to order-preserving isomorphism and saturation.
inline bool is_member(FamilyClass f, const OrderedHypergraph& h) {
  if (!is_connected(h)) return false;
  auto same_sat = [&](FamilyKind k) { return h.saturation() == generate(k, h.size() - 1).saturation(); };
  switch (f) {
    case FamilyClass::simplex: return same_sat(FamilyKind::simplex);
    case FamilyClass::cube: return same_sat(FamilyKind::cube);
    case FamilyClass::cyclohedron: return same_sat(FamilyKind::cyclohedron);
    case FamilyClass::associahedron: {
      auto g = underlying_graph(h);
      return g && is_linear_graph(*g);
    }
    case FamilyClass::permutahedron: {
      auto g = underlying_graph(h);
      return g && is_complete_graph(*g);
    }
    case FamilyClass::operahedron: {
      auto g = underlying_graph(h);
      return g && (is_linear_graph(*g) || is_complete_graph(*g) || is_clawfree_block_graph(*g));
    }
    case FamilyClass::graph: {
      auto g = underlying_graph(h);
      return g && is_contextual(h).contextual;
    }
    case FamilyClass::hypergraph: return is_contextual(h).contextual;
  }
  return false;
}

/// Instances of a family up to a dimension, deduplicated as ordered hypergraphs.
inline std::vector<OrderedHypergraph> family_instances(FamilyClass f, int up_to_dimension) {
  if (up_to_dimension < 0) throw domain_error("dimension must be non-negative");
  std::vector<OrderedHypergraph> out;
  auto push = [&](OrderedHypergraph h) {
    if (std::none_of(out.begin(), out.end(), [&](const OrderedHypergraph& g) { return g.same_structure(h); }))
      out.push_back(std::move(h));
  };
  auto closed = [&](FamilyKind k) {
    for (int d = 0; d <= up_to_dimension; ++d) push(generate(k, d));
  };
  auto all_edge_families = [&](int n, bool graphs_only) {
    std::vector<VertexSet> pool;
    for_each_nonempty_subset(VertexSet::range(n), [&](VertexSet s) {
      if (s.size() >= 2 && (!graphs_only || s.size() == 2)) pool.push_back(s);
    });
    std::sort(pool.begin(), pool.end(), LexLess{});
    std::vector<OrderedHypergraph> hs;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pool.size()); ++mask) {
      std::vector<VertexSet> e = detail::singletons(n);
      for (std::size_t i = 0; i < pool.size(); ++i)
        if ((mask >> i) & 1U) e.push_back(pool[i]);
      OrderedHypergraph h(n, std::move(e));
      if (is_connected(h)) hs.push_back(std::move(h));
    }
    return hs;
  };
  switch (f) {
    case FamilyClass::simplex: closed(FamilyKind::simplex); break;
    case FamilyClass::cube: closed(FamilyKind::cube); break;
    case FamilyClass::associahedron: closed(FamilyKind::associahedron); break;
    case FamilyClass::permutahedron: closed(FamilyKind::permutahedron); break;
    case FamilyClass::cyclohedron: closed(FamilyKind::cyclohedron); break;
    case FamilyClass::operahedron: {
      if (up_to_dimension > 4) throw capacity_error("operahedron sweeps are limited to dimension 4");
      push(generate(FamilyKind::associahedron, 0));
      for (int k = 1; k <= up_to_dimension + 1; ++k)
        for (const PlanarTree& t : all_planar_trees(k)) {
          std::vector<std::string> order = t.edges_preorder();
          std::sort(order.begin(), order.end());
          do push(line_graph(t, order));
          while (std::next_permutation(order.begin(), order.end()));
        }
      break;
    }
    case FamilyClass::graph:
      if (up_to_dimension > 4) throw capacity_error("graph-family sweeps are limited to dimension 4");
      for (int n = 1; n <= up_to_dimension + 1; ++n)
        for (OrderedHypergraph& h : all_edge_families(n, true))
          if (is_contextual(h).contextual) push(std::move(h));
      break;
    case FamilyClass::hypergraph:
      if (up_to_dimension > 3) throw capacity_error("hypergraph-family sweeps are limited to dimension 3");
      for (int n = 1; n <= up_to_dimension + 1; ++n)
        for (OrderedHypergraph& h : all_edge_families(n, false))
          if (is_contextual(h).contextual) push(std::move(h));
      break;
  }
  return out;
}

struct FamilyCheckEntry {
  std::string instance;
  int condition = 0;  // 1, 2 or 3
  bool verdict = true;
  std::string witness;
};

struct FamilyReport {
  FamilyClass family;
  int up_to_dimension = 0;
  std::size_t instances = 0;
  std::vector<FamilyCheckEntry> entries;  // one per (instance, condition)

  bool pass() const {
    return std::all_of(entries.begin(), entries.end(), [](const FamilyCheckEntry& e) { return e.verdict; });
  }
  std::optional<FamilyCheckEntry> first_failure() const {
    for (const FamilyCheckEntry& e : entries)
      if (!e.verdict) return e;
    return std::nullopt;
  }
};

namespace detail {

inline std::string describe(const OrderedHypergraph& h) {
  std::string s = "{";
  for (std::size_t i = 0; i < h.edges().size(); ++i) {
    if (i) s += ',';
    s += '{';
    auto el = h.edges()[i].elements();
    for (std::size_t j = 0; j < el.size(); ++j) {
      if (j) s += ',';
      s += h.label(el[j]);
    }
    s += '}';
  }
  return s + "}";
}

inline std::string describe(VertexSet s, const OrderedHypergraph& h) {
  std::string out = "{";
  auto el = s.elements();
  for (std::size_t j = 0; j < el.size(); ++j) {
    if (j) out += ',';
    out += h.label(el[j]);
  }
  return out + "}";
}

// In the cube C_p, y and z stay together after removing x iff both are below x.
inline bool cube_criterion_holds(const OrderedHypergraph& h) {
  for (VertexId x = 1; x <= h.size(); ++x)
    for (VertexId y = 1; y <= h.size(); ++y)
      for (VertexId z = y + 1; z <= h.size(); ++z) {
        if (x == y || x == z) continue;
        if (!disconnects(h, x, y, z) != (y < x && z < x)) return false;
      }
  return true;
}

}  // namespace detail

/// Conditions (1)-(3) of a contextual family over all instances up to a dimension.
inline FamilyReport contextual_family_check(FamilyClass f, int up_to_dimension) {
  FamilyReport r{f, up_to_dimension, 0, {}};
  std::vector<OrderedHypergraph> instances = family_instances(f, up_to_dimension);
  r.instances = instances.size();
  for (const OrderedHypergraph& h : instances) {
    const std::string name = detail::describe(h);
    ContextualityReport c = is_contextual(h);
    FamilyCheckEntry one{name, 1, c.contextual && c.condition1, {}};
    if (c.contextual != c.condition1) {
      one.verdict = false;
      one.witness = "conditions (1) and (2) disagree";
    } else if (c.witness) {
      one.witness = "Y=" + detail::describe(c.witness->first, h) + " X=" + detail::describe(c.witness->second, h);
    }
    if (f == FamilyClass::cube && !detail::cube_criterion_holds(h)) {
      one.verdict = false;
      one.witness = "cube disconnection criterion fails";
    }
    r.entries.push_back(std::move(one));

    FamilyCheckEntry two{name, 2, true, {}};
    for_each_nonempty_subset(h.vertices(), [&](VertexSet x) {
      if (!two.verdict) return;
      for (VertexSet comp : decompose(h, x).components) {
        OrderedHypergraph g = restrict_plain(h, comp).graph;
        if (!is_member(f, g)) {
          two.verdict = false;
          two.witness = "X=" + detail::describe(x, h) + " component " + detail::describe(comp, h);
          return;
        }
      }
    });
    r.entries.push_back(std::move(two));

    FamilyCheckEntry three{name, 3, true, {}};
    for_each_nonempty_subset(h.vertices(), [&](VertexSet x) {
      if (!three.verdict || x.size() != 3) return;
      OrderedHypergraph g = reconnected_restrict(h, x).graph;
      if (!is_member(f, g)) {
        three.verdict = false;
        three.witness = "X=" + detail::describe(x, h);
      }
    });
    r.entries.push_back(std::move(three));
  }
  return r;
}

// ---------------------------------------------------------------------------
// Tensor words for the associahedron

namespace detail {

inline void require_linear(const OrderedHypergraph& h) {
  if (!is_linear_graph(h)) throw domain_error("parenthesization needs the linear graph on 1..m");
}

}  // namespace detail

/// Fully parenthesized product of the leaves X0..Xm; node i splits between leaves i-1 and i.
inline std::string to_parenthesization(const OrderedHypergraph& h, const Construction& s,
                                       std::vector<std::string> leaves = {}) {
  detail::require_linear(h);
  const int m = h.size();
  if (leaves.empty())
    for (int i = 0; i <= m; ++i) leaves.push_back("X" + std::to_string(i));
  if (static_cast<int>(leaves.size()) != m + 1) throw domain_error("need one leaf name per gap");
  if (!s.is_construction()) throw domain_error("parenthesization is defined on constructions");
  auto word = [&](auto&& self, const Construct& node, bool outer) -> std::string {
    const VertexId i = node.decoration.min();
    std::string left = leaves[static_cast<std::size_t>(i - 1)], right = leaves[static_cast<std::size_t>(i)];
    for (const Construct& c : node.children) {
      if (c.support().max() < i) left = self(self, c, false);
      else right = self(self, c, false);
    }
    std::string w = left + "⊗" + right;
    return outer ? w : "(" + w + ")";
  };
  return word(word, s, true);
}

/// Inverse of to_parenthesization for leaf names X0..Xm (or the given names).
inline Construction from_parenthesization(const OrderedHypergraph& h, std::string_view text,
                                          std::vector<std::string> leaves = {}) {
  detail::require_linear(h);
  const int m = h.size();
  if (leaves.empty())
    for (int i = 0; i <= m; ++i) leaves.push_back("X" + std::to_string(i));
  static constexpr std::string_view tensor = "⊗";
  std::size_t pos = 0;
  auto fail = [&](const std::string& what) -> void {
    throw parse_error("tensor word '" + std::string(text) + "' at offset " + std::to_string(pos) + ": " + what);
  };
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  int next_leaf = 0;
  // returns the construct of the factor (or nothing for a leaf) and its last leaf
  struct Factor {
    std::optional<Construct> node;
  };
  auto product = [&](auto&& self) -> Factor {
    auto factor = [&]() -> Factor {
      skip();
      if (pos < text.size() && text[pos] == '(') {
        ++pos;
        Factor f = self(self);
        skip();
        if (pos >= text.size() || text[pos] != ')') fail("expected ')'");
        ++pos;
        return f;
      }
      std::size_t start = pos;
      while (pos < text.size() && text[pos] != '(' && text[pos] != ')' && !std::isspace(static_cast<unsigned char>(text[pos])) &&
             text.substr(pos, tensor.size()) != tensor)
        ++pos;
      std::string name(text.substr(start, pos - start));
      if (next_leaf > m || name != leaves[static_cast<std::size_t>(next_leaf)]) fail("unexpected leaf '" + name + "'");
      ++next_leaf;
      return {};
    };
    Factor left = factor();
    skip();
    if (text.substr(pos, tensor.size()) != tensor) fail("expected a product");
    pos += tensor.size();
    const VertexId split = next_leaf;  // first leaf of the right factor
    Factor right = factor();
    Construct node{VertexSet::singleton(split), {}};
    if (left.node) node.children.push_back(std::move(*left.node));
    if (right.node) node.children.push_back(std::move(*right.node));
    return {std::move(node)};
  };
  Factor top = product(product);
  skip();
  if (pos != text.size() || next_leaf != m + 1) fail("incomplete word");
  return validate(h, *top.node);
}

}  // namespace nestorw
