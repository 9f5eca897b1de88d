#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "nestorw/errors.hpp"
#include "nestorw/hypergraph.hpp"

namespace nestorw {

/// A decorated rooted tree: a face of the nestohedron when valid.
///
/// Children are kept in canonical order (increasing maximal vertex of their
/// supports) once a value has passed through `validate` or `canonicalize`.
struct Construct {
  VertexSet decoration;
  std::vector<Construct> children;

  VertexSet support() const {
    VertexSet s = decoration;
    for (const Construct& c : children) s |= c.support();
    return s;
  }

  // All decorations are singletons.
  bool is_construction() const {
    if (decoration.size() != 1) return false;
    return std::all_of(children.begin(), children.end(), [](const Construct& c) { return c.is_construction(); });
  }

  std::size_t node_count() const {
    std::size_t k = 1;
    for (const Construct& c : children) k += c.node_count();
    return k;
  }

  friend bool operator==(const Construct& a, const Construct& b) {
    return a.decoration == b.decoration && a.children == b.children;
  }
  friend bool operator<(const Construct& a, const Construct& b) {
    if (a.decoration != b.decoration) return lex_less(a.decoration, b.decoration);
    return std::lexicographical_compare(a.children.begin(), a.children.end(), b.children.begin(),
                                        b.children.end());
  }
};

// Constructions are the dimension-0 constructs.
using Construction = Construct;

// A node is addressed by the child indices leading to it from the root.
using NodePath = std::vector<std::size_t>;

inline void sort_children(std::vector<Construct>& children) {
  std::sort(children.begin(), children.end(),
            [](const Construct& a, const Construct& b) { return a.support().max() < b.support().max(); });
}

inline Construct canonicalize(Construct t) {
  for (Construct& c : t.children) c = canonicalize(std::move(c));
  sort_children(t.children);
  return t;
}

inline int dimension(const Construct& t) {
  int d = t.decoration.size() - 1;
  for (const Construct& c : t.children) d += dimension(c);
  return d;
}

inline const Construct& node_at(const Construct& t, const NodePath& path) {
  const Construct* cur = &t;
  for (std::size_t i : path) cur = &cur->children.at(i);
  return *cur;
}

inline Construct replace_at(const Construct& t, const NodePath& path, Construct replacement, std::size_t depth = 0) {
  if (depth == path.size()) return replacement;
  Construct copy = t;
  copy.children.at(path[depth]) = replace_at(t.children[path[depth]], path, std::move(replacement), depth + 1);
  return copy;
}

// Paths to all nodes, in preorder.
inline std::vector<NodePath> node_paths(const Construct& t) {
  std::vector<NodePath> out;
  NodePath cur;
  auto walk = [&](auto&& self, const Construct& n) -> void {
    out.push_back(cur);
    for (std::size_t i = 0; i < n.children.size(); ++i) {
      cur.push_back(i);
      self(self, n.children[i]);
      cur.pop_back();
    }
  };
  walk(walk, t);
  return out;
}

inline std::optional<NodePath> find_node(const Construct& t, VertexSet decoration) {
  for (NodePath& p : node_paths(t)) {
    const Construct& n = node_at(t, p);
    if (n.decoration == decoration) return std::move(p);
  }
  return std::nullopt;
}

inline std::optional<NodePath> find_vertex(const Construct& t, VertexId v) {
  for (NodePath& p : node_paths(t))
    if (node_at(t, p).decoration.contains(v)) return std::move(p);
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Literal syntax: `{1,2}(3)`, `3(2(1))`; braces optional for singletons.

inline std::string format_decoration(VertexSet d, const OrderedHypergraph& h) {
  auto elems = d.elements();
  if (elems.size() == 1) return h.label(elems[0]);
  std::string s = "{";
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (i) s += ',';
    s += h.label(elems[i]);
  }
  return s + "}";
}

inline std::string to_string(const Construct& t, const OrderedHypergraph& h) {
  std::string s = format_decoration(t.decoration, h);
  if (!t.children.empty()) {
    s += '(';
    for (std::size_t i = 0; i < t.children.size(); ++i) {
      if (i) s += ',';
      s += to_string(t.children[i], h);
    }
    s += ')';
  }
  return s;
}

namespace detail {

class ConstructParser {
 public:
  ConstructParser(std::string_view text, const OrderedHypergraph& h) : text_(text), h_(h) {}

  Construct parse() {
    Construct t = node();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing characters");
    return t;
  }

 private:
  static bool is_special(char c) {
    return c == '{' || c == '}' || c == '(' || c == ')' || c == ',' || std::isspace(static_cast<unsigned char>(c));
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw parse_error("construct literal '" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " +
                      what);
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

  VertexId vertex() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && !is_special(text_[pos_])) ++pos_;
    if (start == pos_) fail("expected a vertex label");
    std::string label(text_.substr(start, pos_ - start));
    auto v = h_.vertex_of(label);
    if (!v) fail("unknown vertex '" + label + "'");
    return *v;
  }

  VertexSet decoration() {
    VertexSet d;
    auto add = [&](VertexId v) {
      if (d.contains(v)) fail("repeated vertex in decoration");
      d.insert(v);
    };
    if (accept('{')) {
      if (accept('}')) fail("empty decoration");
      do add(vertex());
      while (accept(','));
      if (!accept('}')) fail("expected '}'");
    } else {
      add(vertex());
    }
    return d;
  }

  Construct node() {
    Construct t;
    t.decoration = decoration();
    if (accept('(')) {
      do t.children.push_back(node());
      while (accept(','));
      if (!accept(')')) fail("expected ')'");
    }
    return t;
  }

  std::string_view text_;
  const OrderedHypergraph& h_;
  std::size_t pos_ = 0;
};

// Checks the recursive clause at every node; returns the canonical form.
inline Construct validate_node(const OrderedHypergraph& h, const Construct& raw, VertexSet support) {
  if (raw.decoration.empty()) throw validation_error("empty decoration");
  if (!raw.decoration.subset_of(support)) throw validation_error("decoration leaves its expected support");
  Construct out;
  out.decoration = raw.decoration;
  const std::vector<VertexSet> comps = decompose_within(h, support, raw.decoration);
  if (comps.size() != raw.children.size())
    throw validation_error("node has " + std::to_string(raw.children.size()) + " children but removing it leaves " +
                           std::to_string(comps.size()) + " components");
  std::vector<bool> used(comps.size(), false);
  VertexSet seen = raw.decoration;
  for (const Construct& child : raw.children) {
    VertexSet cs;
    for (const NodePath& p : node_paths(child)) {
      VertexSet d = node_at(child, p).decoration;
      if (d.intersects(seen) || d.intersects(cs)) throw validation_error("overlapping decorations");
      cs |= d;
    }
    seen |= cs;
    auto it = std::find(comps.begin(), comps.end(), cs);
    if (it == comps.end()) throw validation_error("child support does not match a connected component");
    used[static_cast<std::size_t>(it - comps.begin())] = true;
    out.children.push_back(validate_node(h, child, cs));
  }
  sort_children(out.children);
  return out;
}

}  // namespace detail

// Parses a raw tree; no validity check beyond syntax.
inline Construct parse_construct(std::string_view text, const OrderedHypergraph& h) {
  return detail::ConstructParser(text, h).parse();
}

/// Returns the canonical form of `raw` if it is a construct of H.
inline Construct validate(const OrderedHypergraph& h, const Construct& raw) {
  if (!is_connected(h)) throw validation_error("constructs require a connected hypergraph");
  return detail::validate_node(h, raw, h.vertices());
}

inline Construct parse_and_validate(std::string_view text, const OrderedHypergraph& h) {
  return validate(h, parse_construct(text, h));
}

// ---------------------------------------------------------------------------
// Enumeration

namespace detail {

class ConstructEnumerator {
 public:
  explicit ConstructEnumerator(const OrderedHypergraph& h, bool constructions_only)
      : h_(h), only_singletons_(constructions_only) {}

  const std::vector<Construct>& of(VertexSet support) {
    auto it = memo_.find(support);
    if (it != memo_.end()) return it->second;
    std::vector<Construct> out;
    auto root = [&](VertexSet y) {
      const std::vector<VertexSet> comps = decompose_within(h_, support, y);
      std::vector<const std::vector<Construct>*> pools;
      for (VertexSet c : comps) pools.push_back(&of(c));
      std::vector<std::size_t> idx(comps.size(), 0);
      while (true) {
        Construct t;
        t.decoration = y;
        for (std::size_t i = 0; i < comps.size(); ++i) t.children.push_back((*pools[i])[idx[i]]);
        out.push_back(std::move(t));
        std::size_t k = 0;
        while (k < idx.size() && ++idx[k] == pools[k]->size()) idx[k++] = 0;
        if (k == idx.size()) break;
      }
    };
    if (only_singletons_) {
      for (VertexId v : support.elements()) root(VertexSet::singleton(v));
    } else {
      for_each_nonempty_subset(support, root);
    }
    std::sort(out.begin(), out.end());
    return memo_.emplace(support, std::move(out)).first->second;
  }

 private:
  const OrderedHypergraph& h_;
  bool only_singletons_;
  std::unordered_map<VertexSet, std::vector<Construct>> memo_;
};

}  // namespace detail

inline void require_connected(const OrderedHypergraph& h) {
  if (!is_connected(h)) throw validation_error("hypergraph is not connected");
}

// All constructs of H, sorted by (dimension, canonical order).
inline std::vector<Construct> all_constructs(const OrderedHypergraph& h, int cap = default_cap) {
  require_capacity(h.size(), cap);
  require_connected(h);
  detail::ConstructEnumerator e(h, false);
  std::vector<Construct> out = e.of(h.vertices());
  std::stable_sort(out.begin(), out.end(),
                   [](const Construct& a, const Construct& b) { return dimension(a) < dimension(b); });
  return out;
}

/// The dimension-0 constructs (polytope vertices), in canonical order.
inline std::vector<Construction> enumerate_constructions(const OrderedHypergraph& h, int cap = default_cap) {
  require_capacity(h.size(), cap);
  require_connected(h);
  detail::ConstructEnumerator e(h, true);
  return e.of(h.vertices());
}

// ---------------------------------------------------------------------------
// Covering relation

struct Contraction {
  Construct result;
  VertexSet parent;  // X
  VertexSet child;   // Y
};

/// Every construct obtained by contracting one parent-child edge (the covers of S).
inline std::vector<Contraction> contractions(const Construct& s) {
  std::vector<Contraction> out;
  for (const NodePath& p : node_paths(s)) {
    const Construct& node = node_at(s, p);
    for (std::size_t i = 0; i < node.children.size(); ++i) {
      const Construct& child = node.children[i];
      Construct merged;
      merged.decoration = node.decoration | child.decoration;
      for (std::size_t j = 0; j < node.children.size(); ++j)
        if (j != i) merged.children.push_back(node.children[j]);
      for (const Construct& g : child.children) merged.children.push_back(g);
      sort_children(merged.children);
      out.push_back({replace_at(s, p, std::move(merged)), node.decoration, child.decoration});
    }
  }
  return out;
}

struct Expansion {
  Construct result;
  VertexSet parent;  // X: the part kept at the split node
  VertexSet child;   // Y: the part pushed into a new child
};

/// Every construct S with S ≺ T, by splitting one node Z into a parent X and a child Y.
inline std::vector<Expansion> expansions(const OrderedHypergraph& h, const Construct& t) {
  std::vector<Expansion> out;
  for (const NodePath& p : node_paths(t)) {
    const Construct& node = node_at(t, p);
    const VertexSet z = node.decoration;
    if (z.size() < 2) continue;
    const VertexSet support = node.support();
    for_each_nonempty_subset(z, [&](VertexSet x) {
      if (x == z) return;
      const VertexSet y = z - x;
      const std::vector<VertexSet> comps = decompose_within(h, support, x);
      auto holder = std::find_if(comps.begin(), comps.end(), [&](VertexSet c) { return c.intersects(y); });
      if (!y.subset_of(*holder)) return;
      Construct split;
      split.decoration = x;
      for (VertexSet c : comps) {
        if (c == *holder) {
          Construct inner;
          inner.decoration = y;
          for (const Construct& ch : node.children)
            if (ch.support().subset_of(c)) inner.children.push_back(ch);
          sort_children(inner.children);
          split.children.push_back(std::move(inner));
        } else {
          auto match = std::find_if(node.children.begin(), node.children.end(),
                                    [&](const Construct& ch) { return ch.support() == c; });
          check_invariant(match != node.children.end(), "expansion: component without a matching subtree");
          split.children.push_back(*match);
        }
      }
      sort_children(split.children);
      out.push_back({replace_at(t, p, std::move(split)), x, y});
    });
  }
  return out;
}

/// All constructs with covering pairs; index pairs are (lower, upper).
struct FaceLattice {
  std::vector<Construct> constructs;
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  std::map<Construct, std::size_t> index;

  std::size_t top() const { return constructs.size() - 1; }
  std::size_t index_of(const Construct& t) const {
    auto it = index.find(t);
    if (it == index.end()) throw domain_error("construct not in lattice");
    return it->second;
  }
};

inline FaceLattice enumerate_constructs(const OrderedHypergraph& h, int cap = default_cap) {
  FaceLattice lattice;
  lattice.constructs = all_constructs(h, cap);
  for (std::size_t i = 0; i < lattice.constructs.size(); ++i) lattice.index.emplace(lattice.constructs[i], i);
  for (std::size_t i = 0; i < lattice.constructs.size(); ++i)
    for (const Contraction& c : contractions(lattice.constructs[i]))
      lattice.covers.emplace_back(i, lattice.index_of(c.result));
  std::sort(lattice.covers.begin(), lattice.covers.end());
  return lattice;
}

inline std::vector<std::size_t> f_vector(const OrderedHypergraph& h, int cap = default_cap) {
  std::vector<std::size_t> f(static_cast<std::size_t>(h.size()), 0);
  for (const Construct& t : all_constructs(h, cap)) ++f.at(static_cast<std::size_t>(dimension(t)));
  return f;
}

// Reflexive-transitive closure of the covering relation: is S a face of T?
inline bool is_subface(const Construct& s, const Construct& t) {
  if (s == t) return true;
  if (dimension(s) >= dimension(t)) return false;
  for (const Contraction& c : contractions(s))
    if (is_subface(c.result, t)) return true;
  return false;
}

}  // namespace nestorw
