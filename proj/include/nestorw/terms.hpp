#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nestorw/construct.hpp"
#include "nestorw/errors.hpp"
#include "nestorw/hypergraph.hpp"

namespace nestorw {

// ---------------------------------------------------------------------------
// Signatures

enum class SignatureKind { constructs, constructions };

struct FunctionSymbol {
  VertexSet head;                  // first component: X, or {x} for constructions
  VertexSet sort;                  // output sort Y
  std::vector<VertexSet> insorts;  // components of Y minus head, in decomposition order

  std::size_t arity() const { return insorts.size(); }
};

/// Many-sorted signature of a hypergraph. Sorts and variables are both the
/// connected subsets; a variable is identified with its sort.
struct Signature {
  SignatureKind kind = SignatureKind::constructs;
  std::vector<VertexSet> sorts;
  std::vector<FunctionSymbol> symbols;

  const FunctionSymbol* find(VertexSet head, VertexSet sort) const {
    auto it = std::find_if(symbols.begin(), symbols.end(),
                           [&](const FunctionSymbol& f) { return f.head == head && f.sort == sort; });
    return it == symbols.end() ? nullptr : &*it;
  }
  bool is_sort(VertexSet s) const { return std::find(sorts.begin(), sorts.end(), s) != sorts.end(); }
};

namespace detail {

inline Signature make_signature(const OrderedHypergraph& h, SignatureKind kind) {
  require_connected(h);
  Signature sig;
  sig.kind = kind;
  sig.sorts = h.saturation();
  for (VertexSet y : sig.sorts) {
    auto add = [&](VertexSet x) { sig.symbols.push_back({x, y, decompose_within(h, y, x)}); };
    if (kind == SignatureKind::constructs) {
      std::vector<VertexSet> heads;
      for_each_nonempty_subset(y, [&](VertexSet x) { heads.push_back(x); });
      std::sort(heads.begin(), heads.end(), LexLess{});
      for (VertexSet x : heads) add(x);
    } else {
      for (VertexId v : y.elements()) add(VertexSet::singleton(v));
    }
  }
  return sig;
}

}  // namespace detail

/// Symbols (X,Y) with X a non-empty subset of a connected Y.
inline Signature signature_constructs(const OrderedHypergraph& h) {
  return detail::make_signature(h, SignatureKind::constructs);
}

/// Symbols (x,Y) with x in a connected Y.
inline Signature signature_constructions(const OrderedHypergraph& h) {
  return detail::make_signature(h, SignatureKind::constructions);
}

// ---------------------------------------------------------------------------
// Terms, contexts, substitutions

struct Term {
  enum class Kind { variable, application, hole };

  Kind kind = Kind::variable;
  VertexSet head;  // application only
  VertexSet sort;
  int hole_label = 0;  // hole only: 1 or 2 in two-hole contexts, 0 otherwise
  std::vector<Term> args;

  static Term variable(VertexSet sort) { return {Kind::variable, {}, sort, 0, {}}; }
  static Term apply(VertexSet head, VertexSet sort, std::vector<Term> args = {}) {
    return {Kind::application, head, sort, 0, std::move(args)};
  }
  static Term hole(VertexSet sort, int label = 0) { return {Kind::hole, {}, sort, label, {}}; }

  bool is_variable() const { return kind == Kind::variable; }
  bool is_application() const { return kind == Kind::application; }
  bool is_hole() const { return kind == Kind::hole; }

  friend bool operator==(const Term& a, const Term& b) {
    return a.kind == b.kind && a.head == b.head && a.sort == b.sort && a.hole_label == b.hole_label &&
           a.args == b.args;
  }
};

// Variables in left-to-right order, with repetitions.
inline void collect_variables(const Term& t, std::vector<VertexSet>& out) {
  if (t.is_variable()) out.push_back(t.sort);
  for (const Term& a : t.args) collect_variables(a, out);
}

inline std::vector<VertexSet> variables(const Term& t) {
  std::vector<VertexSet> out;
  collect_variables(t, out);
  return out;
}

inline bool is_closed(const Term& t) { return variables(t).empty(); }

inline bool is_linear(const Term& t) {
  std::vector<VertexSet> vs = variables(t);
  std::sort(vs.begin(), vs.end(), LexLess{});
  return std::adjacent_find(vs.begin(), vs.end()) == vs.end();
}

inline int count_holes(const Term& t) {
  int k = t.is_hole() ? 1 : 0;
  for (const Term& a : t.args) k += count_holes(a);
  return k;
}

/// Sort-correctness against a signature; holes are accepted at any declared sort.
inline bool well_sorted(const Signature& sig, const Term& t) {
  switch (t.kind) {
    case Term::Kind::variable:
    case Term::Kind::hole:
      return sig.is_sort(t.sort);
    case Term::Kind::application: {
      const FunctionSymbol* f = sig.find(t.head, t.sort);
      if (f == nullptr || f->arity() != t.args.size()) return false;
      for (std::size_t i = 0; i < t.args.size(); ++i)
        if (t.args[i].sort != f->insorts[i] || !well_sorted(sig, t.args[i])) return false;
      return true;
    }
  }
  return false;
}

/// Finite sort-preserving map from variables to terms.
class Substitution {
 public:
  void bind(VertexSet variable, Term value) {
    if (value.sort != variable) throw domain_error("substitution must preserve sorts");
    map_.insert_or_assign(variable.bits(), std::move(value));
  }
  const Term* lookup(VertexSet variable) const {
    auto it = map_.find(variable.bits());
    return it == map_.end() ? nullptr : &it->second;
  }
  std::size_t size() const { return map_.size(); }

  Term apply(const Term& t) const {
    if (t.is_variable()) {
      const Term* v = lookup(t.sort);
      return v ? *v : t;
    }
    Term out = t;
    for (Term& a : out.args) a = apply(a);
    return out;
  }

 private:
  std::map<std::uint64_t, Term> map_;
};

/// A term with one hole (or two labelled holes 1 and 2).
class Context {
 public:
  explicit Context(Term body) : body_(std::move(body)) {
    holes_ = count_holes(body_);
    if (holes_ != 1 && holes_ != 2) throw domain_error("a context has one or two holes");
    if (holes_ == 2 && !(has_label(body_, 1) && has_label(body_, 2)))
      throw domain_error("two-hole contexts need holes labelled 1 and 2");
  }

  static Context trivial(VertexSet sort) { return Context(Term::hole(sort)); }

  const Term& body() const { return body_; }
  int holes() const { return holes_; }
  bool is_trivial() const { return body_.is_hole(); }

  Term fill(const Term& t) const {
    if (holes_ != 1) throw domain_error("context has two holes");
    return fill_impl(body_, &t, nullptr);
  }
  Term fill(const Term& first, const Term& second) const {
    if (holes_ != 2) throw domain_error("context has one hole");
    return fill_impl(body_, &first, &second);
  }

 private:
  static bool has_label(const Term& t, int label) {
    if (t.is_hole()) return t.hole_label == label;
    return std::any_of(t.args.begin(), t.args.end(), [&](const Term& a) { return has_label(a, label); });
  }

  static Term fill_impl(const Term& t, const Term* first, const Term* second) {
    if (t.is_hole()) {
      const Term* with = (second != nullptr && t.hole_label == 2) ? second : first;
      if (with->sort != t.sort) throw domain_error("hole filled with a term of the wrong sort");
      return *with;
    }
    Term out = t;
    for (Term& a : out.args) a = fill_impl(a, first, second);
    return out;
  }

  Term body_;
  int holes_ = 0;
};

// Replaces every variable Y by the constant (Y,Y).
inline Term close(const Term& t) {
  if (t.is_variable()) return Term::apply(t.sort, t.sort);
  Term out = t;
  for (Term& a : out.args) a = close(a);
  return out;
}

// ---------------------------------------------------------------------------
// Literal syntax: `({2},{1,2,3})(({1},{1}),({3},{3}))`; variables are bare sets.

inline std::string format_set(VertexSet s, const OrderedHypergraph& h) {
  std::string out = "{";
  auto el = s.elements();
  for (std::size_t i = 0; i < el.size(); ++i) {
    if (i) out += ',';
    out += h.label(el[i]);
  }
  return out + "}";
}

inline std::string to_string(const Term& t, const OrderedHypergraph& h) {
  switch (t.kind) {
    case Term::Kind::variable:
      return format_set(t.sort, h);
    case Term::Kind::hole:
      return t.hole_label ? "[-]^" + std::to_string(t.hole_label) : std::string("[-]");
    case Term::Kind::application: {
      std::string s = "(" + format_set(t.head, h) + "," + format_set(t.sort, h) + ")";
      if (!t.args.empty()) {
        s += '(';
        for (std::size_t i = 0; i < t.args.size(); ++i) {
          if (i) s += ',';
          s += to_string(t.args[i], h);
        }
        s += ')';
      }
      return s;
    }
  }
  return {};
}

namespace detail {

class TermParser {
 public:
  TermParser(std::string_view text, const OrderedHypergraph& h) : text_(text), h_(h) {}

  Term parse() {
    Term t = term();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing characters");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw parse_error("term literal '" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " + what);
  }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  VertexSet set() {
    expect('{');
    VertexSet s;
    do {
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::string_view("{}(),[] \t\n").find(text_[pos_]) == std::string_view::npos)
        ++pos_;
      if (start == pos_) fail("expected a vertex label");
      auto v = h_.vertex_of(std::string(text_.substr(start, pos_ - start)));
      if (!v) fail("unknown vertex");
      s.insert(*v);
    } while (accept(','));
    expect('}');
    return s;
  }

  Term term() {
    if (peek('{')) return Term::variable(set());
    expect('(');
    VertexSet head = set();
    expect(',');
    VertexSet sort = set();
    expect(')');
    Term t = Term::apply(head, sort);
    if (accept('(')) {
      do t.args.push_back(term());
      while (accept(','));
      expect(')');
    }
    return t;
  }

  std::string_view text_;
  const OrderedHypergraph& h_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Term parse_term(std::string_view text, const OrderedHypergraph& h) {
  return detail::TermParser(text, h).parse();
}

// ---------------------------------------------------------------------------
// Vertex relabelling of constructs and terms

template <typename F>
Construct map_vertices(const Construct& t, F&& f) {
  Construct out;
  out.decoration = f(t.decoration);
  for (const Construct& c : t.children) out.children.push_back(map_vertices(c, f));
  sort_children(out.children);
  return out;
}

template <typename F>
Term map_vertices(const Term& t, F&& f) {
  Term out = t;
  out.head = t.is_application() ? f(t.head) : t.head;
  out.sort = f(t.sort);
  for (Term& a : out.args) a = map_vertices(a, f);
  return out;
}

inline Construct lift(const Construct& t, const SubHypergraph& sub) {
  return map_vertices(t, [&](VertexSet s) { return sub.lift(s); });
}
inline Construct lower(const Construct& t, const SubHypergraph& sub) {
  return map_vertices(t, [&](VertexSet s) { return sub.lower(s); });
}
inline Term lift(const Term& t, const SubHypergraph& sub) {
  return map_vertices(t, [&](VertexSet s) { return sub.lift(s); });
}

// `inner` relabels a subset of `outer.graph`; the result embeds it directly into outer's parent.
inline SubHypergraph compose(const SubHypergraph& outer, const SubHypergraph& inner) {
  SubHypergraph out{inner.graph, {}};
  for (VertexId v : inner.parent_vertex) out.parent_vertex.push_back(outer.parent_vertex.at(v - 1));
  return out;
}

// ---------------------------------------------------------------------------
// Terms <-> constructs

/// Closed term of sort H to construct, by projecting (X,Y) to X.
inline Construct chi_closed(const OrderedHypergraph& h, const Term& t) {
  if (t.sort != h.vertices()) throw domain_error("chi: term does not have the top sort");
  auto project = [](auto&& self, const Term& u) -> Construct {
    if (!u.is_application()) throw domain_error("chi: closed term expected");
    Construct c;
    c.decoration = u.head;
    for (const Term& a : u.args) c.children.push_back(self(self, a));
    return c;
  };
  return validate(h, project(project, t));
}

// Annotates every node with its support.
inline Term chi_closed_inverse(const Construct& t) {
  Term out = Term::apply(t.decoration, t.support());
  for (const Construct& c : t.children) out.args.push_back(chi_closed_inverse(c));
  return out;
}

struct OpenConstruct {
  SubHypergraph shape;  // reconnected restriction to X
  Construct construct;  // in the shape's own vertex numbering
};

/// Term of sort H whose variables cover H minus X, to a construct of the reconnected restriction to X.
inline OpenConstruct chi_open(const OrderedHypergraph& h, const Term& t) {
  if (t.sort != h.vertices()) throw domain_error("chi: term does not have the top sort");
  VertexSet covered;
  for (VertexSet v : variables(t)) {
    if (v.intersects(covered)) throw validation_error("chi: overlapping variables");
    covered |= v;
  }
  const VertexSet x = h.vertices() - covered;
  if (x.empty()) throw validation_error("chi: variables cover every vertex");
  auto project = [](auto&& self, const Term& u) -> Construct {
    Construct c;
    c.decoration = u.head;
    for (const Term& a : u.args) {
      if (a.is_application()) c.children.push_back(self(self, a));
      else if (a.is_hole()) throw domain_error("chi: holes are not terms");
    }
    return c;
  };
  if (!t.is_application()) throw validation_error("chi: a variable of the top sort leaves nothing");
  SubHypergraph shape = reconnected_restrict(h, x);
  Construct projected = lower(project(project, t), shape);
  Construct valid = validate(shape.graph, projected);
  return {std::move(shape), std::move(valid)};
}

namespace detail {

// Open term of sort `support` for a construct whose decorations lie in x (parent ids).
inline Term open_term(const OrderedHypergraph& h, VertexSet support, VertexSet x, const Construct& node) {
  Term out = Term::apply(node.decoration, support);
  std::vector<bool> used(node.children.size(), false);
  for (VertexSet comp : decompose_within(h, support, node.decoration)) {
    if (!comp.intersects(x)) {
      out.args.push_back(Term::variable(comp));
      continue;
    }
    auto it = std::find_if(node.children.begin(), node.children.end(),
                           [&](const Construct& c) { return c.support() == (comp & x); });
    if (it == node.children.end()) throw validation_error("chi inverse: construct does not fit the hypergraph");
    used[static_cast<std::size_t>(it - node.children.begin())] = true;
    out.args.push_back(open_term(h, comp, x, *it));
  }
  if (std::find(used.begin(), used.end(), false) != used.end())
    throw validation_error("chi inverse: construct does not fit the hypergraph");
  return out;
}

}  // namespace detail

/// Inverse of chi_open: a construct of the reconnected restriction to X (its own numbering) to an open term.
inline Term chi_open_inverse(const OrderedHypergraph& h, VertexSet x, const Construct& shape_construct) {
  require_nonempty_subset(h, x);
  SubHypergraph shape = reconnected_restrict(h, x);
  return detail::open_term(h, h.vertices(), x, lift(shape_construct, shape));
}

// ---------------------------------------------------------------------------
// X-faces, pruning and grafting

/// A 2-dimensional construct whose unique non-singleton node is a 3-set X.
struct XFace {
  Construct face;
  VertexSet x;
  NodePath path;                  // to the X node
  VertexSet support;              // supp(occ_T(X))
  SubHypergraph shape;            // reconnected restriction of H_support to X, embedded in H
  std::vector<Construct> grafts;  // children of the X node
};

inline XFace x_face(const OrderedHypergraph& h, const Construct& t) {
  if (dimension(t) != 2) throw domain_error("not an X-face: dimension is not 2");
  std::optional<NodePath> where;
  for (NodePath& p : node_paths(t)) {
    if (node_at(t, p).decoration.size() > 1) {
      if (where || node_at(t, p).decoration.size() != 3) throw domain_error("not an X-face: type A 2-face");
      where = std::move(p);
    }
  }
  const Construct& node = node_at(t, *where);
  XFace f;
  f.face = t;
  f.x = node.decoration;
  f.path = *where;
  f.support = node.support();
  f.grafts = node.children;
  SubHypergraph local = restrict_plain(h, f.support);
  f.shape = compose(local, reconnected_restrict(local.graph, local.lower(f.x)));
  return f;
}

/// ψ: prune every node not contained in X; the result is a face of the shape (shape numbering).
inline Construct psi(const XFace& f, const Construct& s) {
  auto prune = [&](auto&& self, const Construct& n) -> std::vector<Construct> {
    std::vector<Construct> kept;
    for (const Construct& c : n.children) {
      auto sub = self(self, c);
      kept.insert(kept.end(), std::make_move_iterator(sub.begin()), std::make_move_iterator(sub.end()));
    }
    if (n.decoration.subset_of(f.x)) {
      Construct keep;
      keep.decoration = n.decoration;
      keep.children = std::move(kept);
      return {std::move(keep)};
    }
    if (n.decoration.intersects(f.x)) throw domain_error("psi: node straddles X");
    return kept;
  };
  std::vector<Construct> roots = prune(prune, s);
  if (roots.size() != 1) throw domain_error("psi: not a subface of the X-face");
  return validate(f.shape.graph, lower(roots.front(), f.shape));
}

/// φ: graft the subtrees hanging below X back onto a face of the shape.
inline Construct phi(const OrderedHypergraph& h, const XFace& f, const Construct& shape_face) {
  auto build = [&](auto&& self, VertexSet support, const Construct& node) -> Construct {
    Construct out;
    out.decoration = node.decoration;
    for (VertexSet comp : decompose_within(h, support, node.decoration)) {
      if (comp.intersects(f.x)) {
        auto it = std::find_if(node.children.begin(), node.children.end(),
                               [&](const Construct& c) { return c.support() == (comp & f.x); });
        if (it == node.children.end()) throw domain_error("phi: not a face of the shape");
        out.children.push_back(self(self, comp, *it));
      } else {
        auto g = std::find_if(f.grafts.begin(), f.grafts.end(),
                              [&](const Construct& c) { return c.support() == comp; });
        check_invariant(g != f.grafts.end(), "phi: component without a graft");
        out.children.push_back(*g);
      }
    }
    sort_children(out.children);
    return out;
  };
  return replace_at(f.face, f.path, build(build, f.support, lift(shape_face, f.shape)));
}

/// Decomposition of the X-face's term as C[(X,K)(t_1..t_n)] with σ(U_i) = t_i.
struct Instantiation {
  Context context;
  Substitution sigma;
  Term focus;

  // ξ(t') = C[σ(t')], for an open term t' of sort K in parent numbering.
  Term apply(const Term& open_term) const { return context.fill(sigma.apply(open_term)); }
};

inline Instantiation xi_decompose(const OrderedHypergraph& h, const Construct& t) {
  XFace f = x_face(h, t);
  Term whole = chi_closed_inverse(f.face);
  auto cut = [&](auto&& self, const Term& u, std::size_t depth) -> Term {
    if (depth == f.path.size()) return Term::hole(u.sort);
    Term copy = u;
    copy.args.at(f.path[depth]) = self(self, u.args[f.path[depth]], depth + 1);
    return copy;
  };
  const Term* focus = &whole;
  for (std::size_t i : f.path) focus = &focus->args.at(i);
  Substitution sigma;
  const std::vector<VertexSet> us = decompose_within(h, f.support, f.x);
  check_invariant(us.size() == focus->args.size(), "xi: arity mismatch at X");
  for (std::size_t i = 0; i < us.size(); ++i) sigma.bind(us[i], focus->args[i]);
  return {Context(cut(cut, whole, 0)), std::move(sigma), *focus};
}

}  // namespace nestorw
