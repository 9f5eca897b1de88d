#pragma once

#include <fstream>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nestorw/families.hpp"
#include "nestorw/io.hpp"
#include "nestorw/rewrite.hpp"

namespace nestorw::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int { ok = 0, input_error = 1, capacity = 2, internal = 3 };

struct GlobalOptions {
  std::string orient = "promote-smaller";
  int cap = default_cap;
  bool atomize = false;
  std::string format;  // empty: subcommand default
};

/// Exactly one of: a file path, or a family to generate.
struct InputSpec {
  std::string path;
  std::string family;
  int dimension = -1;
  std::string tree;
  std::vector<std::string> edge_order;

  void attach(CLI::App* sub) {
    sub->add_option("input", path, ".hg or .json hypergraph file");
    sub->add_option("--family", family, "generate the input: simplex, cube, associahedron, ...");
    sub->add_option("--dim", dimension, "dimension of the generated input");
    sub->add_option("--tree", tree, "planar tree for operahedra, e.g. a(z:b(x:c,y:d),u:e)");
    sub->add_option("--edge-order", edge_order, "vertex order of an operahedron")->delimiter(',');
  }
};

namespace detail {

inline std::string set_string(VertexSet s, const OrderedHypergraph& h) { return format_set(s, h); }

inline std::string edges_string(const OrderedHypergraph& g) {
  std::string s = "{";
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    if (i) s += ',';
    s += format_set(g.edges()[i], g);
  }
  return s + "}";
}

inline FamilyDescriptor descriptor(const std::string& family, int dimension, const std::string& tree,
                                   const std::vector<std::string>& edge_order) {
  FamilyDescriptor d;
  d.kind = parse_family(family);
  if (d.kind == FamilyKind::graph || d.kind == FamilyKind::hypergraph)
    throw domain_error("'" + family + "' is not a generated family; pass a file instead");
  if (d.kind == FamilyKind::operahedron) {
    if (tree.empty()) throw domain_error("operahedron needs --tree");
    d.tree = parse_planar_tree(tree);
    d.edge_order = edge_order;
  } else {
    if (!tree.empty() || !edge_order.empty()) throw domain_error("--tree and --edge-order apply to operahedra only");
    if (dimension < 0) throw domain_error("missing dimension");
    d.dimension = dimension;
  }
  return d;
}

inline OrderedHypergraph load(const InputSpec& in, const GlobalOptions& g) {
  const bool from_file = !in.path.empty(), generated = !in.family.empty();
  if (from_file == generated) throw domain_error("give exactly one input: a file or --family");
  if (from_file && (in.dimension >= 0 || !in.tree.empty() || !in.edge_order.empty()))
    throw domain_error("--dim, --tree and --edge-order need --family");
  OrderedHypergraph h = from_file ? load_hypergraph(in.path, g.atomize)
                                  : generate(descriptor(in.family, in.dimension, in.tree, in.edge_order));
  require_capacity(h.size(), g.cap);
  require_connected(h);
  return h;
}

inline std::string pick_format(const GlobalOptions& g, const std::string& fallback,
                               std::initializer_list<const char*> allowed, const std::string& command) {
  const std::string f = g.format.empty() ? fallback : g.format;
  for (const char* a : allowed)
    if (f == a) return f;
  throw domain_error("format '" + f + "' is not supported by " + command);
}

inline Json step_json(const RewriteStep& s, const OrderedHypergraph& h) {
  return Json{{"source", to_string(s.source, h)},
              {"target", to_string(s.target, h)},
              {"parent", h.label(s.parent)},
              {"child", h.label(s.child)}};
}

inline std::string step_label(const RewriteStep& s, const OrderedHypergraph& h) {
  return h.label(s.parent) + "/" + h.label(s.child);
}

// "3/2" or "-1" -> numerator, denominator
inline std::pair<std::int64_t, std::int64_t> parse_rational(const std::string& s) {
  try {
    std::size_t used = 0;
    const auto slash = s.find('/');
    std::int64_t p = std::stoll(s.substr(0, slash), &used);
    if (used != (slash == std::string::npos ? s.size() : slash)) throw parse_error("");
    std::int64_t q = 1;
    if (slash != std::string::npos) {
      const std::string den = s.substr(slash + 1);
      q = std::stoll(den, &used);
      if (used != den.size() || q <= 0) throw parse_error("");
    }
    return {p, q};
  } catch (const std::exception&) {
    throw parse_error("invalid rational '" + s + "'");
  }
}

/// Clears denominators; positive scaling keeps every sign.
inline std::vector<std::int64_t> scale_rationals(const std::vector<std::string>& mu) {
  std::vector<std::pair<std::int64_t, std::int64_t>> r;
  std::int64_t l = 1;
  for (const std::string& s : mu) {
    r.push_back(parse_rational(s));
    l = std::lcm(l, r.back().second);
  }
  std::vector<std::int64_t> out;
  for (auto [p, q] : r) out.push_back(p * (l / q));
  return out;
}

inline void write_dot_digraph(std::ostream& out, const std::string& name, const std::vector<std::string>& nodes,
                              const std::vector<std::pair<std::size_t, std::size_t>>& arcs,
                              const std::vector<std::string>& labels = {}) {
  out << "digraph " << name << " {\n";
  for (const std::string& n : nodes) out << "  " << dot_quote(n) << ";\n";
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    out << "  " << dot_quote(nodes[arcs[i].first]) << " -> " << dot_quote(nodes[arcs[i].second]);
    if (!labels.empty()) out << " [label=" << dot_quote(labels[i]) << "]";
    out << ";\n";
  }
  out << "}\n";
}

}  // namespace detail

/// Runs one invocation; `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Term rewriting workbench for nestohedra", "nestorw"};
  app.require_subcommand(1);
  app.fallthrough();
  GlobalOptions g;
  app.add_option("--orient", g.orient, "promote-smaller or promote-larger")
      ->check(CLI::IsMember({"promote-smaller", "promote-larger"}));
  app.add_option("--cap", g.cap, "largest vertex count for enumerations")->check(CLI::Range(1, max_vertices));
  app.add_flag("--atomize", g.atomize, "insert missing singletons");
  app.add_option("--format", g.format, "text, json, dot, csv or hg, per subcommand");

  std::function<void()> action;
  auto analysis = [&](const std::string& name, const std::string& help, InputSpec& in) {
    CLI::App* sub = app.add_subcommand(name, help);
    in.attach(sub);
    return sub;
  };

  // faces
  InputSpec faces_in;
  analysis("faces", "f-vector and faces of the nestohedron", faces_in)->callback([&] {
    action = [&] {
      OrderedHypergraph h = detail::load(faces_in, g);
      const std::string f = detail::pick_format(g, "text", {"text", "json", "dot"}, "faces");
      FaceLattice l = enumerate_constructs(h, g.cap);
      std::vector<std::size_t> fv(static_cast<std::size_t>(h.size()), 0);
      for (const Construct& t : l.constructs) ++fv[static_cast<std::size_t>(dimension(t))];
      std::vector<std::string> names;
      for (const Construct& t : l.constructs) names.push_back(to_string(t, h));
      if (f == "dot") return detail::write_dot_digraph(out, "faces", names, l.covers);
      if (f == "json") {
        Json faces = Json::array();
        for (std::size_t i = 0; i < names.size(); ++i)
          faces.push_back({{"construct", names[i]}, {"dimension", dimension(l.constructs[i])}});
        Json covers = Json::array();
        for (auto [a, b] : l.covers) covers.push_back({names[a], names[b]});
        out << Json{{"f_vector", fv}, {"faces", faces}, {"covers", covers}}.dump(2) << '\n';
        return;
      }
      out << "f-vector: (";
      for (std::size_t i = 0; i < fv.size(); ++i) out << (i ? "," : "") << fv[i];
      out << ")\n";
      for (std::size_t i = 0; i < names.size(); ++i) out << dimension(l.constructs[i]) << '\t' << names[i] << '\n';
    };
  });

  // vertices
  InputSpec vertices_in;
  analysis("vertices", "constructions, the vertices of the nestohedron", vertices_in)->callback([&] {
    action = [&] {
      OrderedHypergraph h = detail::load(vertices_in, g);
      const std::string f = detail::pick_format(g, "text", {"text", "json"}, "vertices");
      Json list = Json::array();
      for (const Construction& s : enumerate_constructions(h, g.cap)) list.push_back(to_string(s, h));
      if (f == "json") {
        out << Json{{"count", list.size()}, {"constructions", list}}.dump(2) << '\n';
        return;
      }
      for (const auto& s : list) out << s.get<std::string>() << '\n';
    };
  });

  // rewrite
  InputSpec rewrite_in;
  std::string from;
  CLI::App* rewrite = analysis("rewrite", "rewrite a construction to its normal form", rewrite_in);
  rewrite->add_option("--from", from, "construction literal, e.g. 3(2(1))")->required();
  rewrite->callback([&] {
    action = [&] {
      OrderedHypergraph h = detail::load(rewrite_in, g);
      const std::string f = detail::pick_format(g, "text", {"text", "json"}, "rewrite");
      Construction s = parse_and_validate(from, h);
      if (!s.is_construction()) throw validation_error("'" + from + "' is not a construction");
      NormalForm nf = normal_form(h, s, parse_orientation(g.orient));
      if (f == "json") {
        Json steps = Json::array();
        for (const RewriteStep& st : nf.trace) steps.push_back(detail::step_json(st, h));
        out << Json{{"orientation", g.orient}, {"from", to_string(s, h)}, {"trace", steps},
                    {"normal_form", to_string(nf.result, h)}}
                   .dump(2)
            << '\n';
        return;
      }
      out << to_string(s, h) << '\n';
      for (const RewriteStep& st : nf.trace)
        out << "-> " << to_string(st.target, h) << "  [" << detail::step_label(st, h) << "]\n";
      out << "normal form: " << to_string(nf.result, h) << '\n';
    };
  });

  // poset
  InputSpec poset_in;
  analysis("poset", "flip digraph on constructions", poset_in)->callback([&] {
    action = [&] {
      OrderedHypergraph h = detail::load(poset_in, g);
      const std::string f = detail::pick_format(g, "text", {"text", "json", "dot"}, "poset");
      FlipDigraph d = flip_digraph(h, parse_orientation(g.orient), g.cap);
      std::vector<std::string> names, labels;
      for (const Construction& s : d.vertices) names.push_back(to_string(s, h));
      for (const RewriteStep& st : d.steps) labels.push_back(detail::step_label(st, h));
      std::vector<bool> has_in(names.size(), false), has_out(names.size(), false);
      for (auto [a, b] : d.arcs) has_out[a] = has_in[b] = true;
      std::vector<std::string> sources, sinks;
      for (std::size_t i = 0; i < names.size(); ++i) {
        if (!has_in[i]) sources.push_back(names[i]);
        if (!has_out[i]) sinks.push_back(names[i]);
      }
      if (f == "dot") return detail::write_dot_digraph(out, "flips", names, d.arcs, labels);
      if (f == "json") {
        Json arcs = Json::array();
        for (const RewriteStep& st : d.steps) arcs.push_back(detail::step_json(st, h));
        out << Json{{"orientation", g.orient}, {"vertices", names}, {"edges", arcs}, {"sources", sources},
                    {"sinks", sinks}}
                   .dump(2)
            << '\n';
        return;
      }
      out << "orientation: " << g.orient << "\nvertices: " << names.size() << "\nedges: " << d.arcs.size() << '\n';
      for (std::size_t i = 0; i < d.arcs.size(); ++i)
        out << names[d.arcs[i].first] << " -> " << names[d.arcs[i].second] << "  [" << labels[i] << "]\n";
      for (const auto& s : sources) out << "source: " << s << '\n';
      for (const auto& s : sinks) out << "sink: " << s << '\n';
    };
  });

  // facial-order
  InputSpec facial_in;
  analysis("facial-order", "facial steps between faces and their acyclicity", facial_in)->callback([&] {
    action = [&] {
      OrderedHypergraph h = detail::load(facial_in, g);
      const std::string f = detail::pick_format(g, "text", {"text", "json", "dot"}, "facial-order");
      FacialOrderReport r = facial_order_report(h, g.cap);
      std::vector<std::string> names;
      for (const Construct& t : r.lattice.constructs) names.push_back(to_string(t, h));
      if (f == "dot") return detail::write_dot_digraph(out, "facial", names, r.arcs);
      std::vector<std::string> cycle;
      if (r.cycle)
        for (std::size_t i : *r.cycle) cycle.push_back(names[i]);
      if (f == "json") {
        Json arcs = Json::array();
        for (auto [a, b] : r.arcs) arcs.push_back({names[a], names[b]});
        out << Json{{"acyclic", r.acyclic()}, {"faces", names.size()}, {"arcs", arcs},
                    {"unoriented_covers", r.unoriented_covers}, {"cycle", cycle}}
                   .dump(2)
            << '\n';
        return;
      }
      out << "acyclic: " << (r.acyclic() ? "true" : "false") << "\nfaces: " << names.size()
          << "\noriented covers: " << r.arcs.size() << "\nunoriented covers: " << r.unoriented_covers << '\n';
      for (auto [a, b] : r.arcs) out << names[a] << " -> " << names[b] << '\n';
      if (!cycle.empty()) {
        out << "cycle:";
        for (const auto& c : cycle) out << ' ' << c;
        out << '\n';
      }
    };
  });

  // confluence
  InputSpec confluence_in;
  analysis("confluence", "termination, normal forms and local diagrams", confluence_in)->callback([&] {
    action = [&] {
      OrderedHypergraph h = detail::load(confluence_in, g);
      const std::string f = detail::pick_format(g, "text", {"text", "json"}, "confluence");
      ConfluenceReport r = confluence_report(h, parse_orientation(g.orient), g.cap);
      std::vector<std::string> sinks;
      for (const Construction& s : r.sinks) sinks.push_back(to_string(s, h));
      const std::vector<DiagramClass> classes{DiagramClass::a1, DiagramClass::a2, DiagramClass::b_sibling,
                                              DiagramClass::b_chain};
      if (f == "json") {
        Json diagrams = Json::array();
        for (const LocalDiagram& d : r.diagrams)
          diagrams.push_back({{"peak", to_string(d.peak, h)},
                              {"left", detail::step_json(d.left, h)},
                              {"right", detail::step_json(d.right, h)},
                              {"class", to_string(d.cls)},
                              {"type", is_type_b(d.cls) ? "b" : "a"},
                              {"face", to_string(d.face, h)},
                              {"shape", to_string(d.shape.tag)},
                              {"joined", d.joined},
                              {"join", to_string(d.join, h)}});
        Json counts = Json::object();
        for (DiagramClass c : classes) counts[to_string(c)] = r.count(c);
        out << Json{{"orientation", g.orient},
                    {"constructions", r.constructions},
                    {"edges", r.edges},
                    {"terminating", r.terminating},
                    {"unique_normal_forms", r.unique_normal_forms},
                    {"sinks", sinks},
                    {"class_counts", counts},
                    {"census", {{"type_a", r.census.type_a}, {"type_b", r.census.type_b}}},
                    {"census_matches", r.census_matches()},
                    {"confluent", r.confluent()},
                    {"diagrams", diagrams}}
                   .dump(2)
            << '\n';
        return;
      }
      auto yn = [](bool b) { return b ? "true" : "false"; };
      out << "orientation: " << g.orient << "\nconstructions: " << r.constructions << "\nedges: " << r.edges
          << "\nterminating: " << yn(r.terminating) << "\nunique normal forms: " << yn(r.unique_normal_forms) << '\n';
      for (const auto& s : sinks) out << "sink: " << s << '\n';
      out << "local diagrams: " << r.diagrams.size() << " (";
      for (std::size_t i = 0; i < classes.size(); ++i)
        out << (i ? ", " : "") << to_string(classes[i]) << ' ' << r.count(classes[i]);
      out << ")\n2-faces: type A " << r.census.type_a << ", type B " << r.census.type_b
          << "\ncensus matches: " << yn(r.census_matches()) << "\nconfluent: " << yn(r.confluent()) << '\n';
      for (const LocalDiagram& d : r.diagrams)
        out << "peak " << to_string(d.peak, h) << ": [" << detail::step_label(d.left, h) << "] "
            << to_string(d.left.target, h) << " | [" << detail::step_label(d.right, h) << "] "
            << to_string(d.right.target, h) << "  " << to_string(d.cls) << ' ' << to_string(d.shape.tag)
            << (d.joined ? "  joined at " + to_string(d.join, h) : std::string("  not joined")) << '\n';
    };
  });

  // critical-pairs
  InputSpec critical_in;
  analysis("critical-pairs", "shapes of the type-B critical pairs", critical_in)->callback([&] {
    action = [&] {
      OrderedHypergraph h = detail::load(critical_in, g);
      const std::string f = detail::pick_format(g, "text", {"text", "json"}, "critical-pairs");
      std::vector<CriticalShape> shapes = critical_pair_shapes(h, g.cap);
      if (f == "json") {
        Json list = Json::array();
        for (const CriticalShape& s : shapes)
          list.push_back({{"Y", detail::set_string(s.y, h)},
                          {"X", detail::set_string(s.x, h)},
                          {"tag", to_string(s.tag)},
                          {"shape", detail::edges_string(s.shape.graph)}});
        out << Json{{"shapes", list}}.dump(2) << '\n';
        return;
      }
      for (const CriticalShape& s : shapes)
        out << "Y=" << detail::set_string(s.y, h) << " X=" << detail::set_string(s.x, h) << ' ' << to_string(s.tag)
            << ' ' << detail::edges_string(s.shape.graph) << '\n';
    };
  });

  // coordinates
  InputSpec coordinates_in;
  std::vector<std::string> mu;
  CLI::App* coords = analysis("coordinates", "vertex coordinates in the Minkowski sum", coordinates_in);
  coords->add_option("--mu", mu, "linear functional to test, e.g. 3,2,1 or 1/2,0,-1")->delimiter(',');
  coords->callback([&] {
    action = [&] {
      OrderedHypergraph h = detail::load(coordinates_in, g);
      const std::string f = detail::pick_format(g, "text", {"text", "json", "csv"}, "coordinates");
      std::vector<VertexCoordinates> table = postnikov_vertex_map(h, g.cap);
      std::optional<TerminationVerdict> verdict;
      if (!mu.empty()) verdict = check_termination(h, parse_orientation(g.orient), detail::scale_rationals(mu), g.cap);
      if (f == "csv") {
        out << "construction";
        for (const std::string& l : h.labels()) out << ',' << l;
        out << '\n';
        for (const VertexCoordinates& v : table) {
          out << '"' << to_string(v.construction, h) << '"';
          for (std::int64_t c : v.coordinates) out << ',' << c;
          out << '\n';
        }
        return;
      }
      if (f == "json") {
        Json rows = Json::array();
        for (const VertexCoordinates& v : table)
          rows.push_back({{"construction", to_string(v.construction, h)}, {"coordinates", v.coordinates}});
        Json doc{{"vertices", h.labels()}, {"saturation_size", h.saturation().size()}, {"rows", rows}};
        if (verdict) {
          Json m{{"mu", detail::scale_rationals(mu)}, {"monotone", verdict->ok}, {"sign", verdict->sign}};
          if (verdict->offending) m["offending"] = detail::step_json(*verdict->offending, h);
          doc["mu_check"] = m;
        }
        out << doc.dump(2) << '\n';
        return;
      }
      for (const VertexCoordinates& v : table) {
        out << to_string(v.construction, h) << '\t';
        for (std::size_t i = 0; i < v.coordinates.size(); ++i) out << (i ? " " : "") << v.coordinates[i];
        out << '\n';
      }
      if (verdict) {
        if (verdict->ok)
          out << "mu: strictly " << (verdict->sign > 0 ? "increasing" : "decreasing") << " along every flip\n";
        else
          out << "mu: not monotone at " << to_string(verdict->offending->source, h) << " -> "
              << to_string(verdict->offending->target, h) << '\n';
      }
    };
  });

  // contextual
  InputSpec contextual_in;
  analysis("contextual", "contextuality verdict with a minimal witness", contextual_in)->callback([&] {
    action = [&] {
      OrderedHypergraph h = detail::load(contextual_in, g);
      const std::string f = detail::pick_format(g, "text", {"text", "json"}, "contextual");
      ContextualityReport r = is_contextual(h);
      auto witness = [&](const std::optional<std::pair<VertexSet, VertexSet>>& w) -> Json {
        if (!w) return nullptr;
        return Json{{"Y", detail::set_string(w->first, h)}, {"X", detail::set_string(w->second, h)}};
      };
      if (f == "json") {
        out << Json{{"contextual", r.contextual},
                    {"witness", witness(r.witness)},
                    {"condition1", r.condition1},
                    {"condition1_witness", witness(r.witness1)}}
                   .dump(2)
            << '\n';
        return;
      }
      out << "contextual: " << (r.contextual ? "true" : "false") << '\n';
      if (r.witness)
        out << "witness: Y=" << detail::set_string(r.witness->first, h)
            << " X=" << detail::set_string(r.witness->second, h) << '\n';
      out << "condition (1): " << (r.condition1 ? "true" : "false") << '\n';
    };
  });

  // family-check
  std::string check_family;
  int up_to = 4;
  CLI::App* fc = app.add_subcommand("family-check", "closure conditions of a contextual family");
  fc->add_option("family", check_family, "simplex, cube, associahedron, permutahedron, cyclohedron, operahedron, "
                                         "graph-family or hypergraph-family")
      ->required();
  fc->add_option("--up-to", up_to, "largest dimension checked")->check(CLI::NonNegativeNumber);
  fc->callback([&] {
    action = [&] {
      const std::string f = detail::pick_format(g, "json", {"json", "text"}, "family-check");
      FamilyReport r = contextual_family_check(parse_family_class(check_family), up_to);
      if (f == "text") {
        out << to_string(r.family) << " up to dimension " << r.up_to_dimension << ": " << r.instances
            << " instances, " << (r.pass() ? "pass" : "fail") << '\n';
        for (const FamilyCheckEntry& e : r.entries)
          if (!e.verdict) out << "condition (" << e.condition << ") fails on " << e.instance << ": " << e.witness << '\n';
        return;
      }
      Json entries = Json::array();
      for (const FamilyCheckEntry& e : r.entries)
        entries.push_back(
            {{"instance", e.instance}, {"condition", e.condition}, {"verdict", e.verdict}, {"witness", e.witness}});
      out << Json{{"family", to_string(r.family)},
                  {"up_to_dimension", r.up_to_dimension},
                  {"instances", r.instances},
                  {"pass", r.pass()},
                  {"entries", entries}}
                 .dump(2)
          << '\n';
    };
  });

  // gen
  std::string gen_family, gen_tree, gen_output;
  int gen_dim = -1;
  std::vector<std::string> gen_order;
  CLI::App* gen = app.add_subcommand("gen", "write a family instance as a hypergraph file");
  gen->add_option("family", gen_family, "simplex, cube, associahedron, permutahedron, cyclohedron or operahedron")
      ->required();
  gen->add_option("dimension", gen_dim, "dimension of the polytope");
  gen->add_option("--tree", gen_tree, "planar tree for operahedra");
  gen->add_option("--edge-order", gen_order, "vertex order of an operahedron")->delimiter(',');
  gen->add_option("-o,--output", gen_output, "output file instead of stdout");
  gen->callback([&] {
    action = [&] {
      const std::string f = detail::pick_format(g, "hg", {"hg", "json"}, "gen");
      OrderedHypergraph h = generate(detail::descriptor(gen_family, gen_dim, gen_tree, gen_order));
      const std::string text = f == "json" ? to_json(h).dump(2) + "\n" : to_hg(h);
      if (gen_output.empty()) {
        out << text;
        return;
      }
      std::ofstream file(gen_output, std::ios::binary);
      if (!(file << text)) throw parse_error("cannot write '" + gen_output + "'");
    };
  });

  // parenthesize
  InputSpec paren_in;
  std::string paren_construct, paren_word;
  std::vector<std::string> leaves;
  CLI::App* paren = analysis("parenthesize", "constructions of a linear graph as tensor words", paren_in);
  auto* pc = paren->add_option("--construct", paren_construct, "construction literal");
  auto* pw = paren->add_option("--word", paren_word, "tensor word such as (X0⊗X1)⊗X2");
  pc->excludes(pw);
  paren->add_option("--leaves", leaves, "leaf names, default X0..Xm")->delimiter(',');
  paren->callback([&] {
    action = [&] {
      OrderedHypergraph h = detail::load(paren_in, g);
      const std::string f = detail::pick_format(g, "text", {"text", "json"}, "parenthesize");
      std::vector<std::pair<std::string, std::string>> rows;
      if (!paren_word.empty()) {
        rows.emplace_back(to_string(from_parenthesization(h, paren_word, leaves), h), paren_word);
      } else if (!paren_construct.empty()) {
        Construction s = parse_and_validate(paren_construct, h);
        rows.emplace_back(to_string(s, h), to_parenthesization(h, s, leaves));
      } else {
        for (const Construction& s : enumerate_constructions(h, g.cap))
          rows.emplace_back(to_string(s, h), to_parenthesization(h, s, leaves));
      }
      if (f == "json") {
        Json list = Json::array();
        for (const auto& [c, w] : rows) list.push_back({{"construction", c}, {"word", w}});
        out << list.dump(2) << '\n';
        return;
      }
      for (const auto& [c, w] : rows) out << c << '\t' << w << '\n';
    };
  });

  try {
    std::vector<std::string> argv_store{"nestorw"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const std::string& a : argv_store) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? ok : input_error;
  }

  try {
    if (action) action();
    return ok;
  } catch (const capacity_error& e) {
    err << "capacity error: " << e.what() << '\n';
    return capacity;
  } catch (const invariant_error& e) {
    err << "internal invariant violated: " << e.what() << '\n';
    return internal;
  } catch (const parse_error& e) {
    err << "parse error: " << e.what() << '\n';
    return input_error;
  } catch (const validation_error& e) {
    err << "validation error: " << e.what() << '\n';
    return input_error;
  } catch (const domain_error& e) {
    err << "error: " << e.what() << '\n';
    return input_error;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return internal;
  }
}

}  // namespace nestorw::cli
