#ifndef UMPQ_IO_HPP
#define UMPQ_IO_HPP

// JSON report and DOT output. Paths are arrays of arrow labels; object keys
// come out sorted, so equal inputs give byte-identical reports.

#include <optional>
#include <sstream>
#include <string>

#include "json.hpp"

#include "umpq/brauer.hpp"
#include "umpq/component_analysis.hpp"
#include "umpq/ump.hpp"

namespace umpq {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

inline json path_json(Quiver const& q, Path const& p) {
  json a = json::array();
  for (ArrowId x : p.arrows()) a.push_back(q.arrow_label(x));
  return a;
}

inline json paths_json(Quiver const& q, std::vector<Path> const& ps) {
  json a = json::array();
  for (auto const& p : ps) a.push_back(path_json(q, p));
  return a;
}

inline json relation_json(Quiver const& q, LinearRelation const& r) {
  json terms = json::array();
  for (auto const& t : r.terms())
    terms.push_back({{"coefficient", to_string(t.coefficient)}, {"path", path_json(q, t.path)}});
  return terms;
}

inline json algebra_json(AlgebraPresentation const& A) {
  auto const& q = A.quiver();
  json j;
  json vs = json::array();
  for (VertexId v = 0; v < q.vertex_count(); ++v) vs.push_back(q.vertex_label(v));
  json as = json::array();
  for (ArrowId a : q.arrows_by_label())
    as.push_back({{"id", q.arrow_label(a)},
                  {"source", q.vertex_label(q.source(a))},
                  {"target", q.vertex_label(q.target(a))}});
  json lin = json::array();
  for (auto const& r : A.linear()) lin.push_back(relation_json(q, r));
  j["vertices"] = vs;
  j["arrows"] = as;
  j["relations"] = {{"zero", paths_json(q, A.zero())}, {"linear", lin}};
  j["bound"] = A.bound();
  j["minimalization"] = A.minimalization_report();
  return j;
}

inline json verdict_json(Quiver const& q, UmpVerdict const& v) {
  json j;
  j["outcome"] = to_string(v.outcome);
  if (!v.reason.empty()) j["reason"] = v.reason;
  if (v.pair)
    j["witness"] = {{"first", path_json(q, v.pair->first)},
                    {"second", path_json(q, v.pair->second)},
                    {"shared_arrow", q.arrow_label(v.pair->arrow)}};
  if (v.relation) {
    json r;
    r["relation"] = path_json(q, v.relation->relation);
    if (v.relation->other) r["other"] = path_json(q, *v.relation->other);
    if (v.relation->omega) r["omega"] = path_json(q, *v.relation->omega);
    if (v.relation->arrow) {
      r["arrow"] = q.arrow_label(*v.relation->arrow);
      r["side"] = v.relation->left ? "left" : "right";
    }
    j["relation_witness"] = r;
  }
  return j;
}

inline json classes_json(Quiver const& q, std::vector<MaximalClass> const& cs) {
  json a = json::array();
  for (auto const& c : cs) {
    json x{{"representative", path_json(q, c.representative)},
           {"members", paths_json(q, c.members)}};
    if (!c.components.empty()) x["components"] = c.components;
    a.push_back(x);
  }
  return a;
}

inline json decomposition_json(Decomposition const& d) {
  auto const& q = d.algebra.quiver();
  json j;
  json omega = json::object();
  for (ArrowId a = 0; a < q.arrow_count(); ++a)
    omega[q.arrow_label(a)] = path_json(q, d.graph.omega.omega(a));
  j["omega"] = omega;
  json edges = json::array();
  for (auto const& [x, y] : d.graph.edges) edges.push_back({x, y});
  j["ramifications_graph"] = {{"vertices", paths_json(q, d.graph.omega.classes)},
                              {"edges", edges}};

  bool sm = d.special_multiserial.holds;
  json comps = json::array();
  for (std::size_t i = 0; i < d.components.size(); ++i) {
    auto const& c = d.components[i];
    json x;
    x["id"] = c.id;
    x["omega_classes"] = c.vertices;
    json arrows = json::array();
    for (ArrowId a : c.arrows) arrows.push_back(q.arrow_label(a));
    x["arrows"] = arrows;
    x["monomial"] = c.monomial();
    x["relations"] = {{"zero", paths_json(q, c.ideal.zero)}, {"linear", json::array()}};
    for (auto const& r : c.ideal.linear) x["relations"]["linear"].push_back(relation_json(q, r));
    if (sm && c.monomial()) {
      auto an = analyze_component(d, i);
      x["shape"] = to_string(an.shape);
      x["omegaN"] = path_json(q, an.omega);
      x["closes"] = an.closes;
      x["OmegaN"] = paths_json(q, an.omega_set);
      auto s = an.s;
      std::sort(s.begin(), s.end(), LexLess{&q});
      x["S"] = paths_json(q, s);
      x["eta"] = an.eta;
      x["maximal_paths"] = paths_json(q, an.maximals);
    }
    comps.push_back(x);
  }
  j["components"] = comps;
  return j;
}

inline json ump_json(Quiver const& q, UmpReport const& r) {
  json j;
  j["route"] = r.route;
  j["routes_run"] = r.routes_run;
  json per = json::array();
  for (auto const& v : r.per_component) per.push_back(verdict_json(q, v));
  j["per_component"] = per;
  j["global"] = verdict_json(q, r.global);
  j["omega_relations"] = paths_json(q, r.omega_relations);
  j["maximal_classes"] = classes_json(q, r.maximal);
  j["log"] = r.log;
  j["cross_check_mismatch"] = r.mismatch;
  return j;
}

inline json report_json(Decomposition const& d, UmpReport const& r) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["algebra"] = algebra_json(d.algebra);
  j["algebra"]["special_multiserial"] = d.special_multiserial.holds;
  j["algebra"]["locally_monomial"] = is_locally_monomial(d);
  auto dj = decomposition_json(d);
  j["omega"] = dj["omega"];
  j["ramifications_graph"] = dj["ramifications_graph"];
  j["components"] = dj["components"];
  j["ump"] = ump_json(d.algebra.quiver(), r);
  return j;
}

inline json brauer_json(BrauerGraph const& G, BrauerAlgebra const& B, Decomposition const& d) {
  json j;
  json bij = json::array();
  json dims = json::array();
  for (auto const& e : component_vertex_bijection(G, B, d)) {
    bij.push_back({{"component", e.component},
                   {"vertex", e.vertex},
                   {"start", to_string(G, e.start)}});
    dims.push_back({{"vertex", e.vertex},
                    {"formula", component_dimension(G, e.vertex)},
                    {"counted", dimension_bruteforce(*d.components[e.component].algebra).with_trivial}});
  }
  j["bijection"] = bij;
  j["dimensions"] = dims;
  j["dimension_total"] = dimension_bruteforce(B.algebra).with_trivial;
  j["classification"] = classify_ump(G).to_string();
  j["brauer_tree"] = is_brauer_tree(G);
  j["loops"] = G.has_loops();
  return j;
}

namespace detail {

inline std::string dot_quote(std::string const& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace detail

inline std::string emit_dot(Quiver const& q) {
  std::ostringstream os;
  os << "digraph Q {\n";
  for (VertexId v = 0; v < q.vertex_count(); ++v)
    os << "  " << detail::dot_quote(q.vertex_label(v)) << ";\n";
  for (ArrowId a : q.arrows_by_label())
    os << "  " << detail::dot_quote(q.vertex_label(q.source(a))) << " -> "
       << detail::dot_quote(q.vertex_label(q.target(a)))
       << " [label=" << detail::dot_quote(q.arrow_label(a)) << "];\n";
  os << "}\n";
  return os.str();
}

// Nodes are the omega paths, named by their arrow strings.
inline std::string emit_dot(Quiver const& q, RamificationsGraph const& g) {
  std::ostringstream os;
  os << "digraph G {\n";
  std::vector<std::string> names;
  for (auto const& w : g.omega.classes) names.push_back(detail::dot_quote(to_string(q, w)));
  for (auto const& n : names) os << "  " << n << ";\n";
  for (auto const& [x, y] : g.edges) os << "  " << names[x] << " -> " << names[y] << ";\n";
  os << "}\n";
  return os.str();
}

// Components as clusters of the ramifications graph.
inline std::string emit_dot(Decomposition const& d) {
  auto const& q = d.algebra.quiver();
  std::ostringstream os;
  os << "digraph G {\n";
  std::vector<std::string> names;
  for (auto const& w : d.graph.omega.classes) names.push_back(detail::dot_quote(to_string(q, w)));
  for (std::size_t i = 0; i < d.components.size(); ++i) {
    os << "  subgraph cluster_" << i << " {\n    label=" << detail::dot_quote(d.components[i].id)
       << ";\n";
    for (std::size_t v : d.components[i].vertices) os << "    " << names[v] << ";\n";
    os << "  }\n";
  }
  for (auto const& [x, y] : d.graph.edges) os << "  " << names[x] << " -> " << names[y] << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace umpq

#endif
