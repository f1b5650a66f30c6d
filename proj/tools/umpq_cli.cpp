// umpq: bound quiver algebras, maximal paths and the UMP property.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "umpq/umpq.hpp"

using namespace umpq;

namespace {

enum Exit { kOk = 0, kNotUmp = 1, kInput = 2, kInternal = 3 };

struct Options {
  std::size_t cap = AlgebraPresentation::kDefaultCap;
  bool json = false;
  bool fail_on_not_ump = false;
  std::string file;
  std::string route = "auto";
  std::string dot_path;
  bool oracle = false;
  std::string emit_quiver;
  bool dim = false;
  bool classify = false;
  std::string what = "quiver";
};

void print_json(json const& j) { std::cout << j.dump(2) << "\n"; }

std::string join(Quiver const& q, std::vector<Path> const& ps, char const* sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < ps.size(); ++i) out += (i ? sep : "") + to_string(q, ps[i]);
  return out;
}

void print_verdict(Quiver const& q, UmpVerdict const& v) {
  std::cout << to_string(v.outcome);
  if (!v.reason.empty()) std::cout << " (" << v.reason << ")";
  std::cout << "\n";
  if (v.pair)
    std::cout << "  maximal paths " << to_string(q, v.pair->first) << " and "
              << to_string(q, v.pair->second) << " share " << q.arrow_label(v.pair->arrow) << "\n";
  if (v.relation) {
    auto const& r = *v.relation;
    std::cout << "  relation " << to_string(q, r.relation);
    if (r.other) std::cout << " with " << to_string(q, *r.other) << " dividing the same powers";
    if (r.omega) std::cout << ": omega " << to_string(q, *r.omega) << " is not cyclic";
    if (r.arrow) std::cout << " extends by " << q.arrow_label(*r.arrow) << (r.left ? " on the left" : " on the right");
    std::cout << "\n";
  }
}

void print_classes(Quiver const& q, std::vector<MaximalClass> const& cs) {
  for (auto const& c : cs) std::cout << join(q, c.members, " ~ ") << "\n";
}

int verdict_exit(Options const& o, UmpReport const& r) {
  if (r.mismatch) return kInternal;
  if (o.fail_on_not_ump && r.global.outcome == Outcome::NotUMP) return kNotUmp;
  return kOk;
}

int cmd_analyze(Options const& o) {
  auto d = decompose(load_quiver(o.file, o.cap));
  auto r = ump_report(d, parse_route(o.route));
  if (o.json) {
    print_json(report_json(d, r));
    return verdict_exit(o, r);
  }
  auto const& q = d.algebra.quiver();
  std::cout << "vertices " << q.vertex_count() << ", arrows " << q.arrow_count()
            << ", bound m = " << d.algebra.bound() << "\n";
  for (auto const& line : d.algebra.minimalization_report()) std::cout << "  " << line << "\n";
  std::cout << "special multiserial: " << (d.special_multiserial.holds ? "yes" : "no")
            << ", locally monomial: " << (is_locally_monomial(d) ? "yes" : "no") << "\n";
  std::cout << "omega paths: " << join(q, d.graph.omega.classes) << "\n";
  std::cout << "ramifications graph edges:";
  for (auto const& [x, y] : d.graph.edges)
    std::cout << " " << to_string(q, d.graph.omega.classes[x]) << "->"
              << to_string(q, d.graph.omega.classes[y]);
  std::cout << "\n";
  for (std::size_t i = 0; i < d.components.size(); ++i) {
    auto const& c = d.components[i];
    std::cout << "component " << c.id << "\n";
    if (!d.special_multiserial.holds || !c.monomial()) continue;
    auto an = analyze_component(d, i);
    std::cout << "  shape " << to_string(an.shape) << ", omega(N) " << to_string(q, an.omega)
              << (an.closes ? " (closes)" : "") << ", eta " << an.eta << "\n";
    std::cout << "  Omega_N {" << join(q, an.omega_set) << "}, S_N {" << join(q, an.s) << "}\n";
    std::cout << "  maximal {" << join(q, an.maximals) << "}\n";
  }
  std::cout << "route " << r.route << "\n";
  for (auto const& l : r.log) std::cout << "  " << l << "\n";
  std::cout << "maximal paths:\n";
  print_classes(q, r.maximal);
  std::cout << "verdict: ";
  print_verdict(q, r.global);
  return verdict_exit(o, r);
}

int cmd_ump(Options const& o) {
  auto d = decompose(load_quiver(o.file, o.cap));
  auto r = ump_report(d, parse_route(o.route));
  auto const& q = d.algebra.quiver();
  if (o.json) {
    print_json(ump_json(q, r));
  } else {
    std::cout << "route " << r.route << "\n";
    for (auto const& l : r.log) std::cout << "  " << l << "\n";
    print_verdict(q, r.global);
  }
  if (r.mismatch) std::cerr << "cross-check mismatch\n";
  return verdict_exit(o, r);
}

int cmd_components(Options const& o) {
  auto d = decompose(load_quiver(o.file, o.cap));
  if (!o.dot_path.empty()) {
    std::ofstream out(o.dot_path);
    if (!out) throw Error("cannot write " + o.dot_path);
    out << emit_dot(d);
  }
  if (o.json) {
    print_json(decomposition_json(d)["components"]);
  } else {
    for (auto const& c : d.components)
      std::cout << c.id << (c.monomial() ? "" : " (not monomial)") << "\n";
  }
  return kOk;
}

int cmd_maxpaths(Options const& o) {
  auto A = load_quiver(o.file, o.cap);
  std::vector<MaximalClass> cs;
  std::string route = "oracle";
  if (o.oracle) {
    cs = maximal_paths_bruteforce(ensure_minimal(A));
  } else {
    auto r = ump_report(A, Route::Auto);
    cs = r.maximal;
    route = r.route;
  }
  auto const& q = A.quiver();
  if (o.json)
    print_json({{"route", route}, {"maximal_classes", classes_json(q, cs)}});
  else
    print_classes(q, cs);
  return kOk;
}

int cmd_brauer(Options const& o) {
  auto G = load_brauer(o.file);
  auto B = brauer_algebra(G, o.cap);
  if (!o.emit_quiver.empty()) {
    std::ofstream out(o.emit_quiver);
    if (!out) throw Error("cannot write " + o.emit_quiver);
    out << write_quiver(B.algebra);
  }
  bool all = !o.dim && !o.classify;
  if (o.json) {
    auto d = decompose(B.algebra);
    json j = brauer_json(G, B, d);
    j["schema_version"] = kSchemaVersion;
    j["algebra"] = algebra_json(B.algebra);
    print_json(j);
    return kOk;
  }
  if (all) std::cout << write_quiver(B.algebra);
  if (o.dim || all) {
    auto d = decompose(B.algebra);
    for (auto const& e : component_vertex_bijection(G, B, d))
      std::cout << "vertex " << e.vertex << ": component " << d.components[e.component].id
                << ", formula " << component_dimension(G, e.vertex) << ", counted "
                << dimension_bruteforce(*d.components[e.component].algebra).with_trivial << "\n";
    std::cout << "dimension " << dimension_bruteforce(B.algebra).with_trivial << "\n";
  }
  if (o.classify || all) std::cout << classify_ump(G).to_string() << "\n";
  return kOk;
}

int cmd_export_dot(Options const& o) {
  auto A = load_quiver(o.file, o.cap);
  if (o.what == "quiver") {
    std::cout << emit_dot(A.quiver());
  } else {
    auto M = ensure_minimal(A);
    std::cout << emit_dot(M.quiver(), ramifications_graph(M));
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bound quiver algebras: ramifications graph, maximal paths, UMP"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--cap", o.cap, "admissibility search cap")->check(CLI::PositiveNumber);
  app.add_flag("--json", o.json, "machine-readable output");
  app.add_flag("--fail-on-not-ump", o.fail_on_not_ump, "exit 1 on a NotUMP verdict");

  auto* analyze = app.add_subcommand("analyze", "full report");
  analyze->add_option("file", o.file)->required();
  analyze->add_option("--route", o.route)
      ->check(CLI::IsMember({"auto", "main", "per-component", "oracle", "cross-check"}));

  auto* ump = app.add_subcommand("ump", "decide the UMP property");
  ump->add_option("file", o.file)->required();
  ump->add_option("--route", o.route)
      ->check(CLI::IsMember({"auto", "main", "per-component", "oracle", "cross-check"}));

  auto* comps = app.add_subcommand("components", "ramifications graph components");
  comps->add_option("file", o.file)->required();
  comps->add_option("--dot", o.dot_path, "write the component DOT here");

  auto* maxp = app.add_subcommand("maxpaths", "maximal paths");
  maxp->add_option("file", o.file)->required();
  maxp->add_flag("--oracle", o.oracle, "enumerate by brute force");

  auto* brauer = app.add_subcommand("brauer", "Brauer graph algebra");
  brauer->add_option("file", o.file)->required();
  brauer->add_option("--emit-quiver", o.emit_quiver, "write the algebra as a quiver file");
  brauer->add_flag("--dim", o.dim, "dimensions per component");
  brauer->add_flag("--classify", o.classify, "UMP classification");

  auto* dot = app.add_subcommand("export-dot", "DOT output");
  dot->add_option("file", o.file)->required();
  dot->add_option("--what", o.what)->check(CLI::IsMember({"quiver", "ramgraph"}));

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kInput;
  }

  try {
    if (*analyze) return cmd_analyze(o);
    if (*ump) return cmd_ump(o);
    if (*comps) return cmd_components(o);
    if (*maxp) return cmd_maxpaths(o);
    if (*brauer) return cmd_brauer(o);
    if (*dot) return cmd_export_dot(o);
  } catch (InternalError const& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (BijectionFailure const& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (ValidationError const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (std::exception const& e) {
    std::cerr << o.file << ": " << e.what() << "\n";
    return kInput;
  }
  return kOk;
}
