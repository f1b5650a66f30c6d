#ifndef UMPQ_BRAUER_HPP
#define UMPQ_BRAUER_HPP

// Brauer graphs and their algebras.
//
//   vertex u mult 1
//   edge i u v                  # loop when both ends agree
//   order v: i j k^ k~          # cyclic order at v; ^ hat end, ~ tilde end
//
// For an edge "i u v" the hat end sits at u and the tilde end at v. Markers
// are optional for ordinary edges and mandatory for loops. Truncated vertices
// (valency * multiplicity = 1) take no order line.

#include <algorithm>
#include <compare>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "umpq/format.hpp"
#include "umpq/omega.hpp"
#include "umpq/component_analysis.hpp"

namespace umpq {

struct HalfEdge {
  enum class Tag { Hat, Tilde };
  std::string edge;
  Tag tag = Tag::Hat;

  auto operator<=>(HalfEdge const&) const = default;
  bool operator==(HalfEdge const&) const = default;
};

struct BrauerVertex {
  std::string id;
  int mult = 1;
};

struct BrauerEdge {
  std::string id;
  std::string v1, v2;  // hat end, tilde end
  bool loop() const { return v1 == v2; }
};

struct BrauerGraph {
  std::vector<BrauerVertex> vertices;
  std::vector<BrauerEdge> edges;
  std::map<std::string, std::vector<HalfEdge>> orders;

  BrauerVertex const* find_vertex(std::string const& id) const {
    for (auto const& v : vertices)
      if (v.id == id) return &v;
    return nullptr;
  }
  BrauerEdge const* find_edge(std::string const& id) const {
    for (auto const& e : edges)
      if (e.id == id) return &e;
    return nullptr;
  }
  int mult(std::string const& v) const {
    auto const* p = find_vertex(v);
    return p ? p->mult : 0;
  }
  // Half-edges at v, in edge order.
  std::vector<HalfEdge> incident(std::string const& v) const {
    std::vector<HalfEdge> out;
    for (auto const& e : edges) {
      if (e.v1 == v) out.push_back({e.id, HalfEdge::Tag::Hat});
      if (e.v2 == v) out.push_back({e.id, HalfEdge::Tag::Tilde});
    }
    return out;
  }
  std::size_t valency(std::string const& v) const { return incident(v).size(); }
  bool truncated(std::string const& v) const { return valency(v) * mult(v) == 1; }
  std::size_t loops_at(std::string const& v) const {
    return static_cast<std::size_t>(std::count_if(
        edges.begin(), edges.end(), [&](BrauerEdge const& e) { return e.loop() && e.v1 == v; }));
  }
  bool has_loops() const {
    return std::any_of(edges.begin(), edges.end(), [](BrauerEdge const& e) { return e.loop(); });
  }
  std::vector<std::string> nontruncated() const {
    std::vector<std::string> out;
    for (auto const& v : vertices)
      if (!truncated(v.id)) out.push_back(v.id);
    return out;
  }
  std::string vertex_at(HalfEdge const& h) const {
    auto const* e = find_edge(h.edge);
    return h.tag == HalfEdge::Tag::Hat ? e->v1 : e->v2;
  }
};

inline std::string to_string(BrauerGraph const& G, HalfEdge const& h) {
  auto const* e = G.find_edge(h.edge);
  if (e && !e->loop()) return h.edge;
  return h.edge + (h.tag == HalfEdge::Tag::Hat ? "^" : "~");
}

inline std::vector<std::string> validate(BrauerGraph const& G) {
  std::vector<std::string> diag;
  std::set<std::string> ids;
  for (auto const& v : G.vertices) {
    if (!is_label(v.id)) diag.push_back("vertex '" + v.id + "': bad identifier");
    if (!ids.insert(v.id).second) diag.push_back("duplicate identifier '" + v.id + "'");
    if (v.mult < 1) diag.push_back("vertex " + v.id + ": multiplicity must be positive");
  }
  for (auto const& e : G.edges) {
    if (!is_label(e.id)) diag.push_back("edge '" + e.id + "': bad identifier");
    if (!ids.insert(e.id).second) diag.push_back("duplicate identifier '" + e.id + "'");
    for (auto const* end : {&e.v1, &e.v2})
      if (!G.find_vertex(*end)) diag.push_back("edge " + e.id + ": unknown vertex " + *end);
  }
  if (G.edges.empty()) diag.push_back("graph has no edges");
  if (!diag.empty()) return diag;

  for (auto const& v : G.vertices)
    if (G.valency(v.id) == 0) diag.push_back("vertex " + v.id + " has no incident edge");

  // Connectedness over the vertex set.
  std::map<std::string, std::string> parent;
  for (auto const& v : G.vertices) parent[v.id] = v.id;
  auto find = [&](std::string x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto const& e : G.edges) parent[find(e.v1)] = find(e.v2);
  std::set<std::string> roots;
  for (auto const& v : G.vertices) roots.insert(find(v.id));
  if (roots.size() > 1) diag.push_back("graph is disconnected");

  for (auto const& [v, order] : G.orders) {
    if (!G.find_vertex(v)) {
      diag.push_back("order given for unknown vertex " + v);
      continue;
    }
    if (G.truncated(v)) {
      diag.push_back("truncated vertex " + v + " has an order");
      continue;
    }
    auto inc = G.incident(v);
    std::set<HalfEdge> seen;
    for (auto const& h : order) {
      if (std::find(inc.begin(), inc.end(), h) == inc.end())
        diag.push_back("order at " + v + ": half-edge " + to_string(G, h) + " is not incident");
      else if (!seen.insert(h).second)
        diag.push_back("order at " + v + ": half-edge " + to_string(G, h) + " repeated");
    }
    if (order.size() != inc.size())
      diag.push_back("order at " + v + " lists " + std::to_string(order.size()) +
                     " half-edges, valency is " + std::to_string(inc.size()));
  }
  for (auto const& v : G.vertices)
    if (!G.truncated(v.id) && G.valency(v.id) > 0 && !G.orders.count(v.id))
      diag.push_back("non-truncated vertex " + v.id + " has no order");
  return diag;
}

inline void require_valid(BrauerGraph const& G) {
  auto diag = validate(G);
  if (!diag.empty()) throw ValidationError(std::move(diag));
}

inline std::vector<HalfEdge> successor_sequence(BrauerGraph const& G, std::string const& v,
                                                HalfEdge const& h) {
  if (!G.find_vertex(v) || G.truncated(v)) throw TruncatedVertex("vertex " + v + " is truncated");
  auto const& order = G.orders.at(v);
  auto it = std::find(order.begin(), order.end(), h);
  if (it == order.end())
    throw NotIncident("half-edge " + to_string(G, h) + " is not incident to " + v);
  std::vector<HalfEdge> out(it, order.end());
  out.insert(out.end(), order.begin(), it);
  return out;
}

struct BrauerArrow {
  std::string vertex;
  HalfEdge from, to;
};

struct BrauerAlgebra {
  AlgebraPresentation algebra;   // minimal presentation
  std::vector<BrauerArrow> arrows;  // indexed by arrow id
  std::map<std::string, std::vector<ArrowId>> cycle_arrows;  // arrow j leaves order[j]
  std::size_t type1 = 0, type2 = 0, type3 = 0;  // generators before minimalization
};

namespace detail {

inline std::string brauer_arrow_label(BrauerGraph const& G, std::string const& v,
                                      HalfEdge const& h) {
  std::string label = v + "_" + h.edge;
  if (G.find_edge(h.edge)->loop()) label += h.tag == HalfEdge::Tag::Hat ? "h" : "t";
  return label;
}

inline std::vector<ArrowId> special_cycle_arrows(BrauerGraph const& G,
                                                 std::map<std::string, std::vector<ArrowId>> const& cyc,
                                                 std::string const& v, HalfEdge const& h) {
  auto const& order = G.orders.at(v);
  auto it = std::find(order.begin(), order.end(), h);
  if (it == order.end())
    throw NotIncident("half-edge " + to_string(G, h) + " is not incident to " + v);
  std::size_t j = static_cast<std::size_t>(it - order.begin());
  auto const& arrows = cyc.at(v);
  std::vector<ArrowId> out;
  for (std::size_t k = 0; k < arrows.size(); ++k) out.push_back(arrows[(j + k) % arrows.size()]);
  return out;
}

inline std::vector<ArrowId> power(std::vector<ArrowId> const& w, int m) {
  std::vector<ArrowId> out;
  for (int i = 0; i < m; ++i) out.insert(out.end(), w.begin(), w.end());
  return out;
}

}  // namespace detail

// The special cycle A_{v,h}.
inline Path special_cycle(BrauerGraph const& G, BrauerAlgebra const& B, std::string const& v,
                          HalfEdge const& h) {
  if (G.truncated(v)) throw TruncatedVertex("vertex " + v + " is truncated");
  return Path::of(B.algebra.quiver(), detail::special_cycle_arrows(G, B.cycle_arrows, v, h));
}

inline BrauerAlgebra brauer_algebra(BrauerGraph const& G,
                                    std::size_t cap = AlgebraPresentation::kDefaultCap) {
  require_valid(G);
  Quiver q;
  std::map<std::string, VertexId> vid;
  for (auto const& e : G.edges) vid[e.id] = q.add_vertex(e.id);

  std::vector<BrauerArrow> meta;
  std::map<std::string, std::vector<ArrowId>> cyc;
  for (auto const& v : G.vertices) {
    if (G.truncated(v.id)) continue;
    auto const& order = G.orders.at(v.id);
    for (std::size_t j = 0; j < order.size(); ++j) {
      HalfEdge const& from = order[j];
      HalfEdge const& to = order[(j + 1) % order.size()];
      ArrowId a = q.add_arrow(detail::brauer_arrow_label(G, v.id, from), vid[from.edge], vid[to.edge]);
      meta.push_back({v.id, from, to});
      cyc[v.id].push_back(a);
    }
  }

  std::vector<LinearRelation> linear;
  std::vector<Path> zero;
  std::size_t t1 = 0, t2 = 0, t3 = 0;
  // Type I.
  for (auto const& e : G.edges) {
    if (G.truncated(e.v1) || G.truncated(e.v2)) continue;
    auto x = detail::power(detail::special_cycle_arrows(G, cyc, e.v1, {e.id, HalfEdge::Tag::Hat}),
                           G.mult(e.v1));
    auto y = detail::power(detail::special_cycle_arrows(G, cyc, e.v2, {e.id, HalfEdge::Tag::Tilde}),
                           G.mult(e.v2));
    linear.push_back(LinearRelation::make(
        q, {{Rational(1), Path::of(q, x)}, {Rational(-1), Path::of(q, y)}}));
    ++t1;
  }
  // Type II.
  for (auto const& v : G.vertices) {
    if (G.truncated(v.id)) continue;
    for (auto const& h : G.orders.at(v.id)) {
      auto c = detail::special_cycle_arrows(G, cyc, v.id, h);
      auto w = detail::power(c, v.mult);
      w.push_back(c.front());
      zero.push_back(Path::of(q, w));
      ++t2;
    }
  }
  // Type III: composable pairs that are not consecutive on a special cycle,
  // except the square of the loop of a valency-one vertex.
  std::set<std::pair<ArrowId, ArrowId>> on_cycle;
  for (auto const& [v, arrows] : cyc) {
    std::size_t k = arrows.size();
    if (k < 2) continue;  // a lone loop: alpha alpha lies on no special cycle
    for (std::size_t j = 0; j < k; ++j) on_cycle.insert({arrows[j], arrows[(j + 1) % k]});
  }
  for (ArrowId a = 0; a < q.arrow_count(); ++a)
    for (ArrowId b : q.out_arrows(q.target(a))) {
      if (on_cycle.count({a, b})) continue;
      if (a == b && cyc.at(meta[a].vertex).size() == 1) continue;
      zero.push_back(Path::of(q, {a, b}));
      ++t3;
    }

  auto A = minimalize_relations(
      AlgebraPresentation::create(std::move(q), std::move(zero), std::move(linear), cap));
  return BrauerAlgebra{std::move(A), std::move(meta), std::move(cyc), t1, t2, t3};
}

struct BijectionEntry {
  std::size_t component;
  std::string vertex;
  HalfEdge start;  // omega(N) = A_{vertex,start}
};

// Component <-> non-truncated vertex. Throws BijectionFailure when the
// correspondence or the shape claim breaks.
inline std::vector<BijectionEntry> component_vertex_bijection(BrauerGraph const& G,
                                                              BrauerAlgebra const& B,
                                                              Decomposition const& d) {
  auto const& q = d.algebra.quiver();
  std::vector<BijectionEntry> out;
  std::set<std::string> hit;
  for (std::size_t i = 0; i < d.components.size(); ++i) {
    auto w = omega_of_component(d, i);
    if (w.shape == Shape::Line)
      throw BijectionFailure("component " + d.components[i].id + " is a line");
    if (w.omega.source() != w.omega.target() || !w.closes)
      throw BijectionFailure("omega of component " + d.components[i].id + " does not close");
    auto const& first = B.arrows[w.omega.first()];
    auto cycle = detail::special_cycle_arrows(G, B.cycle_arrows, first.vertex, first.from);
    if (cycle != w.omega.arrows())
      throw BijectionFailure("omega of component " + d.components[i].id +
                             " is not a special cycle: " + to_string(q, w.omega));
    if (!hit.insert(first.vertex).second)
      throw BijectionFailure("vertex " + first.vertex + " matches two components");
    out.push_back({i, first.vertex, first.from});
  }
  for (auto const& v : G.nontruncated())
    if (!hit.count(v)) throw BijectionFailure("vertex " + v + " matches no component");
  return out;
}

inline std::size_t component_dimension(BrauerGraph const& G, std::string const& v) {
  std::size_t val = G.valency(v);
  return val * (val * static_cast<std::size_t>(G.mult(v)) + 1);
}

struct UmpClassification {
  enum class Kind { CaseA, CaseB, CaseC, CaseD, NotUMP };
  Kind kind = Kind::NotUMP;
  int m = 0, n = 0;

  bool ump() const { return kind != Kind::NotUMP; }
  std::string to_string() const {
    switch (kind) {
      case Kind::CaseA: return "CaseA";
      case Kind::CaseB: return "CaseB(" + std::to_string(m) + ")";
      case Kind::CaseC: return "CaseC(" + std::to_string(m) + "," + std::to_string(n) + ")";
      case Kind::CaseD: return "CaseD(" + std::to_string(m) + ")";
      case Kind::NotUMP: return "NotUMP";
    }
    return "?";
  }
};

inline UmpClassification classify_ump(BrauerGraph const& G) {
  require_valid(G);
  using K = UmpClassification::Kind;
  UmpClassification c;
  if (G.edges.size() != 1) return c;
  auto const& e = G.edges.front();
  if (e.loop()) return {K::CaseD, G.mult(e.v1), 0};
  int a = G.mult(e.v1), b = G.mult(e.v2);
  if (a == 1 && b == 1) return {K::CaseA, 0, 0};
  if (a == 1 || b == 1) return {K::CaseB, std::max(a, b), 0};
  return {K::CaseC, a, b};
}

inline bool is_brauer_tree(BrauerGraph const& G) {
  require_valid(G);
  std::set<std::pair<std::string, std::string>> seen;
  for (auto const& e : G.edges) {
    if (e.loop()) return false;
    if (!seen.insert(std::minmax(e.v1, e.v2)).second) return false;
  }
  if (G.edges.size() + 1 != G.vertices.size()) return false;
  return std::count_if(G.vertices.begin(), G.vertices.end(),
                       [](BrauerVertex const& v) { return v.mult > 1; }) <= 1;
}

inline BrauerGraph parse_brauer(std::string_view text) {
  BrauerGraph G;
  struct PendingOrder {
    std::size_t line;
    std::vector<detail::Token> toks;
    std::string vertex;
  };
  std::vector<PendingOrder> pending;
  std::size_t lineno = 0, start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(start, nl - start);
    start = nl + 1;
    ++lineno;
    auto toks = detail::tokenize(line);
    if (toks.empty()) continue;
    auto fail = [&](std::size_t tok, std::string const& msg) {
      std::size_t col = tok < toks.size() ? toks[tok].column : line.size() + 1;
      return ParseError(lineno, col, msg);
    };
    auto const& kw = toks[0].text;
    if (kw == "vertex") {
      if (toks.size() != 4 || toks[2].text != "mult")
        throw fail(0, "expected: vertex <id> mult <n>");
      if (!is_label(toks[1].text)) throw fail(1, "bad identifier '" + toks[1].text + "'");
      if (G.find_vertex(toks[1].text)) throw fail(1, "duplicate vertex " + toks[1].text);
      int m = 0;
      try {
        std::size_t used = 0;
        m = std::stoi(toks[3].text, &used);
        if (used != toks[3].text.size()) throw std::invalid_argument("");
      } catch (std::exception const&) {
        throw fail(3, "bad multiplicity '" + toks[3].text + "'");
      }
      if (m < 1) throw fail(3, "multiplicity must be positive");
      G.vertices.push_back({toks[1].text, m});
    } else if (kw == "edge") {
      if (toks.size() != 4) throw fail(0, "expected: edge <id> <v1> <v2>");
      if (!is_label(toks[1].text)) throw fail(1, "bad identifier '" + toks[1].text + "'");
      if (G.find_edge(toks[1].text)) throw fail(1, "duplicate edge " + toks[1].text);
      for (std::size_t i : {2u, 3u})
        if (!G.find_vertex(toks[i].text)) throw fail(i, "unknown vertex " + toks[i].text);
      G.edges.push_back({toks[1].text, toks[2].text, toks[3].text});
    } else if (kw == "order") {
      if (toks.size() < 2) throw fail(0, "expected: order <v>: <half-edge>+");
      std::vector<detail::Token> rest(toks.begin() + 1, toks.end());
      std::string v = rest[0].text;
      if (!v.empty() && v.back() == ':') {
        v.pop_back();
        rest.erase(rest.begin());
      } else if (rest.size() > 1 && rest[1].text == ":") {
        rest.erase(rest.begin(), rest.begin() + 2);
      } else {
        throw fail(1, "expected ':' after the vertex");
      }
      if (!G.find_vertex(v)) throw fail(1, "unknown vertex " + v);
      if (G.orders.count(v) ||
          std::any_of(pending.begin(), pending.end(),
                      [&](PendingOrder const& p) { return p.vertex == v; }))
        throw fail(1, "second order line for " + v);
      if (rest.empty()) throw fail(1, "empty order");
      pending.push_back({lineno, std::move(rest), v});
    } else {
      throw fail(0, "unknown keyword '" + kw + "'");
    }
  }
  // Orders are resolved once every edge is known.
  for (auto const& p : pending) {
    std::vector<HalfEdge> order;
    for (auto const& t : p.toks) {
      std::string id = t.text;
      std::optional<HalfEdge::Tag> tag;
      if (!id.empty() && (id.back() == '^' || id.back() == '~')) {
        tag = id.back() == '^' ? HalfEdge::Tag::Hat : HalfEdge::Tag::Tilde;
        id.pop_back();
      }
      auto const* e = G.find_edge(id);
      if (!e) throw ParseError(p.line, t.column, "unknown edge " + id);
      if (e->v1 != p.vertex && e->v2 != p.vertex)
        throw ParseError(p.line, t.column, "edge " + id + " is not incident to " + p.vertex);
      if (!tag) {
        if (e->loop()) throw ParseError(p.line, t.column, "loop " + id + " needs ^ or ~");
        tag = e->v1 == p.vertex ? HalfEdge::Tag::Hat : HalfEdge::Tag::Tilde;
      } else if (!e->loop()) {
        auto expect = e->v1 == p.vertex ? HalfEdge::Tag::Hat : HalfEdge::Tag::Tilde;
        if (*tag != expect)
          throw ParseError(p.line, t.column, "half-edge " + t.text + " is not at " + p.vertex);
      }
      order.push_back({id, *tag});
    }
    G.orders[p.vertex] = std::move(order);
  }
  return G;
}

inline BrauerGraph load_brauer(std::string const& path) {
  return parse_brauer(detail::slurp(path));
}

inline std::string write_brauer(BrauerGraph const& G) {
  std::ostringstream os;
  for (auto const& v : G.vertices) os << "vertex " << v.id << " mult " << v.mult << "\n";
  for (auto const& e : G.edges) os << "edge " << e.id << " " << e.v1 << " " << e.v2 << "\n";
  for (auto const& v : G.vertices) {
    auto it = G.orders.find(v.id);
    if (it == G.orders.end()) continue;
    os << "order " << v.id << ":";
    for (auto const& h : it->second) os << " " << to_string(G, h);
    os << "\n";
  }
  return os.str();
}

}  // namespace umpq

#endif
