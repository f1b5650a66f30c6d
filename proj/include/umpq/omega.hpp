#ifndef UMPQ_OMEGA_HPP
#define UMPQ_OMEGA_HPP

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "umpq/ideal.hpp"

namespace umpq {

namespace detail {

inline Path canonical_cycle(Quiver const& q, std::vector<ArrowId> cycle) {
  auto start = std::min_element(cycle.begin(), cycle.end(), [&](ArrowId x, ArrowId y) {
    return q.rank(x) < q.rank(y);
  });
  std::rotate(cycle.begin(), start, cycle.end());
  return Path::of(q, std::move(cycle));
}

inline bool passes_through(Quiver const& q, VertexId v) {
  return q.in_arrows(v).size() == 1 && q.out_arrows(v).size() == 1;
}

}  // namespace detail

// Longest path through a whose interior vertices have one arrow in and one
// arrow out. An oriented cycle component is cut at its smallest label.
inline Path omega_path(Quiver const& q, ArrowId a) {
  std::vector<ArrowId> fwd{a};
  std::vector<char> seen(q.arrow_count(), 0);
  seen[a] = 1;
  ArrowId cur = a;
  while (detail::passes_through(q, q.target(cur))) {
    ArrowId next = q.out_arrows(q.target(cur))[0];
    if (seen[next]) return detail::canonical_cycle(q, fwd);
    seen[next] = 1;
    fwd.push_back(next);
    cur = next;
  }
  std::vector<ArrowId> back;
  cur = a;
  while (detail::passes_through(q, q.source(cur))) {
    ArrowId prev = q.in_arrows(q.source(cur))[0];
    if (seen[prev]) break;
    seen[prev] = 1;
    back.push_back(prev);
    cur = prev;
  }
  std::reverse(back.begin(), back.end());
  back.insert(back.end(), fwd.begin(), fwd.end());
  return Path::of(q, std::move(back));
}

struct OmegaAssignment {
  std::vector<Path> classes;          // distinct omega paths, label order
  std::vector<std::size_t> class_of;  // arrow -> index into classes

  Path const& omega(ArrowId a) const { return classes[class_of[a]]; }
};

inline OmegaAssignment compute_omega(Quiver const& q) {
  std::vector<Path> found;
  std::vector<std::size_t> tmp(q.arrow_count(), SIZE_MAX);
  for (ArrowId a = 0; a < q.arrow_count(); ++a) {
    if (tmp[a] != SIZE_MAX) continue;
    Path w = omega_path(q, a);
    for (ArrowId b : w.arrows()) tmp[b] = found.size();
    found.push_back(std::move(w));
  }
  std::vector<std::size_t> order(found.size());
  std::iota(order.begin(), order.end(), 0);
  LexLess lex{&q};
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return lex(found[x], found[y]); });
  std::vector<std::size_t> pos(found.size());
  OmegaAssignment out;
  for (std::size_t i = 0; i < order.size(); ++i) {
    pos[order[i]] = i;
    out.classes.push_back(found[order[i]]);
  }
  out.class_of.resize(q.arrow_count());
  for (ArrowId a = 0; a < q.arrow_count(); ++a) out.class_of[a] = pos[tmp[a]];
  return out;
}

struct RamificationsGraph {
  OmegaAssignment omega;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<std::vector<std::size_t>> out, in;

  std::size_t vertex_count() const noexcept { return omega.classes.size(); }
  bool has_edge(std::size_t x, std::size_t y) const {
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(x, y));
  }
};

inline RamificationsGraph ramifications_graph(AlgebraPresentation const& A) {
  auto const& q = A.quiver();
  RamificationsGraph g;
  g.omega = compute_omega(q);
  std::size_t n = g.omega.classes.size();
  g.out.resize(n);
  g.in.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y) continue;
      Path const& wx = g.omega.classes[x];
      Path const& wy = g.omega.classes[y];
      if (wx.target() != wy.source()) continue;
      if (A.contains(Path::of(q, {wx.last(), wy.first()}))) continue;
      g.edges.emplace_back(x, y);
      g.out[x].push_back(y);
      g.in[y].push_back(x);
    }
  }
  return g;
}

// Generators of I_N on the ambient quiver. linear is empty iff A_N is
// monomial.
struct InducedIdeal {
  std::vector<Path> zero;
  std::vector<LinearRelation> linear;
  bool monomial = true;
};

struct Component {
  std::string id;
  std::vector<std::size_t> vertices;        // omega classes, ascending
  std::vector<ArrowId> arrows;              // ambient ids, label order
  std::vector<VertexId> quiver_vertices;    // ambient ids, ascending
  InducedIdeal ideal;                       // minimal, ambient ids
  std::shared_ptr<AlgebraPresentation const> algebra;  // A_N on Q_N
  std::vector<ArrowId> arrow_to_ambient;
  std::vector<VertexId> vertex_to_ambient;

  bool monomial() const noexcept { return ideal.monomial; }

  bool contains_arrow(ArrowId a) const {
    return std::find(arrows.begin(), arrows.end(), a) != arrows.end();
  }

  Path to_ambient(Quiver const& q, Path const& p) const {
    if (p.is_trivial()) return Path::trivial(vertex_to_ambient[p.source()]);
    std::vector<ArrowId> ids;
    for (ArrowId a : p.arrows()) ids.push_back(arrow_to_ambient[a]);
    return Path::of(q, std::move(ids));
  }

  Path to_local(Path const& p) const {
    auto const& sub = algebra->quiver();
    if (p.is_trivial()) {
      auto it = std::find(vertex_to_ambient.begin(), vertex_to_ambient.end(), p.source());
      return Path::trivial(static_cast<VertexId>(it - vertex_to_ambient.begin()));
    }
    std::vector<ArrowId> ids;
    for (ArrowId a : p.arrows()) {
      auto it = std::find(arrow_to_ambient.begin(), arrow_to_ambient.end(), a);
      if (it == arrow_to_ambient.end())
        throw CrossComponentPath("path leaves the component");
      ids.push_back(static_cast<ArrowId>(it - arrow_to_ambient.begin()));
    }
    return Path::of(sub, std::move(ids));
  }
};

namespace detail {

// Linear dependencies among the normal forms of the given paths.
inline std::vector<LinearRelation> kernel_relations(AlgebraPresentation const& A,
                                                    std::vector<Path> paths) {
  auto const& q = A.quiver();
  std::sort(paths.begin(), paths.end(), PathLess{&q});
  struct Row {
    Vec value;
    Vec combo;
  };
  std::map<Path, Row, PathLess> rows(PathLess{&q});
  std::vector<LinearRelation> out;
  for (auto const& p : paths) {
    Vec v = A.model().normal_form(p);
    Vec combo(PathLess{&q});
    combo.emplace(p, Rational(1));
    auto it = v.end();
    while (it != v.begin()) {
      --it;
      auto r = rows.find(it->first);
      if (r == rows.end()) continue;
      Path pivot = it->first;
      Rational c = it->second;
      v.erase(it);
      for (auto const& [x, y] : r->second.value)
        if (!(x == pivot)) axpy(v, x, -c * y);
      for (auto const& [x, y] : r->second.combo) axpy(combo, x, -c * y);
      it = v.lower_bound(pivot);
    }
    if (v.empty()) {
      std::vector<Term> terms;
      for (auto const& [x, y] : combo) terms.push_back({y, x});
      out.push_back(LinearRelation::make(q, std::move(terms)));
      continue;
    }
    Path pivot = std::prev(v.end())->first;
    Rational c = std::prev(v.end())->second;
    for (auto& [x, y] : v) y /= c;
    for (auto& [x, y] : combo) y /= c;
    rows.emplace(pivot, Row{std::move(v), std::move(combo)});
  }
  return out;
}

inline std::vector<Path> nonzero_paths_on(AlgebraPresentation const& A,
                                          std::vector<char> const& allowed) {
  auto const& q = A.quiver();
  std::vector<Path> out, frontier;
  for (ArrowId a = 0; a < q.arrow_count(); ++a)
    if (allowed[a]) frontier.push_back(Path::arrow(q, a));
  while (!frontier.empty()) {
    std::vector<Path> next;
    for (auto const& p : frontier) {
      out.push_back(p);
      for (ArrowId y : q.out_arrows(p.target())) {
        if (!allowed[y]) continue;
        Path r = concat(p, Path::arrow(q, y));
        if (!A.contains(r)) next.push_back(std::move(r));
      }
    }
    frontier = std::move(next);
  }
  return out;
}

}  // namespace detail

// Generators of I intersected with the path algebra of the arrows in N.
inline InducedIdeal induced_ideal(AlgebraPresentation const& A,
                                  std::vector<ArrowId> const& arrows) {
  auto const& q = A.quiver();
  std::vector<char> allowed(q.arrow_count(), 0);
  for (ArrowId a : arrows) allowed[a] = 1;
  InducedIdeal out;
  if (A.is_monomial()) {
    AlgebraPresentation M = ensure_minimal(A);
    for (auto const& z : M.zero()) {
      bool inside = std::all_of(z.arrows().begin(), z.arrows().end(),
                                [&](ArrowId a) { return allowed[a]; });
      if (inside) out.zero.push_back(z);
    }
    return out;
  }
  auto nonzero = detail::nonzero_paths_on(A, allowed);
  for (auto const& p : nonzero) {
    for (ArrowId y : q.out_arrows(p.target())) {
      if (!allowed[y]) continue;
      Path r = concat(p, Path::arrow(q, y));
      if (!A.contains(r)) continue;
      if (!A.contains(subpath(q, r, 1, r.length() - 1))) out.zero.push_back(r);
    }
  }
  std::erase_if(nonzero, [](Path const& p) { return p.length() < 2; });
  out.linear = detail::kernel_relations(A, nonzero);
  out.monomial = out.linear.empty();
  return out;
}

struct Decomposition {
  AlgebraPresentation algebra;  // minimal presentation of the input
  RamificationsGraph graph;
  std::vector<Component> components;
  std::vector<std::size_t> component_of_class;
  std::vector<std::size_t> component_of_arrow;
  SpecialMultiserialCheck special_multiserial;

  Component const& component_of(ArrowId a) const {
    return components[component_of_arrow[a]];
  }
};

inline std::vector<Component> components(AlgebraPresentation const& A,
                                         RamificationsGraph const& G) {
  auto const& q = A.quiver();
  std::size_t n = G.vertex_count();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [x, y] : G.edges) parent[find(x)] = find(y);
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t x = 0; x < n; ++x) groups[find(x)].push_back(x);
  std::vector<std::vector<std::size_t>> parts;
  for (auto& [root, members] : groups) parts.push_back(members);
  std::sort(parts.begin(), parts.end());

  std::vector<Component> out;
  for (auto const& members : parts) {
    Component c;
    c.vertices = members;
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (i) c.id += ",";
      c.id += to_string(q, G.omega.classes[members[i]]);
      for (ArrowId a : G.omega.classes[members[i]].arrows()) c.arrows.push_back(a);
    }
    std::sort(c.arrows.begin(), c.arrows.end(),
              [&](ArrowId x, ArrowId y) { return q.rank(x) < q.rank(y); });
    for (ArrowId a : c.arrows) {
      c.quiver_vertices.push_back(q.source(a));
      c.quiver_vertices.push_back(q.target(a));
    }
    std::sort(c.quiver_vertices.begin(), c.quiver_vertices.end());
    c.quiver_vertices.erase(std::unique(c.quiver_vertices.begin(), c.quiver_vertices.end()),
                            c.quiver_vertices.end());

    Quiver sub;
    std::map<VertexId, VertexId> vmap;
    for (VertexId v : c.quiver_vertices) {
      vmap[v] = sub.add_vertex(q.vertex_label(v));
      c.vertex_to_ambient.push_back(v);
    }
    for (ArrowId a : c.arrows) {
      sub.add_arrow(q.arrow_label(a), vmap[q.source(a)], vmap[q.target(a)]);
      c.arrow_to_ambient.push_back(a);
    }
    auto local = [&](Path const& p) {
      std::vector<ArrowId> ids;
      for (ArrowId a : p.arrows())
        ids.push_back(static_cast<ArrowId>(
            std::find(c.arrows.begin(), c.arrows.end(), a) - c.arrows.begin()));
      return Path::of(sub, std::move(ids));
    };
    InducedIdeal raw = induced_ideal(A, c.arrows);
    std::vector<Path> lz;
    for (auto const& z : raw.zero) lz.push_back(local(z));
    std::vector<LinearRelation> ll;
    for (auto const& r : raw.linear) {
      std::vector<Term> terms;
      for (auto const& t : r.terms()) terms.push_back({t.coefficient, local(t.path)});
      ll.push_back(LinearRelation::make(sub, std::move(terms)));
    }
    auto sub_algebra = minimalize_relations(
        AlgebraPresentation::create(std::move(sub), std::move(lz), std::move(ll), A.cap()));
    c.algebra = std::make_shared<AlgebraPresentation const>(sub_algebra);
    for (auto const& z : sub_algebra.zero()) c.ideal.zero.push_back(c.to_ambient(q, z));
    for (auto const& r : sub_algebra.linear()) {
      std::vector<Term> terms;
      for (auto const& t : r.terms())
        terms.push_back({t.coefficient, c.to_ambient(q, t.path)});
      c.ideal.linear.push_back(LinearRelation::make(q, std::move(terms)));
    }
    std::sort(c.ideal.zero.begin(), c.ideal.zero.end(), PathLess{&q});
    c.ideal.monomial = c.ideal.linear.empty();
    out.push_back(std::move(c));
  }
  return out;
}

inline Decomposition decompose(AlgebraPresentation const& input) {
  AlgebraPresentation A = ensure_minimal(input);
  RamificationsGraph G = ramifications_graph(A);
  auto comps = components(A, G);
  Decomposition d{A, std::move(G), std::move(comps), {}, {}, is_special_multiserial(A)};
  d.component_of_class.resize(d.graph.vertex_count());
  d.component_of_arrow.resize(A.quiver().arrow_count());
  for (std::size_t i = 0; i < d.components.size(); ++i) {
    for (std::size_t v : d.components[i].vertices) d.component_of_class[v] = i;
    for (ArrowId a : d.components[i].arrows) d.component_of_arrow[a] = i;
  }
  return d;
}

// N(u): the component containing u, defined when no zero junction
// last(omega_a) * first(omega_b) occurs inside u.
inline std::size_t component_of_path(Decomposition const& d, Path const& u) {
  if (u.is_trivial()) throw TrivialPath();
  auto const& q = d.algebra.quiver();
  auto const& om = d.graph.omega;
  for (std::size_t i = 0; i + 1 < u.length(); ++i) {
    ArrowId x = u[i], y = u[i + 1];
    if (om.omega(x).last() == x && om.omega(y).first() == y &&
        d.algebra.contains(Path::of(q, {x, y})))
      throw CrossComponentPath("zero junction " + q.arrow_label(x) +
                               q.arrow_label(y) + " inside " + to_string(q, u));
  }
  std::size_t c = d.component_of_arrow[u[0]];
  for (ArrowId a : u.arrows())
    if (d.component_of_arrow[a] != c)
      throw InternalError("nonzero-junction path spans two components");
  return c;
}

inline bool is_locally_monomial(Decomposition const& d) {
  return std::all_of(d.components.begin(), d.components.end(),
                     [](Component const& c) { return c.monomial(); });
}

inline bool is_locally_monomial(AlgebraPresentation const& A) {
  return is_locally_monomial(decompose(A));
}

}  // namespace umpq

#endif
