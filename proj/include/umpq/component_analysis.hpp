#ifndef UMPQ_COMPONENT_ANALYSIS_HPP
#define UMPQ_COMPONENT_ANALYSIS_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "umpq/omega.hpp"

namespace umpq {

enum class Shape { Line, Cycle, SingleVertex };

inline char const* to_string(Shape s) {
  switch (s) {
    case Shape::Line: return "line";
    case Shape::Cycle: return "cycle";
    case Shape::SingleVertex: return "single-vertex";
  }
  return "?";
}

struct ComponentAnalysis {
  std::size_t component = 0;
  Shape shape = Shape::SingleVertex;
  std::vector<std::size_t> order;  // omega classes along the line or cycle
  Path omega;                      // omega(N)
  bool closes = false;             // wrap junction composable and nonzero
  std::vector<Path> omega_set;     // length-2 junctions in I_N
  std::vector<Path> s;             // R_N minus omega_set, by first position
  std::vector<std::size_t> positions;
  std::size_t eta = 1;
  std::vector<Path> raw_maximals;  // m_0 .. m_k
  std::vector<Path> maximals;      // deduplicated
};

namespace detail {

inline void require_special_multiserial(Decomposition const& d) {
  if (!d.special_multiserial.holds) {
    auto const& q = d.algebra.quiver();
    auto const& w = d.special_multiserial;
    throw NotSpecialMultiserial(
        "arrow " + q.arrow_label(w.arrow) + " has two nonzero " +
        (w.side == SpecialMultiserialCheck::Side::Right ? "successors " : "predecessors ") +
        q.arrow_label(w.first) + ", " + q.arrow_label(w.second));
  }
}

inline void require_monomial(Decomposition const& d, std::size_t comp) {
  if (!d.components[comp].monomial())
    throw NotLocallyMonomial("component " + d.components[comp].id +
                             " has a non-monomial induced ideal");
}

// Does seq occur in the periodic word w w w ...?
inline bool occurs_in_power(std::vector<ArrowId> const& u,
                            std::vector<ArrowId> const& w) {
  if (u.empty() || w.empty()) return false;
  std::vector<ArrowId> big;
  std::size_t copies = u.size() / w.size() + 2;
  for (std::size_t i = 0; i < copies; ++i) big.insert(big.end(), w.begin(), w.end());
  return occurs_in(u, big);
}

}  // namespace detail

inline Shape component_shape(Decomposition const& d, std::size_t comp) {
  detail::require_special_multiserial(d);
  auto const& c = d.components[comp];
  if (c.vertices.size() == 1) return Shape::SingleVertex;
  bool cycle = true;
  for (std::size_t v : c.vertices) {
    if (d.graph.out[v].size() > 1 || d.graph.in[v].size() > 1)
      throw InternalError("ramifications graph vertex of degree > 1");
    cycle = cycle && d.graph.out[v].size() == 1 && d.graph.in[v].size() == 1;
  }
  return cycle ? Shape::Cycle : Shape::Line;
}

struct ComponentOmega {
  Shape shape;
  std::vector<std::size_t> order;
  Path omega;
  bool closes;
};

// rotation shifts the starting omega class of a cycle component.
inline ComponentOmega omega_of_component(Decomposition const& d, std::size_t comp,
                                         std::size_t rotation = 0) {
  auto const& q = d.algebra.quiver();
  auto const& c = d.components[comp];
  ComponentOmega out{component_shape(d, comp), {}, {}, false};
  if (out.shape == Shape::SingleVertex) {
    out.order = c.vertices;
  } else {
    std::size_t start;
    if (out.shape == Shape::Line) {
      auto it = std::find_if(c.vertices.begin(), c.vertices.end(),
                             [&](std::size_t v) { return d.graph.in[v].empty(); });
      start = *it;
    } else {
      start = d.graph.omega.class_of[c.arrows.front()];
    }
    std::size_t cur = start;
    do {
      out.order.push_back(cur);
      if (d.graph.out[cur].empty()) break;
      cur = d.graph.out[cur][0];
    } while (cur != start);
    if (out.order.size() != c.vertices.size())
      throw InternalError("component is neither a line nor a cycle");
    if (out.shape == Shape::Cycle)
      std::rotate(out.order.begin(),
                  out.order.begin() + (rotation % out.order.size()), out.order.end());
  }
  std::vector<ArrowId> w;
  for (std::size_t v : out.order) {
    auto const& a = d.graph.omega.classes[v].arrows();
    w.insert(w.end(), a.begin(), a.end());
  }
  out.omega = Path::of(q, w);
  Path const& first = d.graph.omega.classes[out.order.front()];
  Path const& last = d.graph.omega.classes[out.order.back()];
  out.closes = last.target() == first.source() &&
               !d.algebra.contains(Path::of(q, {last.last(), first.first()}));
  return out;
}

// u divides a power of omega(N), by the junction criterion: every junction
// last(omega_x) first(omega_y) inside u is a consecutive junction of the
// order (indices taken cyclically).
inline bool divides_power(Decomposition const& d, ComponentOmega const& w,
                          Path const& u) {
  if (u.is_trivial()) throw TrivialPath();
  auto const& om = d.graph.omega;
  std::vector<std::size_t> slot(om.classes.size(), SIZE_MAX);
  for (std::size_t i = 0; i < w.order.size(); ++i) slot[w.order[i]] = i;
  for (ArrowId a : u.arrows())
    if (slot[om.class_of[a]] == SIZE_MAX) return false;
  for (std::size_t i = 0; i + 1 < u.length(); ++i) {
    std::size_t x = om.class_of[u[i]], y = om.class_of[u[i + 1]];
    bool junction = om.classes[x].last() == u[i] && om.classes[y].first() == u[i + 1];
    if (!junction) continue;
    if ((slot[x] + 1) % w.order.size() != slot[y]) return false;
  }
  return true;
}

inline bool divides_power_direct(ComponentOmega const& w, Path const& u) {
  return detail::occurs_in_power(u.arrows(), w.omega.arrows());
}

inline ComponentAnalysis analyze_component(Decomposition const& d, std::size_t comp,
                                           std::size_t rotation = 0) {
  detail::require_special_multiserial(d);
  detail::require_monomial(d, comp);
  auto const& q = d.algebra.quiver();
  auto const& c = d.components[comp];
  auto const& om = d.graph.omega;
  ComponentOmega w = omega_of_component(d, comp, rotation);

  ComponentAnalysis out;
  out.component = comp;
  out.shape = w.shape;
  out.order = w.order;
  out.omega = w.omega;
  out.closes = w.closes;

  for (std::size_t x : c.vertices)
    for (std::size_t y : c.vertices) {
      Path const& wx = om.classes[x];
      Path const& wy = om.classes[y];
      if (wx.target() != wy.source()) continue;
      Path j = Path::of(q, {wx.last(), wy.first()});
      if (d.algebra.contains(j)) out.omega_set.push_back(j);
    }
  std::sort(out.omega_set.begin(), out.omega_set.end(), LexLess{&q});
  out.omega_set.erase(std::unique(out.omega_set.begin(), out.omega_set.end()),
                      out.omega_set.end());

  auto const& W = w.omega.arrows();
  std::size_t L = W.size();
  std::vector<std::size_t> pos(q.arrow_count(), SIZE_MAX);
  for (std::size_t i = 0; i < L; ++i) pos[W[i]] = i;

  for (auto const& r : c.ideal.zero)
    if (std::find(out.omega_set.begin(), out.omega_set.end(), r) == out.omega_set.end())
      out.s.push_back(r);
  std::sort(out.s.begin(), out.s.end(),
            [&](Path const& x, Path const& y) { return pos[x.first()] < pos[y.first()]; });
  for (auto const& r : out.s) {
    if (!divides_power(d, w, r))
      throw InternalError("relation " + to_string(q, r) + " does not divide a power of omega(N)");
    out.positions.push_back(pos[r.first()]);
  }
  for (std::size_t i = 1; i < out.positions.size(); ++i)
    if (out.positions[i] == out.positions[i - 1])
      throw InternalError("two relations of S_N start at the same arrow");

  // Arrows of W at unrolled positions [from, to].
  auto window = [&](std::size_t from, std::size_t to) {
    std::vector<ArrowId> a;
    for (std::size_t x = from; x <= to; ++x) a.push_back(W[x % L]);
    return Path::of(q, std::move(a));
  };

  std::size_t k = out.s.size();
  if (k == 0) {
    out.raw_maximals.push_back(w.omega);
  } else {
    auto p = [&](std::size_t i) { return out.positions[i - 1]; };      // 1-based
    auto sigma = [&](std::size_t i) { return out.s[i - 1].length() - 1; };
    std::vector<Path> m(k + 1);
    for (std::size_t i = 1; i < k; ++i) m[i] = window(p(i) + 1, p(i + 1) + sigma(i + 1) - 1);
    if (w.closes) {
      m[0] = m[k] = window(p(k) + 1, L + p(1) + sigma(1) - 1);
    } else {
      m[0] = window(0, p(1) + sigma(1) - 1);
      m[k] = window(p(k) + 1, L - 1);
    }
    out.raw_maximals = m;

    // Endpoint rules.
    for (std::size_t i = 0; i <= k; ++i) {
      ArrowId head = i == 0 ? (w.closes ? out.s[k - 1][1] : W[0]) : out.s[i - 1][1];
      ArrowId tail = i == k ? (w.closes ? out.s[0][sigma(1) - 1] : W[L - 1])
                            : out.s[i][sigma(i + 1) - 1];
      if (m[i].first() != head || m[i].last() != tail)
        throw InternalError("endpoint rule violated by " + to_string(q, m[i]));
    }
  }
  for (auto const& m : out.raw_maximals)
    if (std::find(out.maximals.begin(), out.maximals.end(), m) == out.maximals.end())
      out.maximals.push_back(m);

  // eta: least power of W containing every element of S_N and M_N.
  auto need = [&](Path const& x) {
    std::size_t start = pos[x.first()];
    return (start + x.length() + L - 1) / L;
  };
  out.eta = 1;
  for (auto const& x : out.s) out.eta = std::max(out.eta, need(x));
  for (auto const& x : out.maximals) out.eta = std::max(out.eta, need(x));
  std::vector<ArrowId> power;
  for (std::size_t i = 0; i < out.eta; ++i) power.insert(power.end(), W.begin(), W.end());
  for (auto const* set : {&out.s, &out.maximals})
    for (auto const& x : *set)
      if (!occurs_in(x.arrows(), power))
        throw InternalError("eta witness failed for " + to_string(q, x));
  return out;
}

inline std::vector<Path> maximal_paths_of_component(Decomposition const& d,
                                                    std::size_t comp) {
  return analyze_component(d, comp).maximals;
}

// Definition-level check: m is nonzero and every one-arrow extension is zero.
inline bool is_maximal_path(AlgebraPresentation const& A, Path const& m) {
  auto const& q = A.quiver();
  if (A.contains(m)) return false;
  for (ArrowId a : q.in_arrows(m.source()))
    if (!A.contains(concat(Path::arrow(q, a), m))) return false;
  for (ArrowId a : q.out_arrows(m.target()))
    if (!A.contains(concat(m, Path::arrow(q, a)))) return false;
  return true;
}

}  // namespace umpq

#endif
