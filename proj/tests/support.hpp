#ifndef UMPQ_TESTS_SUPPORT_HPP
#define UMPQ_TESTS_SUPPORT_HPP

// Shared helpers for the test binaries: fixtures and random instances.

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "umpq/umpq.hpp"

namespace umpq::testing {

inline std::string fixture(std::string const& name) {
  return std::string(UMPQ_FIXTURES) + "/" + name;
}

inline AlgebraPresentation load(std::string const& name) { return load_quiver(fixture(name)); }

inline Path P(Quiver const& q, std::string const& s) { return Path::parse(q, s); }

inline std::vector<std::string> strs(Quiver const& q, std::vector<Path> const& ps) {
  std::vector<std::string> out;
  for (auto const& p : ps) out.push_back(to_string(q, p));
  return out;
}

inline std::set<std::string> str_set(Quiver const& q, std::vector<Path> const& ps) {
  auto v = strs(q, ps);
  return {v.begin(), v.end()};
}

// Each class as the set of its members' strings.
inline std::set<std::set<std::string>> class_sets(Quiver const& q,
                                                  std::vector<MaximalClass> const& cs) {
  std::set<std::set<std::string>> out;
  for (auto const& c : cs) out.insert(str_set(q, c.members));
  return out;
}

// Random monomial algebra, special multiserial by construction: at every
// vertex a random partial matching between incoming and outgoing arrows
// decides the nonzero length-two paths; longer zero relations are walks
// along the matching.
inline std::optional<AlgebraPresentation> random_targeted(std::mt19937& rng, std::size_t max_vertices = 6,
                                                          std::size_t max_arrows = 10,
                                                          std::size_t max_bound = 8) {
  auto pick = [&](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  Quiver q;
  std::size_t n = pick(1, max_vertices);
  for (std::size_t i = 0; i < n; ++i) q.add_vertex("v" + std::to_string(i));
  std::size_t k = pick(1, max_arrows);
  std::string letters = "abcdefghijklmnopqrstuvwxyz";
  std::vector<std::size_t> names(letters.size());
  std::iota(names.begin(), names.end(), 0);
  std::shuffle(names.begin(), names.end(), rng);
  for (std::size_t i = 0; i < k; ++i)
    q.add_arrow(std::string(1, letters[names[i]]), static_cast<VertexId>(pick(0, n - 1)),
                static_cast<VertexId>(pick(0, n - 1)));

  std::vector<std::optional<ArrowId>> next(k);
  std::vector<Path> zero;
  for (VertexId v = 0; v < n; ++v) {
    std::vector<ArrowId> in(q.in_arrows(v).begin(), q.in_arrows(v).end());
    std::vector<ArrowId> out(q.out_arrows(v).begin(), q.out_arrows(v).end());
    std::shuffle(in.begin(), in.end(), rng);
    std::shuffle(out.begin(), out.end(), rng);
    std::size_t pairs = std::min(in.size(), out.size());
    std::set<std::pair<ArrowId, ArrowId>> keep;
    for (std::size_t i = 0; i < pairs; ++i)
      if (pick(0, 3) != 0) {
        keep.insert({in[i], out[i]});
        next[in[i]] = out[i];
      }
    for (ArrowId a : in)
      for (ArrowId b : out)
        if (!keep.count({a, b})) zero.push_back(Path::of(q, {a, b}));
  }
  // Walk relations; every cycle of the matching needs one.
  std::size_t extra = pick(1, 4);
  std::vector<char> on_cycle(k, 0);
  for (ArrowId a = 0; a < k; ++a) {
    ArrowId cur = a;
    for (std::size_t s = 0; s <= k && next[cur]; ++s) {
      cur = *next[cur];
      if (cur == a) {
        on_cycle[a] = 1;
        break;
      }
    }
  }
  std::vector<char> cycle_done(k, 0);
  for (ArrowId a = 0; a < k; ++a) {
    bool forced = on_cycle[a] && !cycle_done[a];
    if (!forced && (extra == 0 || pick(0, 1) != 0)) continue;
    if (!forced) --extra;
    std::size_t len = pick(3, 6);
    std::vector<ArrowId> w{a};
    while (w.size() < len && next[w.back()]) w.push_back(*next[w.back()]);
    if (w.size() < 3) continue;
    if (forced) {
      ArrowId cur = a;
      do {
        cycle_done[cur] = 1;
        cur = *next[cur];
      } while (cur != a);
    }
    zero.push_back(Path::of(q, w));
  }
  try {
    auto A = AlgebraPresentation::create(std::move(q), std::move(zero), {}, max_bound);
    return minimalize_relations(A);
  } catch (NotAdmissible const&) {
    return std::nullopt;
  }
}

// Random monomial algebra by rejection: random quiver and random zero
// paths, kept when admissible within the bound and special multiserial.
inline std::optional<AlgebraPresentation> random_rejection(std::mt19937& rng, std::size_t max_vertices = 6,
                                                           std::size_t max_arrows = 10,
                                                           std::size_t max_bound = 8) {
  auto pick = [&](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  Quiver q;
  std::size_t n = pick(1, max_vertices);
  for (std::size_t i = 0; i < n; ++i) q.add_vertex(std::to_string(i + 1));
  std::size_t k = pick(1, max_arrows);
  for (std::size_t i = 0; i < k; ++i)
    q.add_arrow("x" + std::to_string(i), static_cast<VertexId>(pick(0, n - 1)),
                static_cast<VertexId>(pick(0, n - 1)));
  std::vector<Path> zero;
  std::set<std::pair<ArrowId, ArrowId>> killed;
  for (ArrowId a = 0; a < k; ++a)
    for (ArrowId b : q.out_arrows(q.target(a)))
      if (pick(0, 1) != 0) {
        zero.push_back(Path::of(q, {a, b}));
        killed.insert({a, b});
      }
  // longer relations walk along the surviving length-two paths
  for (std::size_t t = pick(1, 4); t > 0; --t) {
    ArrowId a = static_cast<ArrowId>(pick(0, k - 1));
    std::vector<ArrowId> w{a};
    std::size_t len = pick(3, 6);
    while (w.size() < len) {
      std::vector<ArrowId> outs;
      for (ArrowId b : q.out_arrows(q.target(w.back())))
        if (!killed.count({w.back(), b})) outs.push_back(b);
      if (outs.empty()) break;
      w.push_back(outs[pick(0, outs.size() - 1)]);
    }
    if (w.size() >= 3) zero.push_back(Path::of(q, w));
  }
  try {
    auto A = minimalize_relations(AlgebraPresentation::create(std::move(q), std::move(zero), {}, max_bound));
    if (!is_special_multiserial(A).holds) return std::nullopt;
    return A;
  } catch (NotAdmissible const&) {
    return std::nullopt;
  }
}

// Random valid Brauer graph; with_loops decides whether loops may occur.
inline BrauerGraph random_brauer(std::mt19937& rng, bool with_loops, std::size_t max_vertices = 6,
                                 std::size_t max_edges = 8, int max_mult = 3) {
  auto pick = [&](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  BrauerGraph G;
  std::size_t n = pick(with_loops ? 1 : 2, max_vertices);
  for (std::size_t i = 0; i < n; ++i)
    G.vertices.push_back({"v" + std::to_string(i), static_cast<int>(pick(1, max_mult))});
  std::size_t e = pick(std::max<std::size_t>(n - 1, 1), max_edges);
  std::size_t id = 0;
  auto add = [&](std::size_t x, std::size_t y) {
    G.edges.push_back({"e" + std::to_string(id++), G.vertices[x].id, G.vertices[y].id});
  };
  for (std::size_t i = 1; i < n; ++i) add(pick(0, i - 1), i);
  if (with_loops) {
    std::size_t x = pick(0, n - 1);
    add(x, x);
  }
  while (G.edges.size() < e) {
    if (with_loops && (n == 1 || pick(0, 2) == 0)) {
      std::size_t x = pick(0, n - 1);
      add(x, x);
    } else {
      std::size_t x = pick(0, n - 1), y = pick(0, n - 2);
      if (y >= x) ++y;
      add(x, y);
    }
  }
  for (auto const& v : G.vertices) {
    if (G.truncated(v.id)) continue;
    auto inc = G.incident(v.id);
    std::shuffle(inc.begin(), inc.end(), rng);
    G.orders[v.id] = inc;
  }
  return G;
}

// All valid Brauer graphs with at most two vertices, at most two edges and
// multiplicities up to max_mult, with every cyclic order.
inline std::vector<BrauerGraph> small_brauer_graphs(int max_mult = 3) {
  std::vector<BrauerGraph> out;
  struct Shape {
    std::size_t n;
    std::vector<std::pair<int, int>> edges;
  };
  std::vector<Shape> shapes = {
      {1, {{0, 0}}},          {1, {{0, 0}, {0, 0}}}, {2, {{0, 1}}},
      {2, {{0, 1}, {0, 1}}},  {2, {{0, 1}, {0, 0}}}, {2, {{0, 1}, {1, 1}}},
  };
  for (auto const& s : shapes) {
    std::vector<int> mult(s.n, 1);
    while (true) {
      BrauerGraph G;
      for (std::size_t i = 0; i < s.n; ++i) G.vertices.push_back({"v" + std::to_string(i), mult[i]});
      for (std::size_t i = 0; i < s.edges.size(); ++i)
        G.edges.push_back({"e" + std::to_string(i), G.vertices[s.edges[i].first].id,
                           G.vertices[s.edges[i].second].id});
      // every cyclic order: fix the first half-edge, permute the rest
      std::vector<std::vector<std::vector<HalfEdge>>> choices;
      std::vector<std::string> nt;
      for (auto const& v : G.vertices) {
        if (G.truncated(v.id)) continue;
        auto inc = G.incident(v.id);
        std::vector<std::vector<HalfEdge>> perms;
        std::sort(inc.begin() + 1, inc.end());
        do perms.push_back(inc);
        while (std::next_permutation(inc.begin() + 1, inc.end()));
        choices.push_back(perms);
        nt.push_back(v.id);
      }
      std::vector<std::size_t> idx(choices.size(), 0);
      while (true) {
        BrauerGraph H = G;
        for (std::size_t i = 0; i < nt.size(); ++i) H.orders[nt[i]] = choices[i][idx[i]];
        out.push_back(H);
        std::size_t i = 0;
        while (i < idx.size() && ++idx[i] == choices[i].size()) idx[i++] = 0;
        if (i == idx.size()) break;
      }
      std::size_t j = 0;
      while (j < s.n && ++mult[j] > max_mult) mult[j++] = 1;
      if (j == s.n) break;
    }
  }
  return out;
}

// The same algebra with arrows renamed through `names` (by arrow id) and
// vertices listed in reverse.
inline AlgebraPresentation relabel(AlgebraPresentation const& A,
                                   std::vector<std::string> const& names) {
  auto const& q = A.quiver();
  Quiver r;
  std::vector<VertexId> vmap(q.vertex_count());
  for (VertexId v = q.vertex_count(); v-- > 0;) vmap[v] = r.add_vertex("w" + q.vertex_label(v));
  for (ArrowId a = 0; a < q.arrow_count(); ++a)
    r.add_arrow(names[a], vmap[q.source(a)], vmap[q.target(a)]);
  auto map = [&](Path const& p) { return Path::of(r, p.arrows()); };
  std::vector<Path> zero;
  for (auto const& z : A.zero()) zero.push_back(map(z));
  std::vector<LinearRelation> lin;
  for (auto const& l : A.linear()) {
    std::vector<Term> terms;
    for (auto const& t : l.terms()) terms.push_back({t.coefficient, map(t.path)});
    lin.push_back(LinearRelation::make(r, std::move(terms)));
  }
  return AlgebraPresentation::create(std::move(r), std::move(zero), std::move(lin), A.cap());
}

}  // namespace umpq::testing

#endif
