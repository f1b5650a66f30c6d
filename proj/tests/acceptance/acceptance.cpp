// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "../support.hpp"

using namespace umpq;
using namespace umpq::testing;

namespace {

struct Result {
  bool pass = true;
  std::size_t checks = 0;
  std::vector<std::string> notes;

  void check(bool ok, std::string const& what) {
    ++checks;
    if (!ok) {
      pass = false;
      if (notes.size() < 12) notes.push_back(what);
    }
  }
};

using Clock = std::chrono::steady_clock;

std::size_t find_comp(Decomposition const& d, std::string const& arrow) {
  return d.component_of_arrow[d.algebra.quiver().require_arrow(arrow)];
}

std::set<std::string> omega_strings(Decomposition const& d) {
  std::set<std::string> out;
  for (auto const& w : d.graph.omega.classes) out.insert(to_string(d.algebra.quiver(), w));
  return out;
}

std::set<std::string> edge_strings(Decomposition const& d) {
  auto const& q = d.algebra.quiver();
  std::set<std::string> out;
  for (auto const& [x, y] : d.graph.edges)
    out.insert(to_string(q, d.graph.omega.classes[x]) + "->" + to_string(q, d.graph.omega.classes[y]));
  return out;
}

std::set<std::string> component_ids(Decomposition const& d) {
  std::set<std::string> out;
  for (auto const& c : d.components) out.insert(c.id);
  return out;
}

std::set<std::string> all_members(Quiver const& q, std::vector<MaximalClass> const& cs) {
  std::set<std::string> out;
  for (auto const& c : cs)
    for (auto const& m : c.members) out.insert(to_string(q, m));
  return out;
}

Result criterion1() {
  Result r;
  using S = std::set<std::string>;
  {
    auto d = decompose(load("ex1.quiver"));
    auto const& q = d.algebra.quiver();
    for (auto a : {"a", "b", "c", "d"})
      r.check(to_string(q, d.graph.omega.omega(q.require_arrow(a))) == "dabc", std::string("ex1 omega_") + a);
    r.check(to_string(q, d.graph.omega.omega(q.require_arrow("e"))) == "e", "ex1 omega_e");
    r.check(to_string(q, d.graph.omega.omega(q.require_arrow("h"))) == "gh", "ex1 omega_h");
    r.check(omega_strings(d) == S{"dabc", "e", "f", "gh"}, "ex1 omega classes");
    r.check(edge_strings(d) == S{"dabc->e", "f->gh"}, "ex1 ramifications graph");
    r.check(component_ids(d) == S{"dabc,e", "f,gh"}, "ex1 components");
    auto L = analyze_component(d, find_comp(d, "a"));
    auto N = analyze_component(d, find_comp(d, "f"));
    r.check(to_string(q, L.omega) == "dabce" && to_string(q, N.omega) == "fgh", "ex1 omega(L), omega(N)");
    r.check(str_set(q, L.omega_set) == S{"cd"} && str_set(q, L.s) == S{"abc"}, "ex1 Omega_L, S_L");
    r.check(N.omega_set.empty() && N.s.empty(), "ex1 Omega_N, S_N empty");
    r.check(str_set(q, L.maximals) == S{"dab", "bce"} && str_set(q, N.maximals) == S{"fgh"},
            "ex1 M_L, M_N");
    auto rep = ump_report(d, Route::CrossCheck);
    r.check(all_members(q, rep.maximal) == S{"dab", "bce", "fgh"}, "ex1 M");
    r.check(rep.global.outcome == Outcome::NotUMP && !rep.mismatch, "ex1 NotUMP");
    r.check(ump_component(d, find_comp(d, "a")).outcome == Outcome::NotUMP &&
                ump_component(d, find_comp(d, "f")).outcome == Outcome::IsUMP,
            "ex1 per-component verdicts");
  }
  {
    auto d = decompose(load("ex2.quiver"));
    auto const& q = d.algebra.quiver();
    r.check(omega_strings(d) == S{"a", "b", "c", "de"}, "ex2 omega classes");
    r.check(component_ids(d) == S{"a", "b", "c,de"}, "ex2 components");
    r.check(str_set(q, analyze_component(d, find_comp(d, "a")).maximals) == S{"aa"} &&
                str_set(q, analyze_component(d, find_comp(d, "b")).maximals) == S{"bb"} &&
                str_set(q, analyze_component(d, find_comp(d, "c")).maximals) == S{"cde"},
            "ex2 per-component maximal paths");
    auto rep = ump_report(d, Route::CrossCheck);
    r.check(class_sets(q, rep.maximal) == std::set<S>{{"aa", "bb"}, {"cde"}}, "ex2 M = {a^2, cde}");
    r.check(rep.global.outcome == Outcome::IsUMP && !rep.mismatch, "ex2 IsUMP");
  }
  {
    auto d = decompose(load("hub.quiver"));
    auto const& q = d.algebra.quiver();
    r.check(omega_strings(d) == S{"ab", "cd", "ef"}, "hub omega classes");
    auto L = analyze_component(d, find_comp(d, "a"));
    auto N = analyze_component(d, find_comp(d, "e"));
    r.check(to_string(q, L.omega) == "abcd" && to_string(q, N.omega) == "ef", "hub omega(L), omega(N)");
    r.check(str_set(q, L.omega_set) == S{"ba", "dc"} && str_set(q, L.s) == S{"abcda", "dabcd"},
            "hub Omega_L, S_L");
    r.check(N.omega_set.empty() && str_set(q, N.s) == S{"efe", "fef"}, "hub Omega_N, S_N");
    r.check(str_set(q, L.maximals) == S{"abcd", "bcdabc"} && str_set(q, N.maximals) == S{"ef", "fe"},
            "hub M_L, M_N");
    r.check(edge_strings(d).count("ab->cd") && edge_strings(d).count("cd->ab"), "hub 2-cycle ab, cd");
    auto rep = ump_report(d, Route::CrossCheck);
    r.check(all_members(q, rep.maximal) == S{"abcd", "bcdabc", "ef", "fe"}, "hub M");
    r.check(rep.global.outcome == Outcome::NotUMP && !rep.mismatch, "hub NotUMP");
  }
  {
    auto d = decompose(load("nonsm.quiver"));
    auto const& q = d.algebra.quiver();
    r.check(to_string(q, d.graph.omega.omega(q.require_arrow("b"))) == "bc" &&
                to_string(q, d.graph.omega.omega(q.require_arrow("a"))) == "a" &&
                to_string(q, d.graph.omega.omega(q.require_arrow("d"))) == "d",
            "non-SM omega");
    r.check(edge_strings(d) == S{"a->d"} && component_ids(d) == S{"a,d", "bc"}, "non-SM graph");
    r.check(is_locally_monomial(d) && !d.special_multiserial.holds, "non-SM flags");
    r.check(ump_main(d).outcome == Outcome::NotApplicable, "non-SM theorem route NotApplicable");
    auto L = *d.components[find_comp(d, "a")].algebra;
    auto N = *d.components[find_comp(d, "b")].algebra;
    r.check(all_members(L.quiver(), maximal_paths_bruteforce(L)) == S{"aad"} &&
                all_members(N.quiver(), maximal_paths_bruteforce(N)) == S{"cbc"},
            "non-SM M_L, M_N");
    r.check(ump_report(d, Route::Oracle).global.outcome == Outcome::IsUMP, "non-SM oracle IsUMP");
  }
  {
    auto d1 = decompose(load("morita1.quiver"));
    auto d2 = decompose(load("morita2.quiver"));
    auto const& q = d1.algebra.quiver();
    auto omega = [&](Decomposition const& d, char const* a) {
      return labels(d.algebra.quiver(), d.graph.omega.omega(d.algebra.quiver().require_arrow(a)));
    };
    using V = std::vector<std::string>;
    r.check(omega(d1, "alpha") == V{"alpha", "beta"} && omega(d1, "gamma") == V{"gamma"} &&
                omega(d1, "delta") == V{"delta", "epsilon"},
            "Morita omega");
    r.check(d1.graph.edges.size() == 3 && d2.graph.edges.size() == 4, "Morita ramifications graphs");
    auto v1 = ump_report(d1, Route::Auto).global;
    r.check(v1.outcome == Outcome::NotUMP && v1.pair &&
                q.arrow_label(v1.pair->arrow) == "epsilon",
            "Morita A1 NotUMP sharing epsilon");
    auto c1 = ump_report(d1, Route::Oracle).maximal;
    r.check(all_members(q, c1) == S{"epsilon.gamma", "epsilon.alpha.beta.delta"}, "Morita M1");
    auto rep2 = ump_report(d2, Route::Auto);
    r.check(rep2.global.outcome == Outcome::IsUMP && rep2.maximal.size() == 1 &&
                to_string(d2.algebra.quiver(), rep2.maximal[0].representative) ==
                    "epsilon.alpha.beta.delta",
            "Morita A2 IsUMP, M2 = {epsilon alpha beta delta}");
  }
  return r;
}

// Random SM monomial instances: two targeted for every rejection sample.
std::vector<AlgebraPresentation> random_population(std::size_t count, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<AlgebraPresentation> out;
  while (out.size() < count) {
    auto A = out.size() % 3 == 2 ? random_rejection(rng) : random_targeted(rng);
    if (A && is_special_multiserial(*A).holds) out.push_back(*A);
  }
  return out;
}

Result criterion2(std::vector<AlgebraPresentation> const& pop) {
  Result r;
  std::size_t ump = 0;
  for (std::size_t i = 0; i < pop.size(); ++i) {
    auto d = decompose(pop[i]);
    auto const& q = d.algebra.quiver();
    std::string tag = "instance " + std::to_string(i) + ": ";
    auto main = ump_main(d).outcome;
    auto per = ump_report(d, Route::PerComponent).global.outcome;
    auto oracle = ump_bruteforce(d.algebra).outcome;
    r.check(main == oracle && per == oracle,
            tag + "main " + to_string(main) + ", per-component " + to_string(per) + ", oracle " +
                to_string(oracle) + "\n" + write_quiver(d.algebra));
    if (oracle == Outcome::IsUMP) ++ump;
    for (std::size_t c = 0; c < d.components.size(); ++c) {
      auto const& A_N = *d.components[c].algebra;
      auto synth = str_set(q, analyze_component(d, c).maximals);
      auto brute = all_members(A_N.quiver(), maximal_paths_bruteforce(A_N));
      r.check(synth == brute, tag + "component " + d.components[c].id + " maximal paths differ");
    }
  }
  r.notes.insert(r.notes.begin(), std::to_string(pop.size()) + " instances, " + std::to_string(ump) + " UMP");
  return r;
}

void check_maximals(Result& r, Decomposition const& d, std::string const& tag) {
  for (std::size_t c = 0; c < d.components.size(); ++c) {
    auto const& comp = d.components[c];
    try {
      auto an = analyze_component(d, c);
      for (auto const& m : an.raw_maximals)
        r.check(oracle_is_maximal(*comp.algebra, comp.to_local(m)),
                tag + to_string(d.algebra.quiver(), m) + " is not maximal in A_N");
    } catch (InternalError const& e) {
      r.check(false, tag + e.what());
    }
  }
}

Result criterion3(std::vector<AlgebraPresentation> const& pop) {
  Result r;
  for (auto f : {"ex1.quiver", "ex2.quiver", "hub.quiver", "fxnz.quiver"})
    check_maximals(r, decompose(load(f)), std::string(f) + ": ");
  for (std::size_t i = 0; i < pop.size(); ++i)
    check_maximals(r, decompose(pop[i]), "instance " + std::to_string(i) + ": ");
  return r;
}

Result criterion4() {
  Result r;
  std::mt19937 rng(4242);
  std::size_t dim_bad[2] = {0, 0}, corrected_bad = 0, graphs[2] = {0, 0};
  for (int pop = 0; pop < 2; ++pop) {
    bool loops = pop == 1;
    for (int i = 0; i < 200; ++i) {
      auto G = random_brauer(rng, loops);
      std::string tag = (loops ? "with-loop " : "loop-free ") + std::to_string(i) + ": ";
      ++graphs[pop];
      try {
        auto B = brauer_algebra(G);
        auto d = decompose(B.algebra);
        auto bij = component_vertex_bijection(G, B, d);
        r.check(d.components.size() == G.nontruncated().size(), tag + "component count");
        for (std::size_t c = 0; c < d.components.size(); ++c) {
          auto s = component_shape(d, c);
          r.check(s == Shape::SingleVertex || s == Shape::Cycle, tag + "component shape");
        }
        bool dims_ok = true;
        for (auto const& e : bij) {
          auto counted = dimension_bruteforce(*d.components[e.component].algebra).with_trivial;
          auto formula = component_dimension(G, e.vertex);
          if (counted != formula) dims_ok = false;
          if (counted + 2 * G.loops_at(e.vertex) != formula) ++corrected_bad;
        }
        if (!dims_ok) ++dim_bad[pop];
        r.check(dims_ok, tag + "component dimension differs from val(v)(val(v)m(v)+1)");
        r.check(is_locally_monomial(d) == !G.has_loops(), tag + "locally monomial iff loop-free");
        auto verdict = ump_report(d, Route::Auto).global.outcome;
        r.check(classify_ump(G).ump() == (verdict == Outcome::IsUMP),
                tag + "classification " + classify_ump(G).to_string() + " vs " + to_string(verdict));
      } catch (std::exception const& e) {
        r.check(false, tag + e.what() + "\n" + write_brauer(G));
      }
    }
  }
  std::ostringstream os;
  os << "dimension mismatches: " << dim_bad[0] << "/" << graphs[0] << " loop-free, " << dim_bad[1]
     << "/" << graphs[1] << " with loops; counted = formula - 2 * loops(v) fails on " << corrected_bad
     << " components";
  r.notes.insert(r.notes.begin(), os.str());
  return r;
}

// Expected presentation of each UMP case, compared through the labels of
// the constructed quiver.
bool presentation_matches(BrauerGraph const& G, BrauerAlgebra const& B, UmpClassification const& c) {
  using K = UmpClassification::Kind;
  auto const& A = B.algebra;
  auto const& q = A.quiver();
  if (q.vertex_count() != 1) return false;
  auto loops_of = [&](std::string const& v) {
    std::vector<ArrowId> out;
    for (ArrowId a = 0; a < q.arrow_count(); ++a)
      if (B.arrows[a].vertex == v) out.push_back(a);
    return out;
  };
  auto pw = [&](std::vector<ArrowId> w, int m) {
    std::vector<ArrowId> out;
    for (int i = 0; i < m; ++i) out.insert(out.end(), w.begin(), w.end());
    return Path::of(q, out);
  };
  auto same_zero = [&](std::vector<Path> want) {
    auto got = A.zero();
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    return got == want;
  };
  auto const& e = G.edges.front();
  switch (c.kind) {
    case K::CaseA:
      return q.arrow_count() == 0 && A.zero().empty() && A.linear().empty();
    case K::CaseB: {
      if (q.arrow_count() != 1) return false;
      return A.linear().empty() && same_zero({pw({0}, c.m + 1)});
    }
    case K::CaseC: {
      if (q.arrow_count() != 2) return false;
      auto al = loops_of(e.v1), be = loops_of(e.v2);
      if (al.size() != 1 || be.size() != 1) return false;
      ArrowId a = al[0], b = be[0];
      auto rel = LinearRelation::make(q, {{Rational(1), pw({a}, c.m)}, {Rational(-1), pw({b}, c.n)}});
      return A.linear().size() == 1 && A.linear()[0] == rel &&
             same_zero({Path::of(q, {a, b}), Path::of(q, {b, a})});
    }
    case K::CaseD: {
      if (q.arrow_count() != 2) return false;
      ArrowId a = 0, b = 1;
      auto rel = LinearRelation::make(q, {{Rational(1), pw({a, b}, c.m)}, {Rational(-1), pw({b, a}, c.m)}});
      return A.linear().size() == 1 && A.linear()[0] == rel &&
             same_zero({Path::of(q, {a, a}), Path::of(q, {b, b})});
    }
    case K::NotUMP:
      return false;
  }
  return false;
}

Result criterion5() {
  Result r;
  std::size_t ump = 0, total = 0;
  for (auto const& G : small_brauer_graphs(3)) {
    ++total;
    std::string tag = write_brauer(G);
    try {
      auto B = brauer_algebra(G);
      auto c = classify_ump(G);
      bool single = G.edges.size() == 1;
      r.check(c.ump() == single, "classification of\n" + tag);
      auto verdict = ump_report(B.algebra, Route::Auto).global.outcome;
      r.check((verdict == Outcome::IsUMP) == c.ump(), "oracle disagrees on\n" + tag);
      if (c.ump()) {
        ++ump;
        r.check(presentation_matches(G, B, c), c.to_string() + " presentation of\n" + tag +
                                                   write_quiver(B.algebra));
      }
    } catch (std::exception const& e) {
      r.check(false, tag + e.what());
    }
  }
  r.notes.insert(r.notes.begin(), std::to_string(total) + " graphs, " + std::to_string(ump) + " UMP");
  return r;
}

Result criterion6(std::vector<AlgebraPresentation> const& pop) {
  Result r;
  std::mt19937 rng(66);
  std::vector<AlgebraPresentation> algebras = pop;
  for (auto f : {"ex1.quiver", "ex2.quiver", "hub.quiver", "fxnz.quiver", "nonsm.quiver",
                 "morita1.quiver", "morita2.quiver"})
    algebras.push_back(ensure_minimal(load(f)));

  for (std::size_t i = 0; i < algebras.size(); ++i) {
    auto const& A = algebras[i];
    auto const& q = A.quiver();
    std::string tag = "algebra " + std::to_string(i) + ": ";

    // Semigroup laws and divisibility on random walks.
    auto walk = [&](std::size_t len) -> std::optional<Path> {
      if (q.arrow_count() == 0) return std::nullopt;
      std::vector<ArrowId> w{static_cast<ArrowId>(rng() % q.arrow_count())};
      while (w.size() < len) {
        auto outs = q.out_arrows(q.target(w.back()));
        if (outs.empty()) break;
        w.push_back(outs[rng() % outs.size()]);
      }
      return Path::of(q, w);
    };
    for (int t = 0; t < 10; ++t) {
      auto w = walk(2 + rng() % 7);
      if (!w) break;
      std::size_t n = w->length();
      std::size_t x = rng() % (n + 1), y = x + rng() % (n - x + 1);
      auto u = subpath(q, *w, 0, x), v = subpath(q, *w, x, y - x), z = subpath(q, *w, y, n - y);
      r.check(concat(concat(u, v), z) == concat(u, concat(v, z)), tag + "associativity");
      r.check(concat(concat(u, v), z) == *w, tag + "factorization");
      r.check(concat(Path::trivial(w->source()), *w) == *w &&
                  concat(*w, Path::trivial(w->target())) == *w,
              tag + "identities");
      if (!v.is_trivial()) {
        auto mid = concat(v, z);
        r.check(!divides(v, mid).empty() && !divides(mid, *w).empty() && !divides(v, *w).empty(),
                tag + "divisibility transitivity");
      }
    }
    // Orders: total and antisymmetric on a batch of paths.
    std::vector<Path> batch;
    for (int t = 0; t < 12; ++t)
      if (auto w = walk(1 + rng() % 5)) batch.push_back(*w);
    for (auto const& x : batch)
      for (auto const& y : batch) {
        PathLess pl{&q};
        LexLess ll{&q};
        bool eq = x == y;
        r.check(eq == (!pl(x, y) && !pl(y, x)) && !(pl(x, y) && pl(y, x)), tag + "PathLess totality");
        r.check(eq == (!ll(x, y) && !ll(y, x)) && !(ll(x, y) && ll(y, x)), tag + "LexLess totality");
      }

    auto d = decompose(A);
    // omega coherence
    for (ArrowId a = 0; a < q.arrow_count(); ++a) {
      auto const& w = d.graph.omega.omega(a);
      bool in = std::find(w.arrows().begin(), w.arrows().end(), a) != w.arrows().end();
      bool same = std::all_of(w.arrows().begin(), w.arrows().end(),
                              [&](ArrowId b) { return d.graph.omega.class_of[b] == d.graph.omega.class_of[a]; });
      r.check(in && same && is_repetition_free(w), tag + "omega coherence");
    }
    // every I_N admissible
    for (auto const& c : d.components) {
      bool ok = true;
      try {
        ok = admissibility_bound(*c.algebra, c.algebra->cap()) == c.algebra->bound();
        for (auto const& z : c.algebra->zero()) ok = ok && z.length() >= 2;
      } catch (std::exception const&) {
        ok = false;
      }
      r.check(ok, tag + "I_N of " + c.id + " admissible");
    }
    bool theorem = d.special_multiserial.holds && is_locally_monomial(d);
    // rotation invariance
    if (theorem)
      for (std::size_t c = 0; c < d.components.size(); ++c) {
        auto base = analyze_component(d, c);
        if (base.shape != Shape::Cycle) continue;
        for (std::size_t rot = 1; rot < base.order.size(); ++rot)
          r.check(str_set(q, analyze_component(d, c, rot).maximals) == str_set(q, base.maximals),
                  tag + "rotation invariance of " + d.components[c].id);
      }
    // relabeling invariance
    std::vector<std::string> names;
    for (ArrowId a = 0; a < q.arrow_count(); ++a) names.push_back("z" + std::to_string(a));
    std::shuffle(names.begin(), names.end(), rng);
    auto R = relabel(A, names);
    auto d2 = decompose(R);
    for (auto route : {Route::Auto, Route::Oracle}) {
      auto r1 = ump_report(d, route), r2 = ump_report(d2, route);
      r.check(r1.global.outcome == r2.global.outcome && r1.route == r2.route,
              tag + "relabeled verdict");
      std::set<std::set<std::vector<ArrowId>>> c1, c2;
      for (auto const& c : r1.maximal) {
        std::set<std::vector<ArrowId>> s;
        for (auto const& m : c.members) s.insert(m.arrows());
        c1.insert(s);
      }
      for (auto const& c : r2.maximal) {
        std::set<std::vector<ArrowId>> s;
        for (auto const& m : c.members) s.insert(m.arrows());
        c2.insert(s);
      }
      r.check(c1 == c2, tag + "relabeled maximal classes");
    }
  }
  return r;
}

}  // namespace

int main() {
  bool all = true;
  auto run = [&](int n, char const* name, std::function<Result()> f) {
    auto t0 = Clock::now();
    Result r;
    try {
      r = f();
    } catch (std::exception const& e) {
      r.pass = false;
      r.notes.push_back(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    std::cout << "criterion " << n << " (" << name << "): " << (r.pass ? "PASS" : "FAIL") << " ["
              << r.checks << " checks, " << secs << " s]\n";
    for (auto const& note : r.notes) std::cout << "    " << note << "\n";
    std::cout.flush();
    all = all && r.pass;
  };
  auto pop = random_population(2000, 2024);
  run(1, "golden fixtures", criterion1);
  run(2, "differential UMP", [&] { return criterion2(pop); });
  run(3, "maximal-path definition", [&] { return criterion3(pop); });
  run(4, "Brauer suite", criterion4);
  run(5, "four-case classification", criterion5);
  run(6, "property suite", [&] { return criterion6(pop); });
  return all ? 0 : 1;
}
