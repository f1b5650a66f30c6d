#ifndef UMPQ_UMP_HPP
#define UMPQ_UMP_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "umpq/component_analysis.hpp"
#include "umpq/oracle.hpp"
#include "umpq/verdict.hpp"

namespace umpq {

enum class Route { Auto, Main, PerComponent, Oracle, CrossCheck };

inline Route parse_route(std::string const& s) {
  if (s == "auto") return Route::Auto;
  if (s == "main") return Route::Main;
  if (s == "per-component") return Route::PerComponent;
  if (s == "oracle") return Route::Oracle;
  if (s == "cross-check") return Route::CrossCheck;
  throw Error("unknown route '" + s + "'");
}

// Why the structural theorems do not apply, if they do not.
inline std::optional<std::string> theorem_precondition_failure(Decomposition const& d) {
  try {
    detail::require_special_multiserial(d);
    for (std::size_t i = 0; i < d.components.size(); ++i) detail::require_monomial(d, i);
  } catch (NotSpecialMultiserial const& e) {
    return std::string("not special multiserial: ") + e.what();
  } catch (NotLocallyMonomial const& e) {
    return std::string("not locally monomial: ") + e.what();
  }
  return std::nullopt;
}

inline std::vector<Path> omega_relations(Decomposition const& d) {
  auto const& A = d.algebra;
  auto const& q = A.quiver();
  std::vector<Path> out;
  for (std::size_t i = 0; i < d.components.size(); ++i) {
    auto an = analyze_component(d, i);
    for (auto const& r : an.s) {
      if (r.length() <= 2) continue;
      bool ok = A.contains(r) && !A.contains(subpath(q, r, 1, r.length() - 1)) &&
                !A.contains(subpath(q, r, 0, r.length() - 1));
      if (!ok) throw InternalError(to_string(q, r) + " fails the omega-relation recheck");
      out.push_back(r);
    }
  }
  std::sort(out.begin(), out.end(), LexLess{&q});
  return out;
}

inline std::vector<MaximalClass> global_maximal_paths(Decomposition const& d) {
  std::vector<std::pair<Path, std::size_t>> tagged;
  for (std::size_t i = 0; i < d.components.size(); ++i)
    for (auto const& m : analyze_component(d, i).maximals) tagged.emplace_back(m, i);
  return group_into_classes(d.algebra, tagged);
}

namespace detail {

inline void attach_pair(Decomposition const& d, UmpVerdict& v) {
  if (v.outcome != Outcome::NotUMP || v.pair) return;
  v.pair = overlapping_classes(d.algebra.quiver(), global_maximal_paths(d));
}

// Does some other zero relation of `pool` divide a power of the cycle w?
inline std::optional<Path> rival_relation(std::vector<Path> const& pool, Path const& r,
                                          ComponentOmega const& w) {
  for (auto const& z : pool)
    if (!(z == r) && divides_power_direct(w, z)) return z;
  return std::nullopt;
}

inline bool is_loop_power(Quiver const& q, Path const& p) {
  ArrowId a = p.first();
  if (q.source(a) != q.target(a)) return false;
  return std::all_of(p.arrows().begin(), p.arrows().end(), [&](ArrowId x) { return x == a; });
}

}  // namespace detail

inline UmpVerdict ump_component(Decomposition const& d, std::size_t comp) {
  auto an = analyze_component(d, comp);
  UmpVerdict v;
  bool all_short = std::all_of(an.s.begin(), an.s.end(),
                               [](Path const& s) { return s.length() == 2; });
  if (an.s.empty() || all_short || (an.s.size() == 1 && an.closes)) return v;
  v.outcome = Outcome::NotUMP;
  auto const& q = d.algebra.quiver();
  for (std::size_t i = 0; i < an.maximals.size() && !v.pair; ++i)
    for (std::size_t j = i + 1; j < an.maximals.size() && !v.pair; ++j)
      if (auto a = shared_arrow(q, an.maximals[i], an.maximals[j]))
        v.pair = MaximalWitness{an.maximals[i], an.maximals[j], *a};
  return v;
}

inline UmpVerdict ump_main(Decomposition const& d) {
  if (auto why = theorem_precondition_failure(d)) return UmpVerdict::not_applicable(*why);
  UmpVerdict v;
  for (auto const& r : omega_relations(d)) {
    std::size_t comp = component_of_path(d, r);
    auto w = omega_of_component(d, comp);
    if (w.omega.source() != w.omega.target()) {
      v.outcome = Outcome::NotUMP;
      v.relation = RelationWitness{r, std::nullopt, w.omega, std::nullopt, false};
      break;
    }
    if (auto other = detail::rival_relation(d.components[comp].ideal.zero, r, w)) {
      v.outcome = Outcome::NotUMP;
      v.relation = RelationWitness{r, *other, std::nullopt, std::nullopt, false};
      break;
    }
  }
  detail::attach_pair(d, v);
  return v;
}

// Every term p of every linear relation has beta p and p gamma in I for all
// arrows beta, gamma.
inline bool terms_are_isolated(Decomposition const& d) {
  auto const& A = d.algebra;
  auto const& q = A.quiver();
  for (auto const& r : A.linear())
    for (auto const& t : r.terms()) {
      for (ArrowId b : q.in_arrows(t.path.source()))
        if (!A.contains(Path::of(q, {b, t.path.first()}))) return false;
      for (ArrowId b : q.out_arrows(t.path.target()))
        if (!A.contains(Path::of(q, {t.path.last(), b}))) return false;
    }
  return true;
}

// Corollary form: every zero relation of R longer than two must be the only
// relation of R dividing powers of some cycle; the cycle is omega(N(r)).
inline UmpVerdict ump_corollary(Decomposition const& d) {
  if (auto why = theorem_precondition_failure(d)) return UmpVerdict::not_applicable(*why);
  if (!terms_are_isolated(d))
    return UmpVerdict::not_applicable("a linear relation has a term with a nonzero extension");
  UmpVerdict v;
  auto const& q = d.algebra.quiver();
  std::vector<Path> zero = d.algebra.zero();
  std::sort(zero.begin(), zero.end(), LexLess{&q});
  for (auto const& r : zero) {
    if (r.length() <= 2) continue;
    auto w = omega_of_component(d, component_of_path(d, r));
    if (w.omega.source() != w.omega.target()) {
      v.outcome = Outcome::NotUMP;
      v.relation = RelationWitness{r, std::nullopt, w.omega, std::nullopt, false};
      break;
    }
    if (auto other = detail::rival_relation(zero, r, w)) {
      v.outcome = Outcome::NotUMP;
      v.relation = RelationWitness{r, *other, std::nullopt, std::nullopt, false};
      break;
    }
  }
  detail::attach_pair(d, v);
  return v;
}

// Advisory: a term of a linear relation that is not a loop power and has a
// nonzero one-arrow extension forces NotUMP.
inline std::optional<UmpVerdict> quick_non_ump(Decomposition const& d) {
  if (theorem_precondition_failure(d)) return std::nullopt;
  auto const& A = d.algebra;
  auto const& q = A.quiver();
  for (auto const& r : A.linear())
    for (auto const& t : r.terms()) {
      Path const& p = t.path;
      if (detail::is_loop_power(q, p)) continue;
      for (ArrowId b : q.arrows_by_label()) {
        bool left = q.target(b) == p.source() && !A.contains(Path::of(q, {b, p.first()}));
        bool right = q.source(b) == p.target() && !A.contains(Path::of(q, {p.last(), b}));
        if (!left && !right) continue;
        UmpVerdict v;
        v.outcome = Outcome::NotUMP;
        v.relation = RelationWitness{p, std::nullopt, std::nullopt, b, left};
        detail::attach_pair(d, v);
        return v;
      }
    }
  return std::nullopt;
}

struct UmpReport {
  std::string route;
  std::vector<std::string> routes_run;
  std::vector<UmpVerdict> per_component;
  UmpVerdict global;
  std::vector<Path> omega_relations;
  std::vector<MaximalClass> maximal;
  std::vector<std::string> log;
  bool mismatch = false;
};

namespace detail {

inline UmpVerdict conjunction(Decomposition const& d, std::vector<UmpVerdict> const& parts) {
  UmpVerdict v;
  for (auto const& p : parts) {
    if (p.outcome == Outcome::IsUMP) continue;
    v = p;
    break;
  }
  attach_pair(d, v);
  return v;
}

inline void fill_oracle(Decomposition const& d, UmpReport& r) {
  r.maximal = maximal_paths_bruteforce(d.algebra);
  r.global = verdict_from_classes(d.algebra.quiver(), r.maximal);
  r.per_component.clear();
  for (auto const& c : d.components) r.per_component.push_back(ump_bruteforce(*c.algebra));
}

inline std::string theorem_route_name(Decomposition const& d) {
  if (d.algebra.is_monomial()) return "monomial-corollary";
  if (terms_are_isolated(d)) return "extended-corollary";
  return "main-theorem";
}

}  // namespace detail

inline UmpReport ump_report(Decomposition const& d, Route route) {
  UmpReport r;
  auto why = theorem_precondition_failure(d);
  auto per_component = [&] {
    std::vector<UmpVerdict> out;
    for (std::size_t i = 0; i < d.components.size(); ++i) out.push_back(ump_component(d, i));
    return out;
  };
  auto structural = [&](std::string const& name) {
    r.route = name;
    r.routes_run.push_back(name);
    r.omega_relations = omega_relations(d);
    r.maximal = global_maximal_paths(d);
    r.per_component = per_component();
    if (name == "main-theorem")
      r.global = ump_main(d);
    else if (name == "per-component")
      r.global = detail::conjunction(d, r.per_component);
    else
      r.global = ump_corollary(d);
  };

  switch (route) {
    case Route::Oracle:
      r.route = "oracle";
      r.routes_run.push_back("oracle");
      detail::fill_oracle(d, r);
      break;
    case Route::Main:
    case Route::PerComponent: {
      std::string name = route == Route::Main ? "main-theorem" : "per-component";
      if (why) {
        r.route = name;
        r.routes_run.push_back(name);
        r.global = UmpVerdict::not_applicable(*why);
        r.log.push_back("theorem route not applicable: " + *why);
      } else {
        structural(name);
      }
      break;
    }
    case Route::Auto:
      if (why) {
        r.log.push_back("theorem route not applicable: " + *why + "; using the oracle");
        r.route = "oracle";
        r.routes_run.push_back("oracle");
        detail::fill_oracle(d, r);
      } else {
        structural(detail::theorem_route_name(d));
        if (auto quick = quick_non_ump(d))
          r.log.push_back("quick test: NotUMP via term " +
                          to_string(d.algebra.quiver(), quick->relation->relation));
      }
      break;
    case Route::CrossCheck: {
      UmpReport oracle;
      detail::fill_oracle(d, oracle);
      if (why) {
        r = oracle;
        r.route = "oracle";
        r.routes_run = {"oracle"};
        r.log.push_back("theorem route not applicable: " + *why + "; oracle only");
        break;
      }
      structural(detail::theorem_route_name(d));
      r.routes_run.push_back("oracle");
      std::vector<UmpVerdict> verdicts{r.global, ump_main(d),
                                       detail::conjunction(d, r.per_component),
                                       oracle.global};
      if (d.algebra.is_monomial() || terms_are_isolated(d)) verdicts.push_back(ump_corollary(d));
      for (auto const& v : verdicts)
        if (v.outcome != oracle.global.outcome) r.mismatch = true;
      for (std::size_t i = 0; i < r.per_component.size(); ++i)
        if (r.per_component[i].outcome != oracle.per_component[i].outcome) r.mismatch = true;
      auto reps = [](std::vector<MaximalClass> const& cs) {
        std::vector<Path> out;
        for (auto const& c : cs) out.push_back(c.representative);
        return out;
      };
      if (reps(r.maximal) != reps(oracle.maximal)) r.mismatch = true;
      if (r.mismatch) r.log.push_back("cross-check mismatch between routes");
      break;
    }
  }
  return r;
}

inline UmpReport ump_report(AlgebraPresentation const& A, Route route) {
  return ump_report(decompose(A), route);
}

}  // namespace umpq

#endif
