#ifndef UMPQ_VERDICT_HPP
#define UMPQ_VERDICT_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "umpq/ideal.hpp"

namespace umpq {

// A maximal path class m + I with every path of length < m in it.
struct MaximalClass {
  Path representative;               // lexicographically least member
  std::vector<Path> members;
  std::vector<std::size_t> components;  // provenance, when known
};

struct MaximalWitness {
  Path first;
  Path second;
  ArrowId arrow;
};

struct RelationWitness {
  Path relation;
  std::optional<Path> other;      // second relation dividing a power
  std::optional<Path> omega;      // set when omega(N(r)) is not cyclic
  std::optional<ArrowId> arrow;   // quick test: the extending arrow
  bool left = false;              // quick test: arrow * p rather than p * arrow
};

enum class Outcome { IsUMP, NotUMP, NotApplicable };

inline char const* to_string(Outcome o) {
  switch (o) {
    case Outcome::IsUMP: return "IsUMP";
    case Outcome::NotUMP: return "NotUMP";
    case Outcome::NotApplicable: return "NotApplicable";
  }
  return "?";
}

struct UmpVerdict {
  Outcome outcome = Outcome::IsUMP;
  std::optional<MaximalWitness> pair;
  std::optional<RelationWitness> relation;
  std::string reason;

  static UmpVerdict not_applicable(std::string why) {
    UmpVerdict v;
    v.outcome = Outcome::NotApplicable;
    v.reason = std::move(why);
    return v;
  }
};

// Groups paths into cosets; the representative is the lex-least member.
inline std::vector<MaximalClass> group_into_classes(AlgebraPresentation const& A,
                                                    std::vector<std::pair<Path, std::size_t>> const& tagged) {
  auto const& q = A.quiver();
  std::vector<MaximalClass> out;
  for (auto const& [p, comp] : tagged) {
    auto it = std::find_if(out.begin(), out.end(), [&](MaximalClass const& c) {
      return std::find(c.members.begin(), c.members.end(), p) != c.members.end();
    });
    if (it == out.end()) {
      MaximalClass c;
      c.members = coset_paths(A, p);
      c.representative = c.members.front();
      out.push_back(std::move(c));
      it = std::prev(out.end());
    }
    if (comp != SIZE_MAX &&
        std::find(it->components.begin(), it->components.end(), comp) == it->components.end())
      it->components.push_back(comp);
  }
  for (auto& c : out) std::sort(c.components.begin(), c.components.end());
  std::sort(out.begin(), out.end(), [&](MaximalClass const& x, MaximalClass const& y) {
    return LexLess{&q}(x.representative, y.representative);
  });
  return out;
}

// First pair of distinct classes with representatives sharing an arrow.
inline std::optional<MaximalWitness> overlapping_classes(Quiver const& q,
                                                         std::vector<MaximalClass> const& classes) {
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (std::size_t j = i + 1; j < classes.size(); ++j)
      for (auto const& x : classes[i].members)
        for (auto const& y : classes[j].members)
          if (auto a = shared_arrow(q, x, y)) return MaximalWitness{x, y, *a};
  return std::nullopt;
}

inline UmpVerdict verdict_from_classes(Quiver const& q,
                                       std::vector<MaximalClass> const& classes) {
  UmpVerdict v;
  if (auto w = overlapping_classes(q, classes)) {
    v.outcome = Outcome::NotUMP;
    v.pair = *w;
  }
  return v;
}

}  // namespace umpq

#endif
