#ifndef UMPQ_ORACLE_HPP
#define UMPQ_ORACLE_HPP

// Brute force straight from the definitions. Deliberately depends on the
// membership test only, never on the omega or component machinery.

#include <algorithm>
#include <vector>

#include "umpq/ideal.hpp"
#include "umpq/verdict.hpp"

namespace umpq {

// Nonzero paths of length 1 .. min(up_to, m - 1), breadth first, each layer
// in lexicographic order.
inline std::vector<Path> nonzero_paths(AlgebraPresentation const& A, std::size_t up_to) {
  auto const& q = A.quiver();
  std::vector<Path> out, layer;
  for (ArrowId a : q.arrows_by_label())
    if (!A.contains(Path::arrow(q, a))) layer.push_back(Path::arrow(q, a));
  for (std::size_t len = 1; len <= up_to && !layer.empty(); ++len) {
    std::sort(layer.begin(), layer.end(), LexLess{&q});
    out.insert(out.end(), layer.begin(), layer.end());
    std::vector<Path> next;
    for (auto const& p : layer)
      for (ArrowId a : q.out_arrows(p.target())) {
        Path r = concat(p, Path::arrow(q, a));
        if (!A.contains(r)) next.push_back(std::move(r));
      }
    layer = std::move(next);
  }
  return out;
}

inline std::vector<Path> nonzero_paths(AlgebraPresentation const& A) {
  return nonzero_paths(A, A.bound());
}

inline bool oracle_is_maximal(AlgebraPresentation const& A, Path const& m) {
  auto const& q = A.quiver();
  if (A.contains(m)) return false;
  for (ArrowId a = 0; a < q.arrow_count(); ++a) {
    if (q.target(a) == m.source() && !A.contains(concat(Path::arrow(q, a), m)))
      return false;
    if (q.source(a) == m.target() && !A.contains(concat(m, Path::arrow(q, a))))
      return false;
  }
  return true;
}

inline std::vector<MaximalClass> maximal_paths_bruteforce(AlgebraPresentation const& A) {
  std::vector<std::pair<Path, std::size_t>> found;
  for (auto const& p : nonzero_paths(A))
    if (oracle_is_maximal(A, p)) found.emplace_back(p, SIZE_MAX);
  return group_into_classes(A, found);
}

inline UmpVerdict ump_bruteforce(AlgebraPresentation const& A) {
  return verdict_from_classes(A.quiver(), maximal_paths_bruteforce(A));
}

struct DimensionCount {
  std::size_t with_trivial;
  std::size_t without_trivial;
};

// Rank of the nonzero paths modulo I, plus one trivial path per vertex.
inline DimensionCount dimension_bruteforce(AlgebraPresentation const& A) {
  auto const& q = A.quiver();
  detail::Echelon span(&q);
  std::size_t rank = 0;
  for (auto const& p : nonzero_paths(A))
    if (span.insert(A.model().normal_form(p))) ++rank;
  return {rank + q.vertex_count(), rank};
}

}  // namespace umpq

#endif
