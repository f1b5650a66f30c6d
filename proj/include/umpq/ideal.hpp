#ifndef UMPQ_IDEAL_HPP
#define UMPQ_IDEAL_HPP

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "umpq/quiver.hpp"
#include "umpq/rational.hpp"

namespace umpq {

struct Term {
  Rational coefficient;
  Path path;
};

// A rational combination of pairwise distinct parallel paths of length >= 2.
// Terms are kept in lexicographic label order with the first coefficient 1.
class LinearRelation {
 public:
  static LinearRelation make(Quiver const& q, std::vector<Term> terms) {
    LexLess lex{&q};
    std::sort(terms.begin(), terms.end(),
              [&](Term const& x, Term const& y) { return lex(x.path, y.path); });
    std::vector<Term> merged;
    for (auto& t : terms) {
      if (!merged.empty() && merged.back().path == t.path)
        merged.back().coefficient += t.coefficient;
      else
        merged.push_back(std::move(t));
    }
    std::erase_if(merged, [](Term const& t) { return t.coefficient == 0; });
    if (merged.size() < 2)
      throw InvalidRelation("a linear relation needs at least two terms");
    for (auto const& t : merged) {
      if (t.path.length() < 2)
        throw InvalidRelation("relation terms must have length >= 2");
      if (t.path.source() != merged[0].path.source() ||
          t.path.target() != merged[0].path.target())
        throw InvalidRelation("relation terms are not parallel");
    }
    Rational lead = merged[0].coefficient;
    for (auto& t : merged) t.coefficient /= lead;
    LinearRelation r;
    r.terms_ = std::move(merged);
    return r;
  }

  std::vector<Term> const& terms() const noexcept { return terms_; }
  VertexId source() const { return terms_.front().path.source(); }
  VertexId target() const { return terms_.front().path.target(); }
  std::size_t max_length() const {
    std::size_t n = 0;
    for (auto const& t : terms_) n = std::max(n, t.path.length());
    return n;
  }

  friend bool operator==(LinearRelation const& x, LinearRelation const& y) {
    if (x.terms_.size() != y.terms_.size()) return false;
    for (std::size_t i = 0; i < x.terms_.size(); ++i)
      if (x.terms_[i].path != y.terms_[i].path ||
          x.terms_[i].coefficient != y.terms_[i].coefficient)
        return false;
    return true;
  }

 private:
  std::vector<Term> terms_;
};

inline std::string to_string(Quiver const& q, LinearRelation const& r) {
  std::string s;
  for (std::size_t i = 0; i < r.terms().size(); ++i) {
    auto const& t = r.terms()[i];
    Rational c = t.coefficient;
    if (i) {
      s += c < 0 ? " - " : " + ";
      if (c < 0) c = -c;
    } else if (c < 0) {
      s += "-";
      c = -c;
    }
    if (c != 1) s += to_string(c) + "*";
    s += to_string(q, t.path);
  }
  return s;
}

namespace detail {

using Vec = std::map<Path, Rational, PathLess>;

inline void axpy(Vec& v, Path const& p, Rational const& c) {
  if (c == 0) return;
  auto [it, fresh] = v.try_emplace(p, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) v.erase(it);
  }
}

// Row echelon basis keyed by pivot, the largest path of each row. Rows are
// not back-substituted; full reduction still gives a canonical remainder
// because every nonzero element of the span has a pivot as leading term.
class Echelon {
 public:
  explicit Echelon(Quiver const* q) : rows_(PathLess{q}) {}

  void reduce(Vec& v) const {
    auto it = v.end();
    while (it != v.begin()) {
      --it;
      auto row = rows_.find(it->first);
      if (row == rows_.end()) continue;
      Path pivot = it->first;
      Rational c = it->second;
      v.erase(it);
      for (auto const& [p, x] : row->second)
        if (!(p == pivot)) axpy(v, p, -c * x);
      it = v.lower_bound(pivot);
    }
  }

  bool insert(Vec v) {
    reduce(v);
    if (v.empty()) return false;
    auto lead = std::prev(v.end());
    Path pivot = lead->first;
    Rational c = lead->second;
    for (auto& [p, x] : v) x /= c;
    rows_.emplace(std::move(pivot), std::move(v));
    return true;
  }

  std::size_t rank() const noexcept { return rows_.size(); }

 private:
  std::map<Path, Vec, PathLess> rows_;
};

// Zero relations indexed by first and last arrow.
class ZeroIndex {
 public:
  ZeroIndex(std::vector<Path> const& zero, std::size_t arrow_count)
      : by_first_(arrow_count), by_last_(arrow_count) {
    for (auto const& z : zero) {
      by_first_[z.first()].push_back(z.arrows());
      by_last_[z.last()].push_back(z.arrows());
      max_length_ = std::max(max_length_, z.length());
    }
  }

  bool divides_any(std::span<ArrowId const> seq) const {
    for (std::size_t i = 0; i < seq.size(); ++i)
      if (at(seq, i)) return true;
    return false;
  }

  // A relation occurs starting at position i.
  bool at(std::span<ArrowId const> seq, std::size_t i) const {
    for (auto const& z : by_first_[seq[i]])
      if (i + z.size() <= seq.size() &&
          std::equal(z.begin(), z.end(), seq.begin() + i))
        return true;
    return false;
  }

  // A relation is a suffix of seq.
  bool at_end(std::span<ArrowId const> seq) const {
    if (seq.empty()) return false;
    for (auto const& z : by_last_[seq.back()])
      if (z.size() <= seq.size() &&
          std::equal(z.begin(), z.end(), seq.end() - z.size()))
        return true;
    return false;
  }

  std::size_t max_length() const noexcept { return max_length_; }

 private:
  std::vector<std::vector<std::vector<ArrowId>>> by_first_, by_last_;
  std::size_t max_length_ = 0;
};

inline constexpr std::size_t kPathBudget = 4'000'000;

// Paths avoiding every zero relation, by length, up to max_len.
inline std::vector<std::vector<Path>> z_normal_layers(Quiver const& q,
                                                      ZeroIndex const& zi,
                                                      std::size_t max_len) {
  std::vector<std::vector<Path>> layers(max_len + 1);
  for (VertexId v = 0; v < q.vertex_count(); ++v)
    layers[0].push_back(Path::trivial(v));
  std::size_t total = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    for (auto const& p : layers[len - 1]) {
      for (ArrowId a : q.out_arrows(p.target())) {
        std::vector<ArrowId> seq = p.arrows();
        seq.push_back(a);
        if (zi.at_end(seq)) continue;
        layers[len].push_back(Path::unchecked(p.source(), q.target(a), std::move(seq)));
        if (++total > kPathBudget)
          throw ResourceLimit("path enumeration budget exceeded");
      }
    }
    if (layers[len].empty()) {
      layers.resize(len + 1);
      break;
    }
  }
  return layers;
}

// Smallest L in [2, cap] with no path of length L avoiding the zero
// relations. Works on suffix states so it never lists the paths themselves.
inline std::optional<std::size_t> monomial_bound(Quiver const& q,
                                                 ZeroIndex const& zi,
                                                 std::size_t cap) {
  std::size_t keep = zi.max_length() > 1 ? zi.max_length() - 1 : 1;
  std::set<std::vector<ArrowId>> layer;
  for (ArrowId a = 0; a < q.arrow_count(); ++a) layer.insert({a});
  for (std::size_t len = 2; len <= cap; ++len) {
    std::set<std::vector<ArrowId>> next;
    for (auto const& s : layer) {
      for (ArrowId a : q.out_arrows(q.target(s.back()))) {
        std::vector<ArrowId> seq = s;
        seq.push_back(a);
        if (zi.at_end(seq)) continue;
        if (seq.size() > keep) seq.erase(seq.begin(), seq.end() - keep);
        next.insert(std::move(seq));
      }
    }
    if (next.empty()) return len;
    layer = std::move(next);
  }
  return std::nullopt;
}

// Span of all products u*r*v of the linear relations, with each term taken
// modulo the zero relations.
//   Truncate: terms of length >= bound are dropped (exact once R^bound is
//             known to lie in the ideal).
//   Exact:    only products whose surviving terms all have length <= bound;
//             nothing is dropped, so membership in the span is a proof.
class IdealModel {
 public:
  enum class Mode { Truncate, Exact };

  IdealModel(std::shared_ptr<Quiver const> quiver, std::vector<Path> zero,
             std::vector<LinearRelation> linear, std::size_t bound,
             Mode mode = Mode::Truncate)
      : quiver_(std::move(quiver)),
        zero_(std::move(zero)),
        linear_(std::move(linear)),
        zi_(zero_, quiver_->arrow_count()),
        bound_(bound),
        mode_(mode),
        echelon_(quiver_.get()),
        support_(PathLess{quiver_.get()}) {
    for (auto const& r : linear_) add_products(r);
  }

  Quiver const& quiver() const noexcept { return *quiver_; }
  std::size_t bound() const noexcept { return bound_; }
  std::size_t rank() const noexcept { return echelon_.rank(); }
  ZeroIndex const& zero_index() const noexcept { return zi_; }
  std::vector<Path> const& zero() const noexcept { return zero_; }
  std::vector<LinearRelation> const& linear() const noexcept { return linear_; }

  bool is_z_normal(Path const& p) const { return !zi_.divides_any(p.arrows()); }

  bool is_killed(Path const& p) const {
    if (mode_ == Mode::Truncate && p.length() >= bound_) return true;
    return !is_z_normal(p);
  }

  Vec normal_form(Path const& p) const {
    Vec v(PathLess{quiver_.get()});
    if (is_killed(p)) return v;
    v.emplace(p, Rational(1));
    echelon_.reduce(v);
    return v;
  }

  Vec normal_form(Vec const& x) const {
    Vec v(PathLess{quiver_.get()});
    for (auto const& [p, c] : x)
      if (!is_killed(p)) axpy(v, p, c);
    echelon_.reduce(v);
    return v;
  }

  bool contains(Path const& p) const {
    if (p.is_trivial()) throw TrivialPath();
    return normal_form(p).empty();
  }

  // Paths congruent to p modulo the ideal (p itself included).
  std::vector<Path> coset(Path const& p) const {
    Vec nf = normal_form(p);
    if (nf.empty()) throw PathInIdeal();
    std::vector<Path> out{p};
    for (auto const& q : support_) {
      if (q == p || q.source() != p.source() || q.target() != p.target())
        continue;
      if (normal_form(q) == nf) out.push_back(q);
    }
    std::sort(out.begin(), out.end(), LexLess{quiver_.get()});
    return out;
  }

 private:
  // Products u*r*v are enumerated by growing u to the left and v to the
  // right while some term survives.
  void add_products(LinearRelation const& r) {
    auto const& q = *quiver_;
    std::size_t n = r.terms().size();
    struct Left {
      std::vector<ArrowId> u;
      VertexId start;
      std::vector<char> alive;
    };
    auto term_ok = [&](std::vector<ArrowId> const& seq) {
      return mode_ == Mode::Exact || seq.size() < bound_;
    };
    auto too_long = [&](std::vector<ArrowId> const& seq) {
      return mode_ == Mode::Exact && seq.size() > bound_;
    };
    Left root{{}, r.source(), std::vector<char>(n, 0)};
    bool any = false, overflow = false;
    for (std::size_t j = 0; j < n; ++j) {
      auto const& seq = r.terms()[j].path.arrows();
      if (too_long(seq)) overflow = true;
      root.alive[j] = !zi_.divides_any(seq) && term_ok(seq);
      any = any || root.alive[j];
    }
    if (!any || overflow) return;
    std::vector<Left> stack{root};
    while (!stack.empty()) {
      Left cur = std::move(stack.back());
      stack.pop_back();
      add_right_products(r, cur.u, cur.alive);
      for (ArrowId x : q.in_arrows(cur.start)) {
        Left next{{x}, q.source(x), cur.alive};
        next.u.insert(next.u.end(), cur.u.begin(), cur.u.end());
        bool live = false, bad = false;
        for (std::size_t j = 0; j < n; ++j) {
          if (!next.alive[j]) continue;
          std::vector<ArrowId> seq = next.u;
          auto const& t = r.terms()[j].path.arrows();
          seq.insert(seq.end(), t.begin(), t.end());
          if (too_long(seq)) bad = true;
          next.alive[j] = !zi_.at(seq, 0) && term_ok(seq);
          live = live || next.alive[j];
        }
        if (live && !bad) stack.push_back(std::move(next));
      }
    }
  }

  void add_right_products(LinearRelation const& r, std::vector<ArrowId> const& u,
                          std::vector<char> const& alive0) {
    auto const& q = *quiver_;
    std::size_t n = r.terms().size();
    std::vector<std::vector<ArrowId>> base(n);
    for (std::size_t j = 0; j < n; ++j) {
      base[j] = u;
      auto const& t = r.terms()[j].path.arrows();
      base[j].insert(base[j].end(), t.begin(), t.end());
    }
    VertexId src = u.empty() ? r.source() : q.source(u.front());
    struct Right {
      std::vector<ArrowId> v;
      VertexId end;
      std::vector<char> alive;
    };
    std::vector<Right> stack{{{}, r.target(), alive0}};
    while (!stack.empty()) {
      Right cur = std::move(stack.back());
      stack.pop_back();
      Vec vec(PathLess{quiver_.get()});
      for (std::size_t j = 0; j < n; ++j) {
        if (!cur.alive[j]) continue;
        std::vector<ArrowId> seq = base[j];
        seq.insert(seq.end(), cur.v.begin(), cur.v.end());
        Path p = Path::unchecked(src, cur.end, std::move(seq));
        support_.insert(p);
        axpy(vec, p, r.terms()[j].coefficient);
      }
      if (++products_ > kPathBudget)
        throw ResourceLimit("product enumeration budget exceeded");
      echelon_.insert(std::move(vec));
      for (ArrowId y : q.out_arrows(cur.end)) {
        Right next{cur.v, q.target(y), cur.alive};
        next.v.push_back(y);
        bool live = false, bad = false;
        for (std::size_t j = 0; j < n; ++j) {
          if (!next.alive[j]) continue;
          std::vector<ArrowId> seq = base[j];
          seq.insert(seq.end(), next.v.begin(), next.v.end());
          if (mode_ == Mode::Exact && seq.size() > bound_) bad = true;
          next.alive[j] = !zi_.at_end(seq) &&
                          (mode_ == Mode::Exact || seq.size() < bound_);
          live = live || next.alive[j];
        }
        if (live && !bad) stack.push_back(std::move(next));
      }
    }
  }

  std::shared_ptr<Quiver const> quiver_;
  std::vector<Path> zero_;
  std::vector<LinearRelation> linear_;
  ZeroIndex zi_;
  std::size_t bound_;
  Mode mode_;
  Echelon echelon_;
  std::set<Path, PathLess> support_;
  std::size_t products_ = 0;
};

inline std::size_t max_term_length(std::vector<LinearRelation> const& linear) {
  std::size_t d = 0;
  for (auto const& r : linear) d = std::max(d, r.max_length());
  return d;
}

// True when every path of length L is provably in <zero, linear>.
inline bool certify_power(std::shared_ptr<Quiver const> const& q,
                          std::vector<Path> const& zero,
                          std::vector<LinearRelation> const& linear,
                          std::size_t L) {
  ZeroIndex zi(zero, q->arrow_count());
  if (monomial_bound(*q, zi, L)) return true;
  if (linear.empty()) return false;
  try {
    IdealModel exact(q, zero, linear, L + max_term_length(linear),
                     IdealModel::Mode::Exact);
    auto layers = z_normal_layers(*q, zi, L);
    if (layers.size() <= L) return true;
    for (auto const& p : layers[L])
      if (!exact.normal_form(p).empty()) return false;
    return true;
  } catch (ResourceLimit const&) {
    return false;
  }
}

// Smallest m in [2, cap] with R^m inside the ideal.
inline std::size_t compute_bound(std::shared_ptr<Quiver const> const& q,
                                 std::vector<Path> const& zero,
                                 std::vector<LinearRelation> const& linear,
                                 std::size_t cap) {
  ZeroIndex zi(zero, q->arrow_count());
  auto mz = monomial_bound(*q, zi, cap);
  if (linear.empty()) {
    if (!mz) throw NotAdmissible(cap);
    return *mz;
  }
  // Sound upper bound first: either from the zero relations alone or from
  // an explicit certificate built without truncation.
  std::optional<std::size_t> upper = mz;
  if (!upper) {
    std::size_t d = max_term_length(linear);
    try {
      for (std::size_t k = 16;; k *= 2) {
        std::size_t kk = std::min(k, cap + d);
        IdealModel exact(q, zero, linear, kk, IdealModel::Mode::Exact);
        std::size_t top = std::min(cap, kk);
        auto layers = z_normal_layers(*q, zi, top);
        for (std::size_t L = 2; L <= top && !upper; ++L) {
          if (L >= layers.size()) {
            upper = L;
            break;
          }
          bool all = true;
          for (auto const& p : layers[L])
            if (!exact.normal_form(p).empty()) {
              all = false;
              break;
            }
          if (all) upper = L;
        }
        if (upper || kk == cap + d) break;
      }
    } catch (ResourceLimit const&) {
      throw NotAdmissible(cap, "search budget exceeded");
    }
    if (!upper) throw NotAdmissible(cap);
  }
  // Exact check below the upper bound.
  IdealModel model(q, zero, linear, *upper);
  auto layers = z_normal_layers(*q, zi, *upper - 1);
  for (std::size_t L = 2; L < *upper; ++L) {
    if (L >= layers.size()) return L;
    bool all = true;
    for (auto const& p : layers[L])
      if (!model.normal_form(p).empty()) {
        all = false;
        break;
      }
    if (all) return L;
  }
  return *upper;
}

}  // namespace detail

class AlgebraPresentation {
 public:
  static constexpr std::size_t kDefaultCap = 64;

  static AlgebraPresentation create(Quiver quiver, std::vector<Path> zero,
                                    std::vector<LinearRelation> linear,
                                    std::size_t cap = kDefaultCap) {
    auto q = std::make_shared<Quiver const>(std::move(quiver));
    for (auto const& z : zero) {
      if (z.length() < 2)
        throw InvalidRelation("zero relations must have length >= 2");
      for (ArrowId a : z.arrows())
        if (a >= q->arrow_count()) throw UnknownLabel("arrow out of range");
    }
    std::size_t m = detail::compute_bound(q, zero, linear, cap);
    return AlgebraPresentation(std::move(q), std::move(zero), std::move(linear),
                               m, cap, false);
  }

  // Same ideal as a known presentation, different generators.
  static AlgebraPresentation with_bound(std::shared_ptr<Quiver const> q,
                                        std::vector<Path> zero,
                                        std::vector<LinearRelation> linear,
                                        std::size_t bound, std::size_t cap,
                                        bool minimal) {
    return AlgebraPresentation(std::move(q), std::move(zero), std::move(linear),
                               bound, cap, minimal);
  }

  Quiver const& quiver() const noexcept { return *quiver_; }
  std::shared_ptr<Quiver const> const& quiver_ptr() const noexcept {
    return quiver_;
  }
  std::vector<Path> const& zero() const noexcept { return model_->zero(); }
  std::vector<LinearRelation> const& linear() const noexcept {
    return model_->linear();
  }
  std::size_t bound() const noexcept { return bound_; }
  std::size_t cap() const noexcept { return cap_; }
  bool is_monomial() const noexcept { return linear().empty(); }
  bool is_minimal() const noexcept { return minimal_; }
  detail::IdealModel const& model() const noexcept { return *model_; }

  bool contains(Path const& p) const { return model_->contains(p); }

  std::vector<std::string> const& minimalization_report() const noexcept {
    return report_;
  }
  void set_report(std::vector<std::string> r) { report_ = std::move(r); }

 private:
  AlgebraPresentation(std::shared_ptr<Quiver const> q, std::vector<Path> zero,
                      std::vector<LinearRelation> linear, std::size_t bound,
                      std::size_t cap, bool minimal)
      : quiver_(q),
        bound_(bound),
        cap_(cap),
        minimal_(minimal),
        model_(std::make_shared<detail::IdealModel const>(
            q, std::move(zero), std::move(linear), bound)) {}

  std::shared_ptr<Quiver const> quiver_;
  std::size_t bound_;
  std::size_t cap_;
  bool minimal_;
  std::shared_ptr<detail::IdealModel const> model_;
  std::vector<std::string> report_;
};

inline std::size_t admissibility_bound(AlgebraPresentation const& A,
                                       std::size_t cap) {
  return detail::compute_bound(A.quiver_ptr(), A.zero(), A.linear(), cap);
}

inline bool path_in_ideal(AlgebraPresentation const& A, Path const& p) {
  return A.contains(p);
}

inline std::vector<Path> coset_paths(AlgebraPresentation const& A,
                                     Path const& p) {
  if (p.is_trivial()) return {p};
  return A.model().coset(p);
}

namespace detail {

// Zero relation g follows from one product x*r*y whose other terms are all
// killed by zero relations.
inline bool one_step_certificate(Path const& g,
                                 std::vector<LinearRelation> const& linear,
                                 ZeroIndex const& zi) {
  for (auto const& r : linear) {
    for (std::size_t j = 0; j < r.terms().size(); ++j) {
      auto const& t = r.terms()[j].path.arrows();
      for (std::size_t pos : occurrences(t, g.arrows())) {
        bool ok = true;
        for (std::size_t l = 0; l < r.terms().size() && ok; ++l) {
          if (l == j) continue;
          std::vector<ArrowId> seq(g.arrows().begin(), g.arrows().begin() + pos);
          auto const& o = r.terms()[l].path.arrows();
          seq.insert(seq.end(), o.begin(), o.end());
          seq.insert(seq.end(), g.arrows().begin() + pos + t.size(),
                     g.arrows().end());
          ok = zi.divides_any(seq);
        }
        if (ok) return true;
      }
    }
  }
  return false;
}

}  // namespace detail

// Greedily drops generators that lie in the ideal generated by the others.
// A generator is only dropped with a proof; when the proof search gives up
// the generator is kept and the report says so.
inline AlgebraPresentation minimalize_relations(AlgebraPresentation const& A) {
  auto const& q = A.quiver();
  auto qp = A.quiver_ptr();
  std::vector<std::string> report;
  std::size_t m = A.bound();

  std::vector<Path> zero = A.zero();
  std::sort(zero.begin(), zero.end(), PathLess{&q});
  zero.erase(std::unique(zero.begin(), zero.end()), zero.end());
  {
    std::vector<Path> kept;
    for (auto const& z : zero) {
      std::optional<Path> by;
      for (auto const& w : zero)
        if (w.length() < z.length() && occurs_in(w.arrows(), z.arrows())) {
          by = w;
          break;
        }
      if (by)
        report.push_back("removed " + to_string(q, z) + ": divisible by " +
                         to_string(q, *by));
      else
        kept.push_back(z);
    }
    zero = std::move(kept);
  }
  std::vector<LinearRelation> linear = A.linear();

  struct Gen {
    bool is_zero;
    std::size_t index;
    std::size_t len;
  };
  std::vector<Gen> order;
  for (std::size_t i = 0; i < zero.size(); ++i) order.push_back({true, i, zero[i].length()});
  for (std::size_t i = 0; i < linear.size(); ++i)
    order.push_back({false, i, linear[i].max_length()});
  std::stable_sort(order.begin(), order.end(),
                   [](Gen const& x, Gen const& y) { return x.len > y.len; });

  std::vector<char> zero_on(zero.size(), 1), lin_on(linear.size(), 1);
  auto current = [&](std::optional<Gen> skip) {
    std::pair<std::vector<Path>, std::vector<LinearRelation>> out;
    for (std::size_t i = 0; i < zero.size(); ++i)
      if (zero_on[i] && !(skip && skip->is_zero && skip->index == i))
        out.first.push_back(zero[i]);
    for (std::size_t i = 0; i < linear.size(); ++i)
      if (lin_on[i] && !(skip && !skip->is_zero && skip->index == i))
        out.second.push_back(linear[i]);
    return out;
  };

  for (auto const& g : order) {
    auto [oz, ol] = current(g);
    std::string name = g.is_zero ? to_string(q, zero[g.index])
                                 : to_string(q, linear[g.index]);
    if (g.is_zero) {
      Path const& z = zero[g.index];
      bool touches = false;
      for (auto const& r : ol)
        for (auto const& t : r.terms())
          touches = touches || occurs_in(t.path.arrows(), z.arrows());
      if (!touches) continue;
      detail::ZeroIndex zi(oz, q.arrow_count());
      if (detail::one_step_certificate(z, ol, zi)) {
        zero_on[g.index] = 0;
        report.push_back("removed " + name + ": follows from a linear relation");
        continue;
      }
    }
    detail::IdealModel trunc(qp, oz, ol, m);
    bool in_trunc;
    if (g.is_zero) {
      in_trunc = trunc.normal_form(zero[g.index]).empty();
    } else {
      detail::Vec v(PathLess{&q});
      for (auto const& t : linear[g.index].terms())
        detail::axpy(v, t.path, t.coefficient);
      in_trunc = trunc.normal_form(v).empty();
    }
    if (!in_trunc) continue;
    if (detail::certify_power(qp, oz, ol, m)) {
      (g.is_zero ? zero_on : lin_on)[g.index] = 0;
      report.push_back("removed " + name + ": in the ideal of the others");
    } else {
      report.push_back("kept " + name + ": redundancy not certified");
    }
  }
  auto [fz, fl] = current(std::nullopt);
  auto out = AlgebraPresentation::with_bound(qp, std::move(fz), std::move(fl), m,
                                             A.cap(), true);
  out.set_report(std::move(report));
  return out;
}

inline AlgebraPresentation ensure_minimal(AlgebraPresentation const& A) {
  return A.is_minimal() ? A : minimalize_relations(A);
}

struct SpecialMultiserialCheck {
  bool holds = true;
  enum class Side { Right, Left } side = Side::Right;
  ArrowId arrow = 0, first = 0, second = 0;
};

inline SpecialMultiserialCheck is_special_multiserial(AlgebraPresentation const& A) {
  auto const& q = A.quiver();
  SpecialMultiserialCheck out;
  for (ArrowId a : q.arrows_by_label()) {
    std::vector<ArrowId> right, left;
    for (ArrowId b : q.out_arrows(q.target(a)))
      if (!A.contains(Path::of(q, {a, b}))) right.push_back(b);
    for (ArrowId c : q.in_arrows(q.source(a)))
      if (!A.contains(Path::of(q, {c, a}))) left.push_back(c);
    auto by_label = [&](ArrowId x, ArrowId y) { return q.rank(x) < q.rank(y); };
    std::sort(right.begin(), right.end(), by_label);
    std::sort(left.begin(), left.end(), by_label);
    if (right.size() > 1)
      return {false, SpecialMultiserialCheck::Side::Right, a, right[0], right[1]};
    if (left.size() > 1)
      return {false, SpecialMultiserialCheck::Side::Left, a, left[0], left[1]};
  }
  return out;
}

}  // namespace umpq

#endif
