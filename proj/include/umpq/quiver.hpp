#ifndef UMPQ_QUIVER_HPP
#define UMPQ_QUIVER_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "umpq/error.hpp"

namespace umpq {

using VertexId = std::uint32_t;
using ArrowId = std::uint32_t;

inline bool is_label(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
              (c >= '0' && c <= '9') || c == '_';
    if (!ok) return false;
  }
  return true;
}

struct Arrow {
  std::string label;
  VertexId source;
  VertexId target;
};

class Quiver {
 public:
  VertexId add_vertex(std::string label) {
    check_fresh(label);
    VertexId id = static_cast<VertexId>(vertices_.size());
    vertex_index_.emplace(label, id);
    vertices_.push_back(std::move(label));
    out_.emplace_back();
    in_.emplace_back();
    return id;
  }

  ArrowId add_arrow(std::string label, VertexId source, VertexId target) {
    if (source >= vertices_.size() || target >= vertices_.size())
      throw UnknownLabel("arrow endpoint does not exist");
    check_fresh(label);
    ArrowId id = static_cast<ArrowId>(arrows_.size());
    arrow_index_.emplace(label, id);
    arrows_.push_back({std::move(label), source, target});
    out_[source].push_back(id);
    in_[target].push_back(id);
    rerank();
    return id;
  }

  ArrowId add_arrow(std::string label, std::string_view source,
                    std::string_view target) {
    return add_arrow(std::move(label), require_vertex(source),
                     require_vertex(target));
  }

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t arrow_count() const noexcept { return arrows_.size(); }

  std::string const& vertex_label(VertexId v) const { return vertices_.at(v); }
  Arrow const& arrow(ArrowId a) const { return arrows_.at(a); }
  std::string const& arrow_label(ArrowId a) const { return arrows_.at(a).label; }
  VertexId source(ArrowId a) const { return arrows_.at(a).source; }
  VertexId target(ArrowId a) const { return arrows_.at(a).target; }

  std::optional<VertexId> find_vertex(std::string_view label) const {
    auto it = vertex_index_.find(std::string(label));
    if (it == vertex_index_.end()) return std::nullopt;
    return it->second;
  }
  std::optional<ArrowId> find_arrow(std::string_view label) const {
    auto it = arrow_index_.find(std::string(label));
    if (it == arrow_index_.end()) return std::nullopt;
    return it->second;
  }
  VertexId require_vertex(std::string_view label) const {
    if (auto v = find_vertex(label)) return *v;
    throw UnknownLabel("unknown vertex '" + std::string(label) + "'");
  }
  ArrowId require_arrow(std::string_view label) const {
    if (auto a = find_arrow(label)) return *a;
    throw UnknownLabel("unknown arrow '" + std::string(label) + "'");
  }

  std::span<ArrowId const> out_arrows(VertexId v) const { return out_.at(v); }
  std::span<ArrowId const> in_arrows(VertexId v) const { return in_.at(v); }

  // Position of the arrow's label in the sorted list of all arrow labels.
  std::uint32_t rank(ArrowId a) const { return rank_[a]; }

  // Arrows sorted by label.
  std::vector<ArrowId> arrows_by_label() const {
    std::vector<ArrowId> ids(arrows_.size());
    for (ArrowId a = 0; a < ids.size(); ++a) ids[rank_[a]] = a;
    return ids;
  }

  bool is_connected() const {
    if (vertices_.empty()) return true;
    std::vector<VertexId> parent(vertices_.size());
    std::iota(parent.begin(), parent.end(), 0u);
    auto find = [&](VertexId x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (auto const& a : arrows_) parent[find(a.source)] = find(a.target);
    VertexId root = find(0);
    for (VertexId v = 1; v < vertices_.size(); ++v)
      if (find(v) != root) return false;
    return true;
  }

 private:
  void check_fresh(std::string const& label) const {
    if (!is_label(label))
      throw Error("invalid label '" + label + "'");
    if (vertex_index_.count(label) || arrow_index_.count(label))
      throw DuplicateLabel("label '" + label + "' already used");
  }

  void rerank() {
    std::vector<ArrowId> ids(arrows_.size());
    std::iota(ids.begin(), ids.end(), 0u);
    std::sort(ids.begin(), ids.end(), [&](ArrowId x, ArrowId y) {
      return arrows_[x].label < arrows_[y].label;
    });
    rank_.assign(arrows_.size(), 0);
    for (std::uint32_t i = 0; i < ids.size(); ++i) rank_[ids[i]] = i;
  }

  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::unordered_map<std::string, VertexId> vertex_index_;
  std::unordered_map<std::string, ArrowId> arrow_index_;
  std::vector<std::vector<ArrowId>> out_, in_;
  std::vector<std::uint32_t> rank_;
};

// A path is a composable arrow sequence read left to right, or the trivial
// path at a vertex. Source and target are cached so a path can be handled
// without its quiver.
class Path {
 public:
  Path() = default;

  static Path trivial(VertexId v) { return Path(v, v, {}); }

  static Path of(Quiver const& q, std::vector<ArrowId> arrows) {
    if (arrows.empty()) throw TrivialPath();
    for (std::size_t i = 0; i + 1 < arrows.size(); ++i)
      if (q.target(arrows[i]) != q.source(arrows[i + 1]))
        throw NonComposable("arrows " + q.arrow_label(arrows[i]) + " and " +
                            q.arrow_label(arrows[i + 1]) + " do not compose");
    VertexId s = q.source(arrows.front()), t = q.target(arrows.back());
    return Path(s, t, std::move(arrows));
  }

  static Path arrow(Quiver const& q, ArrowId a) { return of(q, {a}); }

  // Caller guarantees composability and endpoints.
  static Path unchecked(VertexId s, VertexId t, std::vector<ArrowId> a) {
    return Path(s, t, std::move(a));
  }

  // Labels separated by whitespace or written as one word of single-letter
  // labels ("dab").
  static Path parse(Quiver const& q, std::string_view text) {
    std::vector<ArrowId> ids;
    std::string cur;
    auto flush = [&] {
      if (!cur.empty()) ids.push_back(q.require_arrow(cur));
      cur.clear();
    };
    bool spaced = text.find_first_of(" .") != std::string_view::npos;
    for (char c : text) {
      if (c == ' ' || c == '.') {
        flush();
      } else if (spaced) {
        cur += c;
      } else {
        cur = std::string(1, c);
        flush();
      }
    }
    flush();
    return of(q, std::move(ids));
  }

  bool is_trivial() const noexcept { return arrows_.empty(); }
  std::size_t length() const noexcept { return arrows_.size(); }
  VertexId source() const noexcept { return source_; }
  VertexId target() const noexcept { return target_; }
  std::vector<ArrowId> const& arrows() const noexcept { return arrows_; }
  ArrowId first() const { return arrows_.front(); }
  ArrowId last() const { return arrows_.back(); }
  ArrowId operator[](std::size_t i) const { return arrows_[i]; }

  friend bool operator==(Path const& x, Path const& y) {
    return x.source_ == y.source_ && x.arrows_ == y.arrows_;
  }
  friend auto operator<=>(Path const& x, Path const& y) {
    if (auto c = x.arrows_ <=> y.arrows_; c != 0) return c;
    return x.source_ <=> y.source_;
  }

 private:
  Path(VertexId s, VertexId t, std::vector<ArrowId> a)
      : source_(s), target_(t), arrows_(std::move(a)) {}

  VertexId source_ = 0, target_ = 0;
  std::vector<ArrowId> arrows_;
};

inline Path concat(Path const& p, Path const& q) {
  if (p.target() != q.source())
    throw NonComposable("paths do not compose");
  if (p.is_trivial()) return q;
  if (q.is_trivial()) return p;
  std::vector<ArrowId> a = p.arrows();
  a.insert(a.end(), q.arrows().begin(), q.arrows().end());
  return Path::unchecked(p.source(), q.target(), std::move(a));
}

// The factor of p of the given length starting after `pos` arrows.
inline Path subpath(Quiver const& q, Path const& p, std::size_t pos,
                    std::size_t len) {
  if (pos + len > p.length()) throw std::out_of_range("subpath");
  if (len == 0) {
    VertexId v = pos == 0 ? p.source()
                          : q.target(p[pos - 1]);
    return Path::trivial(v);
  }
  std::vector<ArrowId> a(p.arrows().begin() + pos,
                         p.arrows().begin() + pos + len);
  VertexId s = q.source(a.front()), t = q.target(a.back());
  return Path::unchecked(s, t, std::move(a));
}

inline std::vector<std::size_t> occurrences(std::span<ArrowId const> u,
                                            std::span<ArrowId const> v) {
  std::vector<std::size_t> out;
  if (u.empty() || u.size() > v.size()) return out;
  for (std::size_t i = 0; i + u.size() <= v.size(); ++i)
    if (std::equal(u.begin(), u.end(), v.begin() + i)) out.push_back(i);
  return out;
}

inline bool occurs_in(std::span<ArrowId const> u, std::span<ArrowId const> v) {
  if (u.empty() || u.size() > v.size()) return false;
  return std::search(v.begin(), v.end(), u.begin(), u.end()) != v.end();
}

inline std::vector<std::size_t> divides(Path const& u, Path const& v) {
  if (u.is_trivial()) throw TrivialDivisor();
  return occurrences(u.arrows(), v.arrows());
}

inline std::vector<Path> prefixes(Quiver const& q, Path const& w) {
  std::vector<Path> out;
  for (std::size_t n = 0; n <= w.length(); ++n) out.push_back(subpath(q, w, 0, n));
  return out;
}

inline std::vector<Path> suffixes(Quiver const& q, Path const& w) {
  std::vector<Path> out;
  for (std::size_t n = 0; n <= w.length(); ++n)
    out.push_back(subpath(q, w, w.length() - n, n));
  return out;
}

inline bool disjoint(Path const& u, Path const& v) {
  for (ArrowId a : u.arrows())
    if (std::find(v.arrows().begin(), v.arrows().end(), a) != v.arrows().end())
      return false;
  return true;
}

inline std::optional<ArrowId> shared_arrow(Quiver const& q, Path const& u,
                                           Path const& v) {
  std::optional<ArrowId> best;
  for (ArrowId a : u.arrows())
    if (std::find(v.arrows().begin(), v.arrows().end(), a) != v.arrows().end())
      if (!best || q.rank(a) < q.rank(*best)) best = a;
  return best;
}

inline bool is_repetition_free(Path const& p) {
  std::vector<ArrowId> a = p.arrows();
  std::sort(a.begin(), a.end());
  return std::adjacent_find(a.begin(), a.end()) == a.end();
}

inline bool is_cyclic_quiver(Quiver const& q) {
  if (q.vertex_count() == 0) return false;
  for (VertexId v = 0; v < q.vertex_count(); ++v)
    if (q.in_arrows(v).size() != 1 || q.out_arrows(v).size() != 1) return false;
  return q.is_connected();
}

// (length, label sequence). Used for pivoting and stable output.
struct PathLess {
  Quiver const* quiver;
  bool operator()(Path const& x, Path const& y) const {
    if (x.length() != y.length()) return x.length() < y.length();
    for (std::size_t i = 0; i < x.length(); ++i)
      if (x[i] != y[i]) return quiver->rank(x[i]) < quiver->rank(y[i]);
    return x.source() < y.source();
  }
};

// Plain lexicographic order on label sequences; a proper prefix comes first.
struct LexLess {
  Quiver const* quiver;
  bool operator()(Path const& x, Path const& y) const {
    std::size_t n = std::min(x.length(), y.length());
    for (std::size_t i = 0; i < n; ++i)
      if (x[i] != y[i]) return quiver->rank(x[i]) < quiver->rank(y[i]);
    if (x.length() != y.length()) return x.length() < y.length();
    return x.source() < y.source();
  }
};

inline bool single_letter_labels(Quiver const& q) {
  for (ArrowId a = 0; a < q.arrow_count(); ++a)
    if (q.arrow_label(a).size() != 1) return false;
  return true;
}

inline std::string to_string(Quiver const& q, Path const& p) {
  if (p.is_trivial()) return "e_" + q.vertex_label(p.source());
  bool compact = single_letter_labels(q);
  std::string s;
  for (std::size_t i = 0; i < p.length(); ++i) {
    if (i && !compact) s += '.';
    s += q.arrow_label(p[i]);
  }
  return s;
}

inline std::vector<std::string> labels(Quiver const& q, Path const& p) {
  std::vector<std::string> out;
  for (ArrowId a : p.arrows()) out.push_back(q.arrow_label(a));
  return out;
}

}  // namespace umpq

#endif
