#ifndef UMPQ_FORMAT_HPP
#define UMPQ_FORMAT_HPP

// Line-oriented text formats.
//
//   quiver                      # optional section headers
//   vertex 1
//   arrow a 1 2                 # label source target
//   ideal
//   zero a b                    # the path ab is zero
//   rel 1 a a - 1 b b           # a^2 - b^2; coefficients p or p/q
//
// Paths are read left to right: "a b" means a then b.

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "umpq/ideal.hpp"

namespace umpq {

namespace detail {

struct Token {
  std::string text;
  std::size_t column;
};

inline std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    if (c == '#') break;
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' &&
           line[j] != '\r' && line[j] != '#')
      ++j;
    out.push_back({std::string(line.substr(i, j - i)), i + 1});
    i = j;
  }
  return out;
}

inline std::string slurp(std::string const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace detail

inline AlgebraPresentation parse_quiver(std::string_view text,
                                        std::size_t cap = AlgebraPresentation::kDefaultCap) {
  Quiver q;
  std::vector<Path> zero;
  std::vector<LinearRelation> linear;
  std::size_t lineno = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(start, nl - start);
    start = nl + 1;
    ++lineno;
    auto toks = detail::tokenize(line);
    if (toks.empty()) continue;
    auto fail = [&](std::size_t tok, std::string const& msg) -> ParseError {
      std::size_t col = tok < toks.size() ? toks[tok].column : line.size() + 1;
      return ParseError(lineno, col, msg);
    };
    auto const& kw = toks[0].text;
    auto read_path = [&](std::size_t from, std::size_t to) {
      std::vector<ArrowId> ids;
      for (std::size_t i = from; i < to; ++i) {
        auto a = q.find_arrow(toks[i].text);
        if (!a) throw fail(i, "unknown arrow '" + toks[i].text + "'");
        ids.push_back(*a);
      }
      if (ids.empty()) throw fail(from, "expected a path");
      try {
        return Path::of(q, ids);
      } catch (NonComposable const& e) {
        throw fail(from, std::string("non-composable path: ") + e.what());
      }
    };
    try {
      if (kw == "quiver" || kw == "ideal") {
        if (toks.size() != 1) throw fail(1, "unexpected token after section header");
      } else if (kw == "vertex") {
        if (toks.size() != 2) throw fail(1, "expected: vertex <id>");
        q.add_vertex(toks[1].text);
      } else if (kw == "arrow") {
        if (toks.size() != 4) throw fail(1, "expected: arrow <id> <src> <dst>");
        auto s = q.find_vertex(toks[2].text);
        if (!s) throw fail(2, "unknown vertex '" + toks[2].text + "'");
        auto t = q.find_vertex(toks[3].text);
        if (!t) throw fail(3, "unknown vertex '" + toks[3].text + "'");
        q.add_arrow(toks[1].text, *s, *t);
      } else if (kw == "zero") {
        Path p = read_path(1, toks.size());
        if (p.length() < 2) throw fail(1, "zero relations need length >= 2");
        zero.push_back(std::move(p));
      } else if (kw == "rel") {
        std::vector<Term> terms;
        std::size_t i = 1;
        Rational sign = 1;
        while (true) {
          if (i >= toks.size()) throw fail(i, "expected a coefficient");
          Rational c;
          try {
            c = parse_rational(toks[i].text);
          } catch (std::invalid_argument const&) {
            throw fail(i, "bad coefficient '" + toks[i].text + "'");
          }
          std::size_t j = i + 1;
          while (j < toks.size() && toks[j].text != "+" && toks[j].text != "-") ++j;
          terms.push_back({sign * c, read_path(i + 1, j)});
          if (j == toks.size()) break;
          sign = toks[j].text == "-" ? -1 : 1;
          i = j + 1;
        }
        if (terms.size() < 2) throw fail(1, "a rel needs at least two terms");
        try {
          linear.push_back(LinearRelation::make(q, std::move(terms)));
        } catch (InvalidRelation const& e) {
          throw fail(1, e.what());
        }
      } else {
        throw fail(0, "unknown keyword '" + kw + "'");
      }
    } catch (DuplicateLabel const& e) {
      throw fail(1, e.what());
    }
  }
  return AlgebraPresentation::create(std::move(q), std::move(zero),
                                     std::move(linear), cap);
}

inline AlgebraPresentation load_quiver(std::string const& path,
                                       std::size_t cap = AlgebraPresentation::kDefaultCap) {
  return parse_quiver(detail::slurp(path), cap);
}

inline std::string write_quiver(AlgebraPresentation const& A) {
  auto const& q = A.quiver();
  std::ostringstream out;
  out << "quiver\n";
  for (VertexId v = 0; v < q.vertex_count(); ++v)
    out << "vertex " << q.vertex_label(v) << "\n";
  for (ArrowId a = 0; a < q.arrow_count(); ++a)
    out << "arrow " << q.arrow_label(a) << " " << q.vertex_label(q.source(a))
        << " " << q.vertex_label(q.target(a)) << "\n";
  out << "ideal\n";
  auto path = [&](Path const& p) {
    std::string s;
    for (ArrowId a : p.arrows()) s += " " + q.arrow_label(a);
    return s;
  };
  for (auto const& z : A.zero()) out << "zero" << path(z) << "\n";
  for (auto const& r : A.linear()) {
    out << "rel";
    bool first = true;
    for (auto const& t : r.terms()) {
      Rational c = t.coefficient;
      if (!first) {
        out << (c < 0 ? " -" : " +");
        if (c < 0) c = -c;
      }
      out << " " << to_string(c) << path(t.path);
      first = false;
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace umpq

#endif
