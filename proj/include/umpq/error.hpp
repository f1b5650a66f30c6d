#ifndef UMPQ_ERROR_HPP
#define UMPQ_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace umpq {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonComposable : public Error {
 public:
  using Error::Error;
};

class TrivialDivisor : public Error {
 public:
  TrivialDivisor() : Error("divisor must be a non-trivial path") {}
};

class TrivialPath : public Error {
 public:
  TrivialPath() : Error("path must be non-trivial") {}
};

class UnknownLabel : public Error {
 public:
  using Error::Error;
};

class DuplicateLabel : public Error {
 public:
  using Error::Error;
};

class InvalidRelation : public Error {
 public:
  using Error::Error;
};

class NotAdmissible : public Error {
 public:
  explicit NotAdmissible(std::size_t cap, std::string const& why = "")
      : Error("ideal is not admissible within cap " + std::to_string(cap) +
              (why.empty() ? "" : " (" + why + ")")),
        cap_(cap) {}
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

class ResourceLimit : public Error {
 public:
  using Error::Error;
};

class PathInIdeal : public Error {
 public:
  PathInIdeal() : Error("path lies in the ideal") {}
};

class CrossComponentPath : public Error {
 public:
  using Error::Error;
};

class NotSpecialMultiserial : public Error {
 public:
  using Error::Error;
};

class NotLocallyMonomial : public Error {
 public:
  using Error::Error;
};

class TruncatedVertex : public Error {
 public:
  using Error::Error;
};

class NotIncident : public Error {
 public:
  using Error::Error;
};

class BijectionFailure : public Error {
 public:
  using Error::Error;
};

// An internal consistency check failed. Always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, std::string const& msg)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_, column_;
};

class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<std::string> diagnostics)
      : Error(join(diagnostics)), diagnostics_(std::move(diagnostics)) {}
  std::vector<std::string> const& diagnostics() const noexcept {
    return diagnostics_;
  }

 private:
  static std::string join(std::vector<std::string> const& d) {
    std::string out = "invalid Brauer graph";
    for (auto const& s : d) out += "; " + s;
    return out;
  }
  std::vector<std::string> diagnostics_;
};

}  // namespace umpq

#endif
