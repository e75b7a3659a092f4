#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace qsheaf {

/// Malformed expression or invalid argument (mixed quadric dimensions, bad spinor label, ...).
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A cohomology cell that had to be exact is only known up to an interval.
class AmbiguityError : public std::runtime_error {
 public:
  AmbiguityError(const std::string& what, std::vector<std::string> cells)
      : std::runtime_error(what), cells_(std::move(cells)) {}
  const std::vector<std::string>& cells() const noexcept { return cells_; }

 private:
  std::vector<std::string> cells_;
};

/// No nonnegative rank assignment realises a long exact sequence: some input table is wrong.
class InconsistencyError : public std::runtime_error {
 public:
  InconsistencyError(const std::string& what, int twist, int index)
      : std::runtime_error(what), twist_(twist), index_(index) {}
  int twist() const noexcept { return twist_; }
  int index() const noexcept { return index_; }

 private:
  int twist_;
  int index_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line, int column)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace qsheaf
