#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "aleph/dsl/ast.hpp"
#include "aleph/error.hpp"

namespace aleph::dsl {

class ParseError : public Error {
 public:
  ParseError(int line, int column, std::vector<std::string> expected, std::string found);

  int line() const { return line_; }
  int column() const { return column_; }
  const std::vector<std::string>& expected() const { return expected_; }
  const std::string& found() const { return found_; }

 private:
  int line_;
  int column_;
  std::vector<std::string> expected_;
  std::string found_;
};

// Statements are separated by ';' or newlines. A single statement parses to
// its own node, several to a Session.
Ast parse(std::string_view source);

// Parses one cardinal, e.g. "aleph(w+1)" or "aleph_2".
CardinalExpr parse_cardinal(std::string_view source);

}  // namespace aleph::dsl
