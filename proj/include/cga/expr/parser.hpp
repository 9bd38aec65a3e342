#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cga/expr/ast.hpp"
#include "cga/expr/lexer.hpp"

namespace cga::expr {

struct ParsedStatement {
  ExprPtr ast;
  bool suppress_output = false;  // trailing ';'
  std::vector<std::string> warnings;
};

// Grammar, loosest to tightest:
//   statement := IDENT '=' statement | sum [';']
//   sum       := product (('+' | '-') product)*
//   product   := unary (('*' | '^' | '|' | '/') unary)*    left-associative
//   unary     := '-' unary | '+' unary | primary
//   primary   := NUMBER | BASIS | IDENT ['(' args ')'] | '(' sum ')'
// The three algebra products share one level; an unparenthesized chain
// mixing them is accepted with a warning.
ParsedStatement parse(const std::vector<Token>& tokens);
ParsedStatement parse(std::string_view source, int line = 1);

}  // namespace cga::expr
