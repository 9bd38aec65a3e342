#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cga/errors.hpp"

namespace cga::expr {

enum class TokenKind {
  kNumber,     // 12, 3/4, 2.5, 1e-3
  kIdent,      // [A-Za-z][A-Za-z0-9]*
  kBasis,      // e[i,...,k]
  kPlus,
  kMinus,
  kStar,       // geometric product
  kCaret,      // outer product
  kPipe,       // left contraction
  kSlash,      // division by a scalar
  kAssign,
  kLParen,
  kRParen,
  kComma,
  kSemicolon,  // trailing: suppress output
  kEnd,
};

struct Token {
  TokenKind kind;
  std::string text;
  std::vector<int> indices;  // kBasis only; e∞ is cga::kInf
  int line = 1;
  int column = 1;
};

// Syntax problem with a 1-based source position.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, int line, int column)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

std::vector<Token> tokenize(std::string_view input, int line = 1);

}  // namespace cga::expr
