#pragma once

#include <memory>
#include <string>
#include <vector>

namespace cga::expr {

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

enum class ExprKind { kNumber, kSymbol, kBasis, kNegate, kBinary, kCall, kAssign };

// op for kBinary: '+', '-', '*', '^', '|', '/'.
struct Expr {
  ExprKind kind;
  std::string text;          // literal text, symbol/function/target name
  std::vector<int> indices;  // kBasis
  char op = 0;
  std::vector<ExprPtr> children;
  int column = 1;
};

}  // namespace cga::expr
