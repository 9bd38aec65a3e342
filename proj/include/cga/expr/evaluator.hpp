#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cga/dyn.hpp"
#include "cga/expr/ast.hpp"

namespace cga::expr {

using Environment = std::map<std::string, DynMultivector>;

struct EvalValue {
  DynMultivector value;
  std::optional<std::string> text;  // overrides the rendered multivector
};

// Evaluates an expression (not an assignment) in the given backend.
EvalValue evaluate_expression(const Expr& ast, Backend backend, const Environment& env,
                              std::vector<std::string>& warnings);

}  // namespace cga::expr
