#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "cga/dyn.hpp"
#include "cga/expr/ast.hpp"

namespace cga::expr {

// Evaluation failure: unknown function, arity, backend restrictions.
class EvalError : public Error {
 public:
  using Error::Error;
};

struct Evaluation {
  DynMultivector value;
  std::string text;         // display form, or "True"/"False", "{x, y, z}"
  std::string assigned_to;  // empty unless the statement assigned a variable
  bool suppress_output = false;
  std::vector<std::string> warnings;
};

// Calculator state: the active backend and the variable bindings. Symbols
// are auto-declared on first use in the symbolic backend; the numeric
// backends reject free symbols.
class Session {
 public:
  explicit Session(Backend backend = Backend::kSymbolic) : backend_(backend) {}

  Backend backend() const { return backend_; }
  void set_backend(Backend b) { backend_ = b; }

  // Throws SyntaxError or cga::Error.
  Evaluation evaluate(std::string_view statement, int line = 1);

  const std::map<std::string, DynMultivector>& variables() const { return env_; }
  bool clear(const std::string& name) { return env_.erase(name) > 0; }

 private:
  Backend backend_;
  std::map<std::string, DynMultivector> env_;
};

// Backend used when none is given: $CGA_BACKEND, else symbolic.
Backend default_backend();

// Line-oriented driver shared by the REPL and script runner. Statements are
// numbered In[n]/Out[n]; lines starting with ':' are commands.
class Runner {
 public:
  enum class Status { kOk, kEvalError, kParseError, kQuit };

  Runner(Session& session, std::ostream& out) : session_(session), out_(out) {}

  void set_echo(bool echo) { echo_ = echo; }
  void set_json(bool json) { json_ = json; }
  int next_input_number() const { return counter_ + 1; }

  Status process_line(std::string_view line, int line_no = 1);
  // Runs every line; with stop_on_error the first failure ends the run.
  // Returns the exit code (0, 1 evaluation error, 2 parse error).
  int run(std::istream& in, bool stop_on_error);

 private:
  Status command(std::string_view line);
  Status load(const std::string& path);

  Session& session_;
  std::ostream& out_;
  bool echo_ = false;
  bool json_ = false;
  int counter_ = 0;
};

}  // namespace cga::expr
