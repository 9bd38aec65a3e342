#include "cga/expr/session.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>

#include "cga/expr/evaluator.hpp"
#include "cga/expr/parser.hpp"

namespace cga::expr {

Backend default_backend() {
  if (const char* env = std::getenv("CGA_BACKEND"); env && *env) return parse_backend(env);
  return Backend::kSymbolic;
}

Evaluation Session::evaluate(std::string_view statement, int line) {
  ParsedStatement parsed = parse(statement, line);
  Evaluation out;
  out.warnings = std::move(parsed.warnings);
  out.suppress_output = parsed.suppress_output;

  const Expr* expr = parsed.ast.get();
  std::vector<std::string> targets;
  while (expr->kind == ExprKind::kAssign) {
    targets.push_back(expr->text);
    expr = expr->children[0].get();
  }
  EvalValue v = evaluate_expression(*expr, backend_, env_, out.warnings);
  for (const auto& name : targets) {
    if (name == "I5" || name == "I5i") throw EvalError("'" + name + "' is a constant");
    env_.insert_or_assign(name, v.value);
  }
  if (!targets.empty()) out.assigned_to = targets.front();
  out.text = v.text ? *v.text : gfactor_render(v.value);
  out.value = std::move(v.value);
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Runner::Status Runner::process_line(std::string_view raw, int line_no) {
  std::string_view line = raw;
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  line = trim(line);
  if (line.empty()) return Status::kOk;
  if (line.front() == ':') return command(line);

  int n = ++counter_;
  if (echo_) out_ << "In[" << n << "]:= " << line << '\n';
  try {
    Evaluation ev = session_.evaluate(line, line_no);
    for (const auto& w : ev.warnings) out_ << "warning: " << w << '\n';
    if (!ev.suppress_output)
      out_ << "Out[" << n << "] = " << (json_ ? to_json(ev.value) : ev.text) << '\n';
    return Status::kOk;
  } catch (const SyntaxError& e) {
    out_ << "syntax error: " << e.what() << '\n';
    return Status::kParseError;
  } catch (const Error& e) {
    out_ << "error: " << e.what() << '\n';
    return Status::kEvalError;
  }
}

Runner::Status Runner::command(std::string_view line) {
  std::string_view rest = trim(line.substr(1));
  std::string_view name = rest.substr(0, rest.find(' '));
  std::string_view arg = name.size() < rest.size() ? trim(rest.substr(name.size())) : "";

  if (name == "quit" || name == "q") return Status::kQuit;
  if (name == "backend") {
    if (arg.empty()) {
      out_ << "backend: " << backend_name(session_.backend()) << '\n';
      return Status::kOk;
    }
    try {
      session_.set_backend(parse_backend(arg));
    } catch (const Error& e) {
      out_ << "error: " << e.what() << '\n';
      return Status::kEvalError;
    }
    out_ << "backend: " << arg << '\n';
    return Status::kOk;
  }
  if (name == "vars") {
    for (const auto& [var, value] : session_.variables())
      out_ << var << " [" << backend_name(backend_of_value(value)) << "] = " << gfactor_render(value)
           << '\n';
    return Status::kOk;
  }
  if (name == "clear") {
    if (!session_.clear(std::string(arg))) {
      out_ << "error: no variable named '" << arg << "'\n";
      return Status::kEvalError;
    }
    return Status::kOk;
  }
  if (name == "json") {
    if (arg == "on" || arg == "off") {
      json_ = arg == "on";
      return Status::kOk;
    }
    out_ << "error: usage :json on|off\n";
    return Status::kEvalError;
  }
  if (name == "load") return load(std::string(arg));
  out_ << "error: unknown command ':" << name
       << "' (commands: :backend, :vars, :clear, :load, :json, :quit)\n";
  return Status::kEvalError;
}

Runner::Status Runner::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    out_ << "error: cannot open '" << path << "'\n";
    return Status::kEvalError;
  }
  bool saved = echo_;
  echo_ = true;
  std::string line;
  int line_no = 0;
  Status worst = Status::kOk;
  while (std::getline(in, line)) {
    Status s = process_line(line, ++line_no);
    if (s == Status::kQuit) break;
    if (s != Status::kOk) worst = s;
  }
  echo_ = saved;
  return worst;
}

int Runner::run(std::istream& in, bool stop_on_error) {
  std::string line;
  int line_no = 0;
  int code = 0;
  while (std::getline(in, line)) {
    Status s = process_line(line, ++line_no);
    if (s == Status::kQuit) break;
    if (s == Status::kOk) continue;
    code = s == Status::kParseError ? 2 : 1;
    if (stop_on_error) break;
  }
  return code;
}

}  // namespace cga::expr
