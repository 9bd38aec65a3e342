// cga: conformal geometric algebra calculator.
//
//   cga repl [--backend B]
//   cga eval "EXPR" [--backend B] [--json]
//   cga run FILE [--backend B] [--transcript OUT]
//
// Exit codes: 0 success, 1 evaluation error, 2 parse error (including bad
// command-line usage).

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "cga/expr/lexer.hpp"
#include "cga/expr/session.hpp"

namespace {

using cga::expr::Runner;
using cga::expr::Session;

int repl(Session& session) {
  Runner runner(session, std::cout);
  std::cout << "cga " << cga::backend_name(session.backend())
            << " backend; :quit to exit, :backend exact|symbolic|float to switch\n";
  std::string line;
  int line_no = 0;
  for (;;) {
    std::cout << "In[" << runner.next_input_number() << "]:= " << std::flush;
    if (!std::getline(std::cin, line)) break;
    if (runner.process_line(line, ++line_no) == Runner::Status::kQuit) break;
  }
  return 0;
}

int eval(Session& session, const std::string& source, bool json) {
  try {
    auto ev = session.evaluate(source);
    for (const auto& w : ev.warnings) std::cerr << "warning: " << w << '\n';
    std::cout << (json ? cga::to_json(ev.value) : ev.text) << '\n';
    return 0;
  } catch (const cga::expr::SyntaxError& e) {
    std::cerr << "syntax error: " << e.what() << '\n';
    return 2;
  } catch (const cga::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}

int run(Session& session, const std::string& path, const std::string& transcript) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open '" << path << "'\n";
    return 1;
  }
  std::ofstream file;
  if (!transcript.empty()) {
    file.open(transcript, std::ios::binary);
    if (!file) {
      std::cerr << "error: cannot write '" << transcript << "'\n";
      return 1;
    }
  }
  std::ostream& out = transcript.empty() ? std::cout : file;
  Runner runner(session, out);
  runner.set_echo(true);
  int code = runner.run(in, /*stop_on_error=*/true);
  if (code != 0) std::cerr << "cga: " << path << " stopped with an error (exit " << code << ")\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Conformal geometric algebra G(4,1) calculator"};
  app.require_subcommand(1);

  std::string backend_name;
  auto add_backend = [&](CLI::App* cmd) {
    cmd->add_option("--backend,-b", backend_name, "exact | symbolic | float (default $CGA_BACKEND or symbolic)")
        ->check(CLI::IsMember({"exact", "symbolic", "float"}));
  };

  auto* repl_cmd = app.add_subcommand("repl", "Interactive session");
  add_backend(repl_cmd);

  std::string source;
  bool json = false;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate one statement");
  eval_cmd->add_option("expr", source, "Statement to evaluate")->required();
  eval_cmd->add_flag("--json", json, "Print the serialized multivector");
  add_backend(eval_cmd);

  std::string path, transcript;
  auto* run_cmd = app.add_subcommand("run", "Run a script file");
  run_cmd->add_option("file", path, "Script, one statement per line")->required();
  run_cmd->add_option("--transcript,-o", transcript, "Write the In/Out transcript here");
  add_backend(run_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  cga::Backend backend;
  try {
    backend = backend_name.empty() ? cga::expr::default_backend() : cga::parse_backend(backend_name);
  } catch (const cga::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  Session session(backend);
  if (*repl_cmd) return repl(session);
  if (*eval_cmd) return eval(session, source, json);
  return run(session, path, transcript);
}
