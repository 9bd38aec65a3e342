#include "doctest.h"

#include <sstream>

#include "cga/expr/evaluator.hpp"
#include "cga/expr/lexer.hpp"
#include "cga/expr/parser.hpp"
#include "cga/expr/session.hpp"
#include "support/worked_sessions.hpp"
#include "support/roundtrip.hpp"

using namespace cga;
using namespace cga::expr;

namespace {

std::string eval_text(std::string_view src, Backend b = Backend::kSymbolic) {
  Session s(b);
  return s.evaluate(src).text;
}

std::string run_script(const std::string& script, int* code = nullptr, Backend b = Backend::kSymbolic,
                       bool stop = false) {
  Session s(b);
  std::ostringstream out;
  Runner runner(s, out);
  runner.set_echo(true);
  std::istringstream in(script);
  int c = runner.run(in, stop);
  if (code) *code = c;
  return out.str();
}

}  // namespace

TEST_CASE("tokenize examples") {
  auto t = tokenize("e[2,1]");
  REQUIRE(t.size() == 2);
  CHECK(t[0].kind == TokenKind::kBasis);
  CHECK(t[0].indices == std::vector<int>{2, 1});
  CHECK(t[1].kind == TokenKind::kEnd);

  t = tokenize("a*e[1] + e[0,inf]");
  REQUIRE(t.size() == 6);
  CHECK(t[0].kind == TokenKind::kIdent);
  CHECK(t[1].kind == TokenKind::kStar);
  CHECK(t[2].indices == std::vector<int>{1});
  CHECK(t[3].kind == TokenKind::kPlus);
  CHECK(t[4].indices == std::vector<int>{0, kInf});

  t = tokenize("3/4");
  REQUIRE(t.size() == 2);
  CHECK(t[0].kind == TokenKind::kNumber);
  CHECK(t[0].text == "3/4");

  CHECK(tokenize("e[∞,0]")[0].indices == std::vector<int>{kInf, 0});
  CHECK(tokenize("e[]")[0].indices.empty());

  try {
    tokenize("a + $b");
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 5);
  }
  CHECK_THROWS_AS(tokenize("e[5]"), SyntaxError);
  CHECK_THROWS_AS(tokenize("e[1,2"), SyntaxError);
}

TEST_CASE("parse examples") {
  auto p = parse("p = e[0] + X");
  REQUIRE(p.ast);
  CHECK(p.ast->kind == ExprKind::kAssign);
  CHECK(p.ast->text == "p");

  p = parse("a^b|c");
  CHECK(p.ast->kind == ExprKind::kBinary);
  CHECK(p.ast->op == '|');
  CHECK(p.ast->children[0]->op == '^');
  CHECK(p.warnings.size() == 1);

  p = parse("dual(P)");
  CHECK(p.ast->kind == ExprKind::kCall);
  CHECK(p.ast->text == "dual");
  CHECK(p.ast->children.size() == 1);

  CHECK(parse("a*b*c").warnings.empty());
  CHECK(parse("(a^b)|c").warnings.empty());
  CHECK(parse("x;").suppress_output);
  CHECK(parse("a - -b").ast->op == '-');

  CHECK_THROWS_AS(parse("a b"), SyntaxError);
  CHECK_THROWS_AS(parse("(a + b"), SyntaxError);
  CHECK_THROWS_AS(parse("f(a,)"), SyntaxError);
  CHECK_THROWS_AS(parse("= 3"), SyntaxError);
}

TEST_CASE("evaluate examples") {
  CHECK(eval_text("e[1,inf,2,0]") == "2 e[1,2] + e[0,1,2,∞]");
  CHECK(eval_text("gp(e[1,2,3] + a*e[inf,3,2], a*e[2], 3, 4 + e[1,3])") ==
        "3a - 12a e[1,3] + 3a^2 e[1,∞] - 12a^2 e[3,∞]");
  CHECK(eval_text("e[1]*e[2] - e[1]^e[2]") == "0");
  CHECK(eval_text("e[0]|e[inf]") == "-1");
  CHECK(eval_text("gradeq(e[1,2], 2)") == "True");
  CHECK(eval_text("gradeq(e[0,inf], 2)") == "False");
  CHECK(eval_text("tovector(point(1, 2, 3))", Backend::kExact) == "{1, 2, 3}");
  CHECK(eval_text("point(1, -1, 3)", Backend::kExact) == "e[0] + e[1] - e[2] + 3 e[3] + 11/2 e[∞]");
  CHECK(eval_text("grade(e[0,inf], 2)", Backend::kExact) == "1 + e[0,∞]");
  CHECK(eval_text("I5") == "-e[1,2,3] + e[0,1,2,3,∞]");
  CHECK(eval_text("gp(I5, I5i)") == "1");
  CHECK(eval_text("rev(e[0,inf])") == "-2 - e[0,∞]");
  CHECK(eval_text("gradeinv(e[1] + 2)") == "2 - e[1]");
  CHECK(eval_text("mag2(3*e[1] + 4*e[2])", Backend::kExact) == "25");
  CHECK(eval_text("mag(3*e[1] + 4*e[2])", Backend::kFloat) == "5");
  CHECK(eval_text("inv(2*e[1])", Backend::kExact) == "1/2 e[1]");
  CHECK(eval_text("dual(1)") == "e[1,2,3] - e[0,1,2,3,∞]");
  CHECK(eval_text("translator(t1, t2, t3)") == "1 - 1/2 t1 e[1,∞] - 1/2 t2 e[2,∞] - 1/2 t3 e[3,∞]");
  CHECK(eval_text("inversor(e[inf], e[0], r)") == "2r^-2 e[0]");
  CHECK(eval_text("spheredual(e[0], 1)", Backend::kExact) == "e[0] - 1/2 e[∞]");
  CHECK(eval_text("planedual(0, 0, 1, 2)", Backend::kExact) == "e[3] + 2 e[∞]");
  CHECK(eval_text("rotor(e[1], e[2])", Backend::kExact) == "e[1,2]");
  CHECK(eval_text("rotate(e[1], e[1], e[2], 3/5, 4/5)", Backend::kExact) == "-7/25 e[1] + 24/25 e[2]");
  CHECK(eval_text("rotate(e[1], e[1], e[2], 1.5707963267948966)", Backend::kFloat) == "e[2]");
  CHECK(eval_text("subst(x*y + 3, x = 0)") == "3");
  CHECK(eval_text("subst(x1*x2, x1 = 1)") == "x2");
  CHECK(eval_text("coeff(3*e[1] + 5*e[0,inf], e[0,inf])") == "5");
  CHECK(eval_text("normalize(2*point(1, 0, 0))", Backend::kExact) == "e[0] + e[1] + 1/2 e[∞]");
  CHECK(eval_text("(2*x + 4*e[1])/2") == "x + 2 e[1]");
  CHECK(eval_text("3/4*e[1]", Backend::kExact) == "3/4 e[1]");
  CHECK(eval_text("2.5*e[1]", Backend::kFloat) == "2.5 e[1]");
  CHECK(eval_text("line(point(0,0,0), point(0,0,0))", Backend::kExact) == "0");
}

TEST_CASE("sphere through four points from the calculator") {
  Session s(Backend::kSymbolic);
  s.evaluate("S = sphere(point(1,-1,3), point(4,1,-2), point(-1,-1,1), point(1,1,1))");
  auto ev = s.evaluate("coeff(op(point(x, y, z), S), e[0,1,2,3,inf])");
  auto expected = testing::printed_poly("12 (-4+(-5+x) x+y (5+y)+z+ z^2)");
  CHECK(std::get<Multivector<Poly>>(ev.value) == Multivector<Poly>(expected));
}

TEST_CASE("evaluation errors") {
  Session exact(Backend::kExact);
  CHECK_THROWS_WITH_AS(exact.evaluate("a*e[1]"), doctest::Contains("'a'"), EvalError);
  CHECK_THROWS_AS(exact.evaluate("nosuch(1)"), EvalError);
  CHECK_THROWS_AS(exact.evaluate("grade(e[1])"), EvalError);
  CHECK_THROWS_AS(exact.evaluate("grade(e[1], 9)"), InputError);
  CHECK_THROWS_AS(exact.evaluate("inv(e[inf])"), NotInvertible);
  CHECK_THROWS_AS(exact.evaluate("rotate(e[1], e[1], e[2], 1.57)"), EvalError);
  CHECK_THROWS_AS(exact.evaluate("mag(e[1])"), EvalError);
  CHECK_THROWS_AS(exact.evaluate("e[1]/e[2]"), EvalError);
  CHECK_THROWS_AS(exact.evaluate("e[1]/0"), NotInvertible);
  CHECK_THROWS_AS(exact.evaluate("I5 = 3"), EvalError);
  Session sym(Backend::kSymbolic);
  CHECK_THROWS_AS(sym.evaluate("(x + 1)/(x + 2)"), InexactDivision);
  CHECK_THROWS_AS(sym.evaluate("inv(2 + a*e[1] + e[1,2])"), UnsupportedSymbolicInverse);
  Session fl(Backend::kFloat);
  CHECK_THROWS_AS(fl.evaluate("subst(e[1], x = 1)"), EvalError);
}

TEST_CASE("variables keep their backend") {
  Session s(Backend::kExact);
  s.evaluate("A = 1/3*e[1]");
  s.set_backend(Backend::kFloat);
  CHECK_THROWS_AS(s.evaluate("A + e[2]"), BackendMismatch);
  s.set_backend(Backend::kExact);
  CHECK(s.evaluate("A + e[2]").text == "1/3 e[1] + e[2]");

  std::vector<DynMultivector> mixed{Multivector<Rational>::one(), Multivector<Float>::one()};
  CHECK_THROWS_AS(geometric_product(mixed), BackendMismatch);
}

TEST_CASE("runner transcript and commands") {
  int code = -1;
  auto out = run_script("e[2,1]\n# comment\n\nx = e[1];\nx^e[2]|e[1]\n:vars\n:clear x\n:vars\n", &code);
  CHECK(code == 0);
  CHECK(out ==
        "In[1]:= e[2,1]\n"
        "Out[1] = -e[1,2]\n"
        "In[2]:= x = e[1];\n"
        "In[3]:= x^e[2]|e[1]\n"
        "warning: column 2: mixed '*', '^', '|' chain evaluated left to right; add parentheses\n"
        "Out[3] = 0\n"
        "x [symbolic] = e[1]\n");

  out = run_script(":backend float\nrotate(e[1], e[1], e[2], 1.5707963267948966)\n:backend\n", &code);
  CHECK(out == "backend: float\nIn[1]:= rotate(e[1], e[1], e[2], 1.5707963267948966)\nOut[1] = e[2]\nbackend: float\n");

  out = run_script(":json on\n3 - 1/2*t1*e[1,inf]\n", &code);
  CHECK(out == "In[1]:= 3 - 1/2*t1*e[1,inf]\nOut[1] = {\"s\":\"3\",\"e1.einf\":\"-1/2*t1\"}\n");

  run_script("e[1]\n:quit\ne[2]\n", &code);
  CHECK(code == 0);
  out = run_script("e[1] +\ne[2]\n", &code);
  CHECK(code == 2);
  CHECK(out.find("syntax error: line 1") != std::string::npos);
  CHECK(out.find("Out[2] = e[2]") != std::string::npos);
  out = run_script("inv(e[inf])\ne[2]\n", &code, Backend::kExact, true);
  CHECK(code == 1);
  CHECK(out.find("e[2]\nOut") == std::string::npos);
  run_script(":bogus\n", &code);
  CHECK(code == 1);
  run_script(":clear nothing\n", &code);
  CHECK(code == 1);
}

TEST_CASE("round trip through the calculator") {
  auto exact = testing::roundtrip_suite<Rational>(500, 81);
  INFO(exact.counterexample.value_or(""));
  CHECK(exact.ok());
  CHECK(exact.cases == 500);
  auto symbolic = testing::roundtrip_suite<Poly>(500, 82);
  INFO(symbolic.counterexample.value_or(""));
  CHECK(symbolic.ok());
  CHECK(symbolic.cases == 500);
}
