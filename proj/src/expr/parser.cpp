#include "cga/expr/parser.hpp"

#include <set>

namespace cga::expr {

namespace {

class Parser {
 public:
  explicit Parser(const std::vector<Token>& tokens) : toks_(tokens) {}

  ParsedStatement run() {
    ParsedStatement out;
    out.ast = statement();
    if (peek().kind == TokenKind::kSemicolon) {
      advance();
      out.suppress_output = true;
    }
    if (peek().kind != TokenKind::kEnd) fail("unexpected '" + peek().text + "'");
    out.warnings = std::move(warnings_);
    return out;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  const Token& advance() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  [[noreturn]] void fail(const std::string& what) const {
    const Token& t = peek();
    throw SyntaxError(t.kind == TokenKind::kEnd ? what + " at end of input" : what, t.line,
                      t.column);
  }
  void expect(TokenKind kind, const char* what) {
    if (peek().kind != kind) fail(std::string("expected ") + what);
    advance();
  }

  static ExprPtr node(ExprKind kind, const Token& at) {
    auto e = std::make_unique<Expr>();
    e->kind = kind;
    e->column = at.column;
    return e;
  }

  ExprPtr statement() {
    if (peek().kind == TokenKind::kIdent && peek(1).kind == TokenKind::kAssign) {
      const Token& name = advance();
      advance();
      auto e = node(ExprKind::kAssign, name);
      e->text = name.text;
      e->children.push_back(statement());
      return e;
    }
    return sum();
  }

  ExprPtr sum() {
    ExprPtr lhs = product();
    while (peek().kind == TokenKind::kPlus || peek().kind == TokenKind::kMinus) {
      const Token& op = advance();
      auto e = node(ExprKind::kBinary, op);
      e->op = op.text[0];
      e->children.push_back(std::move(lhs));
      e->children.push_back(product());
      lhs = std::move(e);
    }
    return lhs;
  }

  ExprPtr product() {
    ExprPtr lhs = unary();
    std::set<char> algebra_ops;
    int chain_column = peek().column;
    for (;;) {
      TokenKind k = peek().kind;
      if (k != TokenKind::kStar && k != TokenKind::kCaret && k != TokenKind::kPipe &&
          k != TokenKind::kSlash)
        break;
      const Token& op = advance();
      if (op.text[0] != '/') algebra_ops.insert(op.text[0]);
      auto e = node(ExprKind::kBinary, op);
      e->op = op.text[0];
      e->children.push_back(std::move(lhs));
      e->children.push_back(unary());
      lhs = std::move(e);
    }
    if (algebra_ops.size() > 1)
      warnings_.push_back("column " + std::to_string(chain_column) +
                          ": mixed '*', '^', '|' chain evaluated left to right; add parentheses");
    return lhs;
  }

  ExprPtr unary() {
    if (peek().kind == TokenKind::kMinus) {
      const Token& op = advance();
      auto e = node(ExprKind::kNegate, op);
      e->children.push_back(unary());
      return e;
    }
    if (peek().kind == TokenKind::kPlus) {
      advance();
      return unary();
    }
    return primary();
  }

  ExprPtr primary() {
    const Token& t = peek();
    switch (t.kind) {
      case TokenKind::kNumber: {
        advance();
        auto e = node(ExprKind::kNumber, t);
        e->text = t.text;
        return e;
      }
      case TokenKind::kBasis: {
        advance();
        auto e = node(ExprKind::kBasis, t);
        e->text = t.text;
        e->indices = t.indices;
        return e;
      }
      case TokenKind::kIdent: {
        advance();
        if (peek().kind != TokenKind::kLParen) {
          auto e = node(ExprKind::kSymbol, t);
          e->text = t.text;
          return e;
        }
        advance();
        auto e = node(ExprKind::kCall, t);
        e->text = t.text;
        if (peek().kind != TokenKind::kRParen) {
          e->children.push_back(statement());
          while (peek().kind == TokenKind::kComma) {
            advance();
            e->children.push_back(statement());
          }
        }
        expect(TokenKind::kRParen, "')' to close argument list");
        return e;
      }
      case TokenKind::kLParen: {
        advance();
        ExprPtr inner = sum();
        expect(TokenKind::kRParen, "')'");
        return inner;
      }
      default:
        fail(t.kind == TokenKind::kEnd ? "expected an expression" : "unexpected '" + t.text + "'");
    }
  }

  const std::vector<Token>& toks_;
  std::size_t pos_ = 0;
  std::vector<std::string> warnings_;
};

}  // namespace

ParsedStatement parse(const std::vector<Token>& tokens) { return Parser(tokens).run(); }

ParsedStatement parse(std::string_view source, int line) { return parse(tokenize(source, line)); }

}  // namespace cga::expr
