#include "cga/expr/lexer.hpp"

#include <cctype>

#include "cga/blade.hpp"

namespace cga::expr {

namespace {

constexpr std::string_view kInfinityUtf8 = "\xE2\x88\x9E";  // ∞

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_alnum(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }

class Lexer {
 public:
  Lexer(std::string_view s, int line) : s_(s), line_(line) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (pos_ >= s_.size()) break;
      out.push_back(next());
    }
    out.push_back({TokenKind::kEnd, "", {}, line_, column()});
    return out;
  }

 private:
  int column() const { return static_cast<int>(pos_) + 1; }

  [[noreturn]] void fail(const std::string& what, std::size_t at) const {
    throw SyntaxError(what, line_, static_cast<int>(at) + 1);
  }

  Token simple(TokenKind kind) {
    Token t{kind, std::string(1, s_[pos_]), {}, line_, column()};
    ++pos_;
    return t;
  }

  Token next() {
    char c = s_[pos_];
    switch (c) {
      case '+': return simple(TokenKind::kPlus);
      case '-': return simple(TokenKind::kMinus);
      case '*': return simple(TokenKind::kStar);
      case '^': return simple(TokenKind::kCaret);
      case '|': return simple(TokenKind::kPipe);
      case '/': return simple(TokenKind::kSlash);
      case '=': return simple(TokenKind::kAssign);
      case '(': return simple(TokenKind::kLParen);
      case ')': return simple(TokenKind::kRParen);
      case ',': return simple(TokenKind::kComma);
      case ';': return simple(TokenKind::kSemicolon);
      default: break;
    }
    if (is_digit(c) || (c == '.' && pos_ + 1 < s_.size() && is_digit(s_[pos_ + 1]))) return number();
    if (c == 'e' && pos_ + 1 < s_.size() && s_[pos_ + 1] == '[') return basis();
    if (is_alpha(c)) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && is_alnum(s_[pos_])) ++pos_;
      return {TokenKind::kIdent, std::string(s_.substr(start, pos_ - start)), {}, line_,
              static_cast<int>(start) + 1};
    }
    fail("illegal character '" + std::string(1, c) + "'", pos_);
  }

  Token number() {
    std::size_t start = pos_;
    auto digits = [&] {
      while (pos_ < s_.size() && is_digit(s_[pos_])) ++pos_;
    };
    digits();
    bool decimal = false;
    if (pos_ < s_.size() && s_[pos_] == '.') {
      decimal = true;
      ++pos_;
      digits();
    }
    if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E')) {
      std::size_t save = pos_;
      ++pos_;
      if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) ++pos_;
      if (pos_ < s_.size() && is_digit(s_[pos_])) {
        decimal = true;
        digits();
      } else {
        pos_ = save;  // not an exponent, e.g. "2e[1]" is rejected later
      }
    }
    // "3/4" with no spaces is a single rational literal.
    if (!decimal && pos_ + 1 < s_.size() && s_[pos_] == '/' && is_digit(s_[pos_ + 1])) {
      ++pos_;
      digits();
    }
    if (pos_ < s_.size() && (is_alpha(s_[pos_]) || s_[pos_] == '.'))
      fail("malformed number (implicit multiplication is not supported; use '*')", pos_);
    return {TokenKind::kNumber, std::string(s_.substr(start, pos_ - start)), {}, line_,
            static_cast<int>(start) + 1};
  }

  Token basis() {
    std::size_t start = pos_;
    pos_ += 2;  // "e["
    Token t{TokenKind::kBasis, "", {}, line_, static_cast<int>(start) + 1};
    for (;;) {
      while (pos_ < s_.size() && s_[pos_] == ' ') ++pos_;
      if (pos_ >= s_.size()) fail("unterminated basis element", start);
      if (s_[pos_] == ']' && t.indices.empty()) {
        ++pos_;
        break;
      }
      if (s_.substr(pos_, 3) == "inf") {
        t.indices.push_back(kInf);
        pos_ += 3;
      } else if (s_.substr(pos_, kInfinityUtf8.size()) == kInfinityUtf8) {
        t.indices.push_back(kInf);
        pos_ += kInfinityUtf8.size();
      } else if (s_[pos_] >= '0' && s_[pos_] <= '3') {
        t.indices.push_back(s_[pos_] - '0');
        ++pos_;
      } else {
        fail("basis index must be 0, 1, 2, 3 or inf", pos_);
      }
      while (pos_ < s_.size() && s_[pos_] == ' ') ++pos_;
      if (pos_ < s_.size() && s_[pos_] == ',') {
        ++pos_;
        continue;
      }
      if (pos_ < s_.size() && s_[pos_] == ']') {
        ++pos_;
        break;
      }
      fail("expected ',' or ']' in basis element", pos_);
    }
    t.text = std::string(s_.substr(start, pos_ - start));
    return t;
  }

  std::string_view s_;
  int line_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<Token> tokenize(std::string_view input, int line) { return Lexer(input, line).run(); }

}  // namespace cga::expr
