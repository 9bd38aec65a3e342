#include "cga/poly.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <unordered_map>

#include "cga/errors.hpp"

namespace cga {

namespace {

struct Registry {
  std::mutex mu;
  std::vector<std::string> names;
  std::unordered_map<std::string, SymbolId> ids;
};

Registry& registry() {
  static Registry r;
  return r;
}

}  // namespace

SymbolId SymbolTable::intern(std::string_view name) {
  auto& r = registry();
  std::lock_guard lock(r.mu);
  std::string key(name);
  if (auto it = r.ids.find(key); it != r.ids.end()) return it->second;
  auto id = static_cast<SymbolId>(r.names.size());
  r.names.push_back(key);
  r.ids.emplace(std::move(key), id);
  return id;
}

std::optional<SymbolId> SymbolTable::find(std::string_view name) {
  auto& r = registry();
  std::lock_guard lock(r.mu);
  if (auto it = r.ids.find(std::string(name)); it != r.ids.end()) return it->second;
  return std::nullopt;
}

std::string SymbolTable::name(SymbolId id) {
  auto& r = registry();
  std::lock_guard lock(r.mu);
  return r.names.at(id);
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end());
  for (const auto& [id, e] : factors) {
    if (!factors_.empty() && factors_.back().first == id)
      factors_.back().second += e;
    else
      factors_.emplace_back(id, e);
  }
  std::erase_if(factors_, [](const Factor& f) { return f.second == 0; });
  for (const auto& f : factors_) degree_ += f.second;
}

Monomial Monomial::variable(SymbolId id, int exponent) { return Monomial({{id, exponent}}); }

int Monomial::exponent(SymbolId id) const {
  for (const auto& [v, e] : factors_)
    if (v == id) return e;
  return 0;
}

bool Monomial::has_negative_exponent() const {
  return std::any_of(factors_.begin(), factors_.end(), [](const Factor& f) { return f.second < 0; });
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  std::vector<Monomial::Factor> f = a.factors_;
  f.insert(f.end(), b.factors_.begin(), b.factors_.end());
  return Monomial(std::move(f));
}

Monomial Monomial::inverse() const {
  std::vector<Factor> f = factors_;
  for (auto& x : f) x.second = -x.second;
  return Monomial(std::move(f));
}

bool Monomial::divisible_by(const Monomial& divisor) const {
  for (const auto& [id, e] : divisor.factors_)
    if (exponent(id) < e) return false;
  for (const auto& [id, e] : factors_)
    if (e < 0 && divisor.exponent(id) > e) return false;
  return true;
}

bool GradedLexOrder::operator()(const Monomial& a, const Monomial& b) const {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::size_t i = 0, j = 0;
  while (i < fa.size() || j < fb.size()) {
    SymbolId id;
    if (j == fb.size() || (i < fa.size() && fa[i].first < fb[j].first))
      id = fa[i].first;
    else
      id = fb[j].first;
    int ea = (i < fa.size() && fa[i].first == id) ? fa[i++].second : 0;
    int eb = (j < fb.size() && fb[j].first == id) ? fb[j++].second : 0;
    if (ea != eb) return ea > eb;
  }
  return false;
}

// -------------------------------------------------------------------- Poly

Poly::Poly(const Rational& c) {
  if (!c.is_zero()) terms_.emplace(Monomial(), c);
}

Poly::Poly(const Monomial& m, const Rational& c) {
  if (!c.is_zero()) terms_.emplace(m, c);
}

Poly Poly::symbol(std::string_view name) {
  return Poly(Monomial::variable(SymbolTable::intern(name)), Rational(1));
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

std::optional<Rational> Poly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (is_constant()) return terms_.begin()->second;
  return std::nullopt;
}

std::set<SymbolId> Poly::symbols() const {
  std::set<SymbolId> out;
  for (const auto& [m, c] : terms_)
    for (const auto& f : m.factors()) out.insert(f.first);
  return out;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  if (a.is_zero() || b.is_zero()) return out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

Poly Poly::pow(unsigned exponent) const {
  Poly result(1);
  Poly base = *this;
  while (exponent) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent) base *= base;
  }
  return result;
}

namespace {

Poly invert_monomial(const Poly& p) {
  if (!p.is_monomial()) throw InexactDivision("negative power of a non-monomial value");
  const auto& [m, c] = *p.terms().begin();
  return Poly(m.inverse(), divide_exact(Rational(1), c));
}

bool grlex_greater(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() > b.degree();
  return GradedLexOrder()(a, b);
}

std::pair<Monomial, Rational> leading_term(const Poly& p) {
  auto best = p.terms().begin();
  for (auto it = p.terms().begin(); it != p.terms().end(); ++it)
    if (grlex_greater(it->first, best->first)) best = it;
  return *best;
}

// Monomial that clears all negative exponents appearing in `p`.
void accumulate_shift(const Poly& p, std::map<SymbolId, int>& shift) {
  for (const auto& [m, c] : p.terms())
    for (const auto& [id, e] : m.factors())
      if (e < 0) shift[id] = std::max(shift[id], -e);
}

}  // namespace

Poly Poly::substitute(const std::map<SymbolId, Poly>& bindings) const {
  Poly out;
  for (const auto& [m, c] : terms_) {
    Poly term(c);
    std::vector<Monomial::Factor> kept;
    for (const auto& [id, e] : m.factors()) {
      auto it = bindings.find(id);
      if (it == bindings.end()) {
        kept.emplace_back(id, e);
        continue;
      }
      if (e > 0) {
        term *= it->second.pow(static_cast<unsigned>(e));
      } else {
        if (it->second.is_zero())
          throw NotInvertible("substitution makes a negative power of zero");
        term *= invert_monomial(it->second).pow(static_cast<unsigned>(-e));
      }
    }
    out += term * Poly(Monomial(std::move(kept)), Rational(1));
  }
  return out;
}

Poly divide_exact(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw NotInvertible("division by zero polynomial");
  if (b.is_monomial()) return a * invert_monomial(b);

  std::map<SymbolId, int> shift_exps;
  accumulate_shift(a, shift_exps);
  accumulate_shift(b, shift_exps);
  std::vector<Monomial::Factor> f(shift_exps.begin(), shift_exps.end());
  Poly shift(Monomial(std::move(f)), Rational(1));
  Poly rem = a * shift;
  Poly div = b * shift;

  auto [lm, lc] = leading_term(div);
  Poly quot;
  while (!rem.is_zero()) {
    auto [rm, rc] = leading_term(rem);
    if (!rm.divisible_by(lm))
      throw InexactDivision("polynomial division leaves a remainder");
    Poly step(rm * lm.inverse(), divide_exact(rc, lc));
    quot += step;
    rem -= step * div;
  }
  return quot;
}

// ---------------------------------------------------------------- printing

namespace {

std::string monomial_body(const Monomial& m, const Rational& abs_coeff, PolyStyle style) {
  std::string coeff = abs_coeff.to_string();
  if (m.is_one()) return coeff;
  bool unit = abs_coeff.is_one();

  std::string factors;
  if (style == PolyStyle::kInput) {
    std::string num, den;
    for (const auto& [id, e] : m.factors()) {
      std::string& dst = e > 0 ? num : den;
      for (int k = 0; k < std::abs(e); ++k) {
        if (!dst.empty()) dst += '*';
        dst += SymbolTable::name(id);
      }
    }
    std::string out = unit ? num : (num.empty() ? coeff : coeff + "*" + num);
    if (out.empty()) out = "1";
    if (!den.empty()) {
      bool single = den.find('*') == std::string::npos;
      out += single ? "/" + den : "/(" + den + ")";
    }
    return out;
  }

  const char* sep = style == PolyStyle::kDisplay ? " " : "*";
  for (const auto& [id, e] : m.factors()) {
    if (!factors.empty()) factors += sep;
    factors += SymbolTable::name(id);
    if (e != 1) factors += "^" + std::to_string(e);
  }
  if (unit) return factors;
  if (style == PolyStyle::kDisplay)
    return abs_coeff.is_integer() ? coeff + factors : coeff + " " + factors;
  return coeff + "*" + factors;
}

}  // namespace

std::string Poly::to_string(PolyStyle style, bool compact) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string body = monomial_body(m, c.abs(), style);
    if (first)
      out += c.is_negative() ? "-" + body : body;
    else if (compact)
      out += (c.is_negative() ? "-" : "+") + body;
    else
      out += (c.is_negative() ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

// ----------------------------------------------------------------- parsing

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view s) : s_(s) {}

  Poly parse() {
    Poly p = sum();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("polynomial text at column " + std::to_string(pos_ + 1) + ": " + what);
  }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly sum() {
    Poly acc = product();
    for (;;) {
      if (eat('+'))
        acc += product();
      else if (eat('-'))
        acc -= product();
      else
        return acc;
    }
  }

  Poly product() {
    Poly acc = unary();
    for (;;) {
      if (eat('*'))
        acc *= unary();
      else if (eat('/'))
        acc = divide_exact(acc, unary());
      else
        return acc;
    }
  }

  Poly unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  Poly power() {
    Poly base = atom();
    if (!eat('^')) return base;
    skip_ws();
    bool neg = eat('-');
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer exponent");
    auto e = static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start))));
    if (!neg) return base.pow(e);
    return divide_exact(Poly(1), base.pow(e));
  }

  Poly atom() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Poly p = sum();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.'))
        ++pos_;
      return Poly(Rational::parse(s_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Poly::symbol(s_.substr(start, pos_ - start));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly Poly::parse(std::string_view text) { return PolyParser(text).parse(); }

}  // namespace cga
