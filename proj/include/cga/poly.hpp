#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cga/rational.hpp"

namespace cga {

using SymbolId = std::uint32_t;

// Process-wide symbol registry. Ids are handed out in order of first use,
// which fixes the variable order of every polynomial printed afterwards.
class SymbolTable {
 public:
  static SymbolId intern(std::string_view name);
  static std::optional<SymbolId> find(std::string_view name);
  static std::string name(SymbolId id);
};

// Product of symbol powers, sorted by symbol id. Exponents are nonzero and
// may be negative so that division by a monomial stays exact.
class Monomial {
 public:
  using Factor = std::pair<SymbolId, int>;

  Monomial() = default;
  explicit Monomial(std::vector<Factor> factors);
  static Monomial variable(SymbolId id, int exponent = 1);

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  int degree() const { return degree_; }
  int exponent(SymbolId id) const;
  bool has_negative_exponent() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  Monomial inverse() const;
  // True when every exponent of `divisor` is <= the matching one here.
  bool divisible_by(const Monomial& divisor) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Factor> factors_;
  int degree_ = 0;
};

// Display/storage order: ascending total degree, then lexicographic with
// larger exponents on earlier-declared symbols first.
struct GradedLexOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

enum class PolyStyle {
  kDisplay,  // "3a^2 b - 1/2 x"
  kText,     // "3*a^2*b - 1/2*x"; accepted by Poly::parse
  kInput,    // "3*a*a*b - 1/2*x"; accepted by the calculator grammar
};

class Poly;
Poly divide_exact(const Poly& a, const Poly& b);

// Multivariate (Laurent) polynomial with exact rational coefficients, kept
// fully expanded.
class Poly {
 public:
  using Terms = std::map<Monomial, Rational, GradedLexOrder>;

  Poly() = default;
  Poly(long c) : Poly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  Poly(const Rational& c);            // NOLINT(google-explicit-constructor)
  Poly(const Monomial& m, const Rational& c);

  static Poly symbol(std::string_view name);
  static Poly from_rational(const Rational& r) { return Poly(r); }
  // Scalar text grammar: numbers, p/q, decimals, symbols, + - * / ^ and
  // parentheses; '^' takes an integer exponent.
  static Poly parse(std::string_view text);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::optional<Rational> constant_value() const;
  bool is_monomial() const { return terms_.size() == 1; }
  std::size_t term_count() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }
  std::set<SymbolId> symbols() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

  Poly pow(unsigned exponent) const;

  // Replaces each bound symbol by its value. Negative powers of a bound
  // symbol require a value that is a nonzero monomial or constant.
  Poly substitute(const std::map<SymbolId, Poly>& bindings) const;

  std::string to_string(PolyStyle style = PolyStyle::kDisplay, bool compact = false) const;

 private:
  void add_term(const Monomial& m, const Rational& c);
  Terms terms_;
};

}  // namespace cga
