#include "cga/rational.hpp"

#include <cctype>

#include "cga/errors.hpp"

namespace cga {

Rational::Rational(long num, long den) {
  if (den == 0) throw InputError("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw InputError("empty number");
  bool neg = false;
  std::size_t pos = 0;
  if (s[0] == '-' || s[0] == '+') {
    neg = s[0] == '-';
    pos = 1;
  }
  std::string body = s.substr(pos);
  auto all_digits = [](const std::string& d) {
    if (d.empty()) return false;
    for (char c : d)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  mpq_class q;
  if (auto slash = body.find('/'); slash != std::string::npos) {
    std::string n = body.substr(0, slash), d = body.substr(slash + 1);
    if (!all_digits(n) || !all_digits(d)) throw InputError("malformed rational '" + s + "'");
    mpz_class den(d);
    if (den == 0) throw InputError("rational with zero denominator '" + s + "'");
    q = mpq_class(mpz_class(n), den);
  } else if (auto dot = body.find('.'); dot != std::string::npos) {
    std::string ip = body.substr(0, dot), fp = body.substr(dot + 1);
    if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) ||
        (!fp.empty() && !all_digits(fp)))
      throw InputError("malformed decimal '" + s + "'");
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, fp.size());
    q = mpq_class(mpz_class((ip.empty() ? "0" : ip) + fp), scale);
  } else {
    if (!all_digits(body)) throw InputError("malformed integer '" + s + "'");
    q = mpq_class(mpz_class(body));
  }
  q.canonicalize();
  if (neg) q = -q;
  return Rational(q);
}

bool Rational::exact_sqrt(Rational& out) const {
  if (sign() < 0) return false;
  mpz_class n = v_.get_num(), d = v_.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
    return false;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  out = Rational(mpq_class(rn, rd));
  return true;
}

std::string Rational::to_string() const { return v_.get_str(); }

Rational divide_exact(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw NotInvertible("division by zero");
  return Rational(mpq_class(a.value() / b.value()));
}

}  // namespace cga
