#pragma once

#include <array>
#include <cmath>
#include <vector>

#include "cga/blade.hpp"
#include "cga/errors.hpp"
#include "cga/scalar.hpp"

namespace cga {

// Element of G(4,1) in the null basis: one coefficient per canonical Blade.
// Zero coefficients are implicit; float coefficients at or below
// kFloatCleanEpsilon are dropped on construction.
template <Scalar S>
class Multivector {
 public:
  using Coeffs = std::array<S, kBladeCount>;

  Multivector() = default;
  explicit Multivector(const S& scalar) { c_[0] = scalar; canonicalize(); }
  explicit Multivector(const Coeffs& coeffs) : c_(coeffs) { canonicalize(); }

  static Multivector from_blade(Blade b, const S& coeff = S::from_rational(1)) {
    Multivector m;
    m.c_[b.mask()] = coeff;
    m.canonicalize();
    return m;
  }
  static Multivector generator(int index) { return from_blade(Blade::generator(index)); }
  static Multivector one() { return Multivector(S::from_rational(1)); }

  const S& operator[](Blade b) const { return c_[b.mask()]; }
  const Coeffs& coeffs() const { return c_; }

  bool is_zero() const {
    for (const auto& c : c_)
      if (!c.is_zero()) return false;
    return true;
  }
  // True when only the scalar coefficient may be nonzero.
  bool is_scalar() const {
    for (unsigned i = 1; i < kBladeCount; ++i)
      if (!c_[i].is_zero()) return false;
    return true;
  }
  const S& scalar_part() const { return c_[0]; }

  // Blades with a nonzero coefficient, in formatting order.
  std::vector<Blade> support() const {
    std::vector<Blade> out;
    for (unsigned len = 0; len <= kGeneratorCount; ++len)
      for (unsigned m = 0; m < kBladeCount; ++m)
        if (static_cast<unsigned>(std::popcount(m)) == len && !c_[m].is_zero())
          out.emplace_back(m);
    return out;
  }
  std::size_t term_count() const {
    std::size_t n = 0;
    for (const auto& c : c_) n += !c.is_zero();
    return n;
  }

  Multivector operator-() const {
    Multivector out;
    for (unsigned i = 0; i < kBladeCount; ++i)
      if (!c_[i].is_zero()) out.c_[i] = -c_[i];
    return out;
  }
  Multivector& operator+=(const Multivector& o) {
    for (unsigned i = 0; i < kBladeCount; ++i)
      if (!o.c_[i].is_zero()) c_[i] = c_[i] + o.c_[i];
    canonicalize();
    return *this;
  }
  Multivector& operator-=(const Multivector& o) {
    for (unsigned i = 0; i < kBladeCount; ++i)
      if (!o.c_[i].is_zero()) c_[i] = c_[i] - o.c_[i];
    canonicalize();
    return *this;
  }
  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }

  friend Multivector operator*(const S& s, const Multivector& a) {
    Multivector out;
    if (s.is_zero()) return out;
    for (unsigned i = 0; i < kBladeCount; ++i)
      if (!a.c_[i].is_zero()) out.c_[i] = s * a.c_[i];
    out.canonicalize();
    return out;
  }
  friend Multivector operator*(const Multivector& a, const S& s) { return s * a; }

  friend bool operator==(const Multivector& a, const Multivector& b) {
    for (unsigned i = 0; i < kBladeCount; ++i) {
      bool za = a.c_[i].is_zero(), zb = b.c_[i].is_zero();
      if (za != zb) return false;
      if (!za && !(a.c_[i] == b.c_[i])) return false;
    }
    return true;
  }

  // Mutable builder access; re-canonicalizes.
  void set(Blade b, const S& coeff) {
    c_[b.mask()] = coeff;
    canonicalize();
  }

 private:
  void canonicalize() {
    if constexpr (backend_of<S> == Backend::kFloat) {
      for (auto& c : c_) {
        if (std::isnan(c.value())) throw InputError("NaN coefficient");
        if (c.is_zero()) c = Float(0.0);
      }
    } else {
      for (auto& c : c_)
        if (c.is_zero()) c = S{};
    }
  }

  Coeffs c_{};
};

// Exact division of every coefficient by a scalar.
template <Scalar S>
Multivector<S> divide(const Multivector<S>& a, const S& s) {
  if (s.is_zero()) throw NotInvertible("division of a multivector by zero");
  typename Multivector<S>::Coeffs c{};
  for (unsigned i = 0; i < kBladeCount; ++i)
    if (!a.coeffs()[i].is_zero()) c[i] = divide_exact(a.coeffs()[i], s);
  return Multivector<S>(c);
}

// Maps exact-rational coefficients into another backend.
template <Scalar T>
Multivector<T> convert(const Multivector<Rational>& a) {
  typename Multivector<T>::Coeffs c{};
  for (unsigned i = 0; i < kBladeCount; ++i) c[i] = T::from_rational(a.coeffs()[i]);
  return Multivector<T>(c);
}

// Largest absolute coefficient difference (float backend).
double max_abs_difference(const Multivector<Float>& a, const Multivector<Float>& b);

}  // namespace cga
