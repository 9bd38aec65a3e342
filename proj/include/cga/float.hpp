#pragma once

#include <cmath>
#include <string>
#include <string_view>

#include "cga/errors.hpp"
#include "cga/rational.hpp"

namespace cga {

// Coefficients at or below this magnitude are dropped when a float
// multivector is canonicalized.
inline constexpr double kFloatCleanEpsilon = 1e-12;

class Float;
Float divide_exact(const Float& a, const Float& b);

// IEEE double coefficient. Construction rejects NaN.
class Float {
 public:
  Float() = default;
  Float(double v) : v_(v) {  // NOLINT(google-explicit-constructor)
    if (std::isnan(v)) throw InputError("NaN is not a valid coefficient");
  }
  Float(long v) : v_(static_cast<double>(v)) {}  // NOLINT(google-explicit-constructor)
  Float(int v) : v_(static_cast<double>(v)) {}   // NOLINT(google-explicit-constructor)

  static Float from_rational(const Rational& r) { return Float(r.to_double()); }
  static Float parse(std::string_view text);

  double value() const { return v_; }
  bool is_zero() const { return std::fabs(v_) <= kFloatCleanEpsilon; }
  bool is_negative() const { return v_ < 0; }

  Float operator-() const { return Float(-v_); }
  Float& operator+=(const Float& o) { v_ += o.v_; return *this; }
  Float& operator-=(const Float& o) { v_ -= o.v_; return *this; }
  Float& operator*=(const Float& o) { v_ *= o.v_; return *this; }
  friend Float operator+(Float a, const Float& b) { return a += b; }
  friend Float operator-(Float a, const Float& b) { return a -= b; }
  friend Float operator*(Float a, const Float& b) { return a *= b; }
  friend bool operator==(const Float& a, const Float& b) { return a.v_ == b.v_; }

  // Shortest text that reads back to the same double.
  std::string to_string() const;

 private:
  double v_ = 0.0;
};

}  // namespace cga
