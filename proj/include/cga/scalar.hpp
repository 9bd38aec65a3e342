#pragma once

#include <concepts>
#include <string_view>

#include "cga/float.hpp"
#include "cga/poly.hpp"
#include "cga/rational.hpp"

namespace cga {

enum class Backend { kExact, kSymbolic, kFloat };

std::string_view backend_name(Backend b);
// Accepts "exact", "symbolic", "float".
Backend parse_backend(std::string_view name);

// Coefficient ring contract shared by the three backends.
template <class S>
concept Scalar = std::regular<S> && requires(const S& a, const S& b, const Rational& r) {
  { a + b } -> std::convertible_to<S>;
  { a - b } -> std::convertible_to<S>;
  { a * b } -> std::convertible_to<S>;
  { -a } -> std::convertible_to<S>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { S::from_rational(r) } -> std::same_as<S>;
  { divide_exact(a, b) } -> std::same_as<S>;
};

template <class S>
struct BackendOf;
template <>
struct BackendOf<Rational> {
  static constexpr Backend value = Backend::kExact;
};
template <>
struct BackendOf<Poly> {
  static constexpr Backend value = Backend::kSymbolic;
};
template <>
struct BackendOf<Float> {
  static constexpr Backend value = Backend::kFloat;
};

template <class S>
inline constexpr Backend backend_of = BackendOf<S>::value;

template <class S>
inline constexpr bool is_exact_backend = backend_of<S> != Backend::kFloat;

}  // namespace cga
