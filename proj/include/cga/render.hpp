#pragma once

#include <string>
#include <string_view>

#include "cga/multivector.hpp"

namespace cga {

// Display form: terms ordered by nominal blade length then mask, scalar
// first, unit coefficients suppressed, non-monomial polynomial coefficients
// parenthesized. "-2 - e[0,∞]", "3a - 12a e[1,3] + 3a^2 e[1,∞]".
template <Scalar S>
std::string gfactor_render(const Multivector<S>& a);

// Same ordering with explicit operators, readable by the calculator:
// "3*a - 12*a*e[1,3] + 3*a*a*e[1,inf]".
template <Scalar S>
std::string render_input(const Multivector<S>& a);

// Serialization: {"s": "3", "e1.einf": "-1/2*t1"}.
template <Scalar S>
std::string to_json(const Multivector<S>& a);
template <Scalar S>
Multivector<S> from_json(std::string_view text);

// Coefficient text used by the serialization: "p/q", polynomial text form,
// or shortest round-trip float.
std::string scalar_text(const Rational& s);
std::string scalar_text(const Poly& s);
std::string scalar_text(const Float& s);

template <Scalar S>
S parse_scalar_text(std::string_view text);

}  // namespace cga
