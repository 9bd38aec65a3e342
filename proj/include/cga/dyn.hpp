#pragma once

#include <span>
#include <string>
#include <variant>

#include "cga/algebra.hpp"
#include "cga/render.hpp"

namespace cga {

// Multivector whose backend is chosen at run time. Operations on values
// from different backends throw BackendMismatch.
using DynMultivector =
    std::variant<Multivector<Rational>, Multivector<Poly>, Multivector<Float>>;

Backend backend_of_value(const DynMultivector& m);

DynMultivector geometric_product(std::span<const DynMultivector> factors);
DynMultivector outer_product(std::span<const DynMultivector> factors);
DynMultivector left_contraction(const DynMultivector& a, const DynMultivector& b);

std::string gfactor_render(const DynMultivector& m);
std::string to_json(const DynMultivector& m);

}  // namespace cga
