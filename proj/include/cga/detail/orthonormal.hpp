#pragma once

// Change-of-basis engine. Products are computed in the orthonormal basis
// {e+, e1, e2, e3, e-} (e+^2 = 1, e-^2 = -1) where blade products reduce to
// bitmask sign rules, then mapped back to the null basis through
//   e0 = (e- - e+)/2,  e∞ = e- + e+.
// Everything here is exact and feeds the null-basis tables in tables.hpp.

#include <array>
#include <utility>
#include <vector>

#include "cga/blade.hpp"
#include "cga/rational.hpp"

namespace cga::detail {

// Orthonormal bit layout: bit 0 = e+, bits 1..3 = e1..e3, bit 4 = e-.
inline constexpr unsigned kMinusBit = 1u << 4;

using Dense = std::array<Rational, kBladeCount>;
using Matrix = std::array<Dense, kBladeCount>;  // row-major

// Product of two orthonormal basis blades: sign (+1, -1) and result mask.
std::pair<int, unsigned> ortho_blade_product(unsigned a, unsigned b);
Dense ortho_product(const Dense& a, const Dense& b);

// Column j of to_ortho() is null blade j in orthonormal coordinates;
// to_null() is its inverse.
const Matrix& to_ortho();
const Matrix& to_null();

Dense mat_vec(const Matrix& m, const Dense& v);

// Clifford grade of an orthonormal blade is its popcount.
inline int ortho_grade(unsigned mask) { return std::popcount(mask); }

}  // namespace cga::detail
