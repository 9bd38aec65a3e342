#pragma once

#include <span>
#include <utility>

#include "cga/multivector.hpp"

namespace cga {

// Geometric product of the listed generators (0..3, kInf), reduced to
// canonical null-basis form. The empty sequence is 1.
template <Scalar S>
Multivector<S> canonicalize(std::span<const int> generators);

template <Scalar S>
Multivector<S> geometric_product(const Multivector<S>& a, const Multivector<S>& b);
// Left fold; throws InputError on an empty list.
template <Scalar S>
Multivector<S> geometric_product(std::span<const Multivector<S>> factors);

template <Scalar S>
Multivector<S> outer_product(const Multivector<S>& a, const Multivector<S>& b);
template <Scalar S>
Multivector<S> outer_product(std::span<const Multivector<S>> factors);

template <Scalar S>
Multivector<S> left_contraction(const Multivector<S>& a, const Multivector<S>& b);

// Clifford grade-k part (not the nominal blade length). k in 0..5.
template <Scalar S>
Multivector<S> grade(const Multivector<S>& a, int k);
template <Scalar S>
bool grade_q(const Multivector<S>& a, int k);

template <Scalar S>
Multivector<S> reversion(const Multivector<S>& a);
template <Scalar S>
Multivector<S> involution(const Multivector<S>& a);

// Scalar part of A * reversion(A).
template <Scalar S>
S magnitude_squared(const Multivector<S>& a);
// Float only: sqrt(magnitude_squared); negative squares are an InputError.
double magnitude(const Multivector<Float>& a);

// A^-1 = numerator / denominator. For versors (A * rev(A) a nonzero scalar
// s) this is (rev(A), s) in every backend; otherwise the left-regular
// system is solved (exact and float backends) and the denominator is 1.
template <Scalar S>
struct InverseParts {
  Multivector<S> numerator;
  S denominator;
};

template <Scalar S>
InverseParts<S> inverse_parts(const Multivector<S>& a);
template <Scalar S>
Multivector<S> multivector_inverse(const Multivector<S>& a);

// I5 = e0^e1^e2^e3^e∞ and its inverse -I5.
template <Scalar S>
Multivector<S> pseudoscalar();
template <Scalar S>
Multivector<S> pseudoscalar_inverse();

// A ⌋ I5^-1.
template <Scalar S>
Multivector<S> dual(const Multivector<S>& a);

// Symmetric (4,1) inner product of the vector parts of a and b.
template <Scalar S>
S vector_inner(const Multivector<S>& a, const Multivector<S>& b);

#define CGA_EXTERN_ALGEBRA(S)                                                              \
  extern template Multivector<S> canonicalize<S>(std::span<const int>);                   \
  extern template Multivector<S> geometric_product<S>(const Multivector<S>&,              \
                                                      const Multivector<S>&);             \
  extern template Multivector<S> geometric_product<S>(std::span<const Multivector<S>>);   \
  extern template Multivector<S> outer_product<S>(const Multivector<S>&,                  \
                                                  const Multivector<S>&);                 \
  extern template Multivector<S> outer_product<S>(std::span<const Multivector<S>>);       \
  extern template Multivector<S> left_contraction<S>(const Multivector<S>&,               \
                                                     const Multivector<S>&);              \
  extern template Multivector<S> grade<S>(const Multivector<S>&, int);                    \
  extern template bool grade_q<S>(const Multivector<S>&, int);                            \
  extern template Multivector<S> reversion<S>(const Multivector<S>&);                     \
  extern template Multivector<S> involution<S>(const Multivector<S>&);                    \
  extern template S magnitude_squared<S>(const Multivector<S>&);                          \
  extern template InverseParts<S> inverse_parts<S>(const Multivector<S>&);                \
  extern template Multivector<S> multivector_inverse<S>(const Multivector<S>&);           \
  extern template Multivector<S> pseudoscalar<S>();                                       \
  extern template Multivector<S> pseudoscalar_inverse<S>();                               \
  extern template Multivector<S> dual<S>(const Multivector<S>&);                          \
  extern template S vector_inner<S>(const Multivector<S>&, const Multivector<S>&);

CGA_EXTERN_ALGEBRA(Rational)
CGA_EXTERN_ALGEBRA(Poly)
CGA_EXTERN_ALGEBRA(Float)
#undef CGA_EXTERN_ALGEBRA

}  // namespace cga
