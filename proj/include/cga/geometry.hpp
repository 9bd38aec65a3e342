#pragma once

#include "cga/algebra.hpp"

namespace cga {

// Euclidean coordinates; stands for x e1 + y e2 + z e3.
template <Scalar S>
struct Vector3 {
  S x, y, z;

  Multivector<S> to_multivector() const {
    typename Multivector<S>::Coeffs c{};
    c[Blade::generator(1).mask()] = x;
    c[Blade::generator(2).mask()] = y;
    c[Blade::generator(3).mask()] = z;
    return Multivector<S>(c);
  }
  Vector3 operator-() const { return {-x, -y, -z}; }
  friend Vector3 operator+(const Vector3& a, const Vector3& b) {
    return {a.x + b.x, a.y + b.y, a.z + b.z};
  }
  friend bool operator==(const Vector3&, const Vector3&) = default;
};

// e0 + v + (v^2 / 2) e∞. Null by construction.
template <Scalar S>
Multivector<S> embed_point(const Vector3<S>& v);

// Coefficients of e1, e2, e3.
template <Scalar S>
Vector3<S> to_vector(const Multivector<S>& a);

// Divides by the e0 coefficient; InputError when it is zero.
template <Scalar S>
Multivector<S> normalize_point(const Multivector<S>& a);

// Result of a wedge construction. `degenerate` marks dependent inputs:
// coincident points for a line, collinear for a plane, coplanar for a
// sphere (the blade then carries no quadratic term).
template <Scalar S>
struct Construction {
  Multivector<S> blade;
  bool degenerate = false;
};

// p1 ^ p2 ^ e∞
template <Scalar S>
Construction<S> line_through(const Multivector<S>& p1, const Multivector<S>& p2);
// p1 ^ p2 ^ p3 ^ e∞
template <Scalar S>
Construction<S> plane_through(const Multivector<S>& p1, const Multivector<S>& p2,
                              const Multivector<S>& p3);
// p1 ^ p2 ^ p3 ^ p4
template <Scalar S>
Construction<S> sphere_through(const Multivector<S>& p1, const Multivector<S>& p2,
                               const Multivector<S>& p3, const Multivector<S>& p4);

// center - (r^2 / 2) e∞
template <Scalar S>
Multivector<S> sphere_dual(const Multivector<S>& center, const S& radius);
// n + h e∞, the dual of the plane n . x = h (p ⌋ P* = n . x - h). A zero
// normal is an InputError.
template <Scalar S>
Multivector<S> plane_dual(const Vector3<S>& normal, const S& h);

enum class Parity { kEven, kOdd };

// Invertible multivector applied by sandwich: X -> ±V X V^-1, with the minus
// sign for odd versors. The inverse is held as numerator/denominator so
// that symbolic rotors never need a rational-function coefficient.
template <Scalar S>
class Versor {
 public:
  // Throws NotInvertible (or UnsupportedSymbolicInverse).
  Versor(Multivector<S> value, Parity parity);

  const Multivector<S>& value() const { return value_; }
  Parity parity() const { return parity_; }
  Multivector<S> inverse() const { return divide(inv_numerator_, inv_denominator_); }
  Multivector<S> apply(const Multivector<S>& x) const;

 private:
  Multivector<S> value_;
  Parity parity_;
  Multivector<S> inv_numerator_;
  S inv_denominator_;
};

template <Scalar S>
Multivector<S> sandwich(const Versor<S>& v, const Multivector<S>& x) {
  return v.apply(x);
}

// 1 - (1/2) t e∞
template <Scalar S>
Versor<S> translator(const Vector3<S>& t);
// a b; zero inputs are an InputError.
template <Scalar S>
Versor<S> rotor(const Vector3<S>& a, const Vector3<S>& b);

// R x R^-1 with R = a b (rotates by twice the angle between a and b).
template <Scalar S>
Multivector<S> rotation(const Multivector<S>& x, const Vector3<S>& a, const Vector3<S>& b);
// R = c - Â s with Â = (a^b)/|a^b|, where (c, s) = (cos θ/2, sin θ/2). In
// exact backends |a^b| must be an exact square root and, when c^2 + s^2 is
// a constant, it must equal 1.
template <Scalar S>
Multivector<S> rotation(const Multivector<S>& x, const Vector3<S>& a, const Vector3<S>& b,
                        const S& half_cos, const S& half_sin);
// Raw angle in radians (float backend only).
Multivector<Float> rotation(const Multivector<Float>& x, const Vector3<Float>& a,
                            const Vector3<Float>& b, double angle);

// -S x S^-1 with S = sphere_dual(center, radius); radius 0 is NotInvertible.
template <Scalar S>
Multivector<S> inversor(const Multivector<S>& x, const Multivector<S>& center, const S& radius);

#define CGA_EXTERN_GEOMETRY(S)                                                                 \
  extern template Multivector<S> embed_point<S>(const Vector3<S>&);                           \
  extern template Vector3<S> to_vector<S>(const Multivector<S>&);                             \
  extern template Multivector<S> normalize_point<S>(const Multivector<S>&);                   \
  extern template Construction<S> line_through<S>(const Multivector<S>&, const Multivector<S>&); \
  extern template Construction<S> plane_through<S>(const Multivector<S>&, const Multivector<S>&, \
                                                   const Multivector<S>&);                    \
  extern template Construction<S> sphere_through<S>(                                          \
      const Multivector<S>&, const Multivector<S>&, const Multivector<S>&, const Multivector<S>&); \
  extern template Multivector<S> sphere_dual<S>(const Multivector<S>&, const S&);             \
  extern template Multivector<S> plane_dual<S>(const Vector3<S>&, const S&);                  \
  extern template class Versor<S>;                                                            \
  extern template Versor<S> translator<S>(const Vector3<S>&);                                 \
  extern template Versor<S> rotor<S>(const Vector3<S>&, const Vector3<S>&);                   \
  extern template Multivector<S> rotation<S>(const Multivector<S>&, const Vector3<S>&,        \
                                             const Vector3<S>&);                              \
  extern template Multivector<S> rotation<S>(const Multivector<S>&, const Vector3<S>&,        \
                                             const Vector3<S>&, const S&, const S&);          \
  extern template Multivector<S> inversor<S>(const Multivector<S>&, const Multivector<S>&,    \
                                             const S&);

CGA_EXTERN_GEOMETRY(Rational)
CGA_EXTERN_GEOMETRY(Poly)
CGA_EXTERN_GEOMETRY(Float)
#undef CGA_EXTERN_GEOMETRY

}  // namespace cga
