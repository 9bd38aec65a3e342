#include "cga/geometry.hpp"

#include <cmath>

namespace cga {

namespace {

template <Scalar S>
Multivector<S> einf() {
  return Multivector<S>::generator(kInf);
}

template <Scalar S>
S half() {
  return S::from_rational(Rational(1, 2));
}

bool is_zero_vector(const auto& v) { return v.x.is_zero() && v.y.is_zero() && v.z.is_zero(); }

Rational exact_root(const Rational& v) {
  Rational r;
  if (!v.exact_sqrt(r)) throw InputError("rotation plane norm " + v.to_string() + " is not a rational square");
  return r;
}

Poly exact_root(const Poly& v) {
  if (!v.is_monomial()) throw InputError("rotation plane norm is not an exact square");
  const auto& [mono, coeff] = *v.terms().begin();
  std::vector<Monomial::Factor> halved;
  for (const auto& [id, e] : mono.factors()) {
    if (e % 2) throw InputError("rotation plane norm is not an exact square");
    halved.emplace_back(id, e / 2);
  }
  return Poly(Monomial(std::move(halved)), exact_root(coeff));
}

Float exact_root(const Float& v) {
  if (v.value() < 0) throw InputError("negative rotation plane norm");
  return Float(std::sqrt(v.value()));
}

}  // namespace

template <Scalar S>
Multivector<S> embed_point(const Vector3<S>& v) {
  S sq = v.x * v.x + v.y * v.y + v.z * v.z;
  typename Multivector<S>::Coeffs c{};
  c[Blade::generator(0).mask()] = S::from_rational(1);
  c[Blade::generator(1).mask()] = v.x;
  c[Blade::generator(2).mask()] = v.y;
  c[Blade::generator(3).mask()] = v.z;
  c[Blade::generator(kInf).mask()] = half<S>() * sq;
  return Multivector<S>(c);
}

template <Scalar S>
Vector3<S> to_vector(const Multivector<S>& a) {
  return {a[Blade::generator(1)], a[Blade::generator(2)], a[Blade::generator(3)]};
}

template <Scalar S>
Multivector<S> normalize_point(const Multivector<S>& a) {
  const S& w = a[Blade::generator(0)];
  if (w.is_zero()) throw InputError("point has no e0 component to normalize");
  return divide(a, w);
}

template <Scalar S>
Construction<S> line_through(const Multivector<S>& p1, const Multivector<S>& p2) {
  auto blade = outer_product(outer_product(p1, p2), einf<S>());
  bool degenerate = blade.is_zero();
  return {std::move(blade), degenerate};
}

template <Scalar S>
Construction<S> plane_through(const Multivector<S>& p1, const Multivector<S>& p2,
                              const Multivector<S>& p3) {
  auto blade = outer_product(outer_product(outer_product(p1, p2), p3), einf<S>());
  bool degenerate = blade.is_zero();
  return {std::move(blade), degenerate};
}

template <Scalar S>
Construction<S> sphere_through(const Multivector<S>& p1, const Multivector<S>& p2,
                               const Multivector<S>& p3, const Multivector<S>& p4) {
  auto blade = outer_product(outer_product(outer_product(p1, p2), p3), p4);
  // The x^2 coefficient of p ^ S is half of e∞ ^ S.
  bool degenerate = outer_product(einf<S>(), blade).is_zero();
  return {std::move(blade), degenerate};
}

template <Scalar S>
Multivector<S> sphere_dual(const Multivector<S>& center, const S& radius) {
  return center - (half<S>() * radius * radius) * einf<S>();
}

template <Scalar S>
Multivector<S> plane_dual(const Vector3<S>& normal, const S& h) {
  if (is_zero_vector(normal)) throw InputError("plane normal must be nonzero");
  return normal.to_multivector() + h * einf<S>();
}

template <Scalar S>
Versor<S>::Versor(Multivector<S> value, Parity parity)
    : value_(std::move(value)), parity_(parity) {
  auto parts = inverse_parts(value_);
  inv_numerator_ = std::move(parts.numerator);
  inv_denominator_ = std::move(parts.denominator);
}

template <Scalar S>
Multivector<S> Versor<S>::apply(const Multivector<S>& x) const {
  auto raw = geometric_product(geometric_product(value_, x), inv_numerator_);
  auto out = divide(raw, inv_denominator_);
  return parity_ == Parity::kOdd ? -out : out;
}

template <Scalar S>
Versor<S> translator(const Vector3<S>& t) {
  auto v = Multivector<S>::one() - half<S>() * geometric_product(t.to_multivector(), einf<S>());
  return Versor<S>(std::move(v), Parity::kEven);
}

template <Scalar S>
Versor<S> rotor(const Vector3<S>& a, const Vector3<S>& b) {
  if (is_zero_vector(a) || is_zero_vector(b)) throw InputError("rotor needs nonzero vectors");
  return Versor<S>(geometric_product(a.to_multivector(), b.to_multivector()), Parity::kEven);
}

template <Scalar S>
Multivector<S> rotation(const Multivector<S>& x, const Vector3<S>& a, const Vector3<S>& b) {
  return sandwich(rotor(a, b), x);
}

template <Scalar S>
Multivector<S> rotation(const Multivector<S>& x, const Vector3<S>& a, const Vector3<S>& b,
                        const S& half_cos, const S& half_sin) {
  auto plane = outer_product(a.to_multivector(), b.to_multivector());
  if (plane.is_zero()) throw InputError("rotation plane is degenerate (a and b are parallel)");
  if constexpr (is_exact_backend<S>) {
    S unit = half_cos * half_cos + half_sin * half_sin - S::from_rational(1);
    bool constant = true;
    if constexpr (backend_of<S> == Backend::kSymbolic) constant = unit.is_constant();
    if (constant && !unit.is_zero())
      throw InputError("rotation half-angle pair must satisfy c^2 + s^2 = 1");
  }
  S norm = exact_root(magnitude_squared(plane));
  auto r = Multivector<S>(half_cos) - divide(half_sin * plane, norm);
  return sandwich(Versor<S>(std::move(r), Parity::kEven), x);
}

Multivector<Float> rotation(const Multivector<Float>& x, const Vector3<Float>& a,
                            const Vector3<Float>& b, double angle) {
  return rotation(x, a, b, Float(std::cos(angle / 2)), Float(std::sin(angle / 2)));
}

template <Scalar S>
Multivector<S> inversor(const Multivector<S>& x, const Multivector<S>& center, const S& radius) {
  if (radius.is_zero()) throw NotInvertible("inversion sphere of radius zero");
  return sandwich(Versor<S>(sphere_dual(center, radius), Parity::kOdd), x);
}

#define CGA_INSTANTIATE_GEOMETRY(S)                                                            \
  template Multivector<S> embed_point<S>(const Vector3<S>&);                                  \
  template Vector3<S> to_vector<S>(const Multivector<S>&);                                    \
  template Multivector<S> normalize_point<S>(const Multivector<S>&);                          \
  template Construction<S> line_through<S>(const Multivector<S>&, const Multivector<S>&);     \
  template Construction<S> plane_through<S>(const Multivector<S>&, const Multivector<S>&,     \
                                            const Multivector<S>&);                           \
  template Construction<S> sphere_through<S>(const Multivector<S>&, const Multivector<S>&,    \
                                             const Multivector<S>&, const Multivector<S>&);   \
  template Multivector<S> sphere_dual<S>(const Multivector<S>&, const S&);                    \
  template Multivector<S> plane_dual<S>(const Vector3<S>&, const S&);                         \
  template class Versor<S>;                                                                   \
  template Versor<S> translator<S>(const Vector3<S>&);                                        \
  template Versor<S> rotor<S>(const Vector3<S>&, const Vector3<S>&);                          \
  template Multivector<S> rotation<S>(const Multivector<S>&, const Vector3<S>&,               \
                                      const Vector3<S>&);                                     \
  template Multivector<S> rotation<S>(const Multivector<S>&, const Vector3<S>&,               \
                                      const Vector3<S>&, const S&, const S&);                 \
  template Multivector<S> inversor<S>(const Multivector<S>&, const Multivector<S>&, const S&);

CGA_INSTANTIATE_GEOMETRY(Rational)
CGA_INSTANTIATE_GEOMETRY(Poly)
CGA_INSTANTIATE_GEOMETRY(Float)

}  // namespace cga
