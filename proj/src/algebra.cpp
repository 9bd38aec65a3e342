#include "cga/algebra.hpp"

#include <cmath>

#include "cga/detail/tables.hpp"

namespace cga {

namespace {

template <Scalar S>
Multivector<S> apply_bilinear(const detail::BilinearTable<S>& table, const Multivector<S>& a,
                              const Multivector<S>& b) {
  typename Multivector<S>::Coeffs acc{};
  const auto& ca = a.coeffs();
  const auto& cb = b.coeffs();
  for (unsigned i = 0; i < kBladeCount; ++i) {
    if (ca[i].is_zero()) continue;
    for (unsigned j = 0; j < kBladeCount; ++j) {
      if (cb[j].is_zero()) continue;
      const auto& image = table[i][j];
      if (image.empty()) continue;
      S ab = ca[i] * cb[j];
      for (const auto& t : image) acc[t.blade] += t.coeff * ab;
    }
  }
  return Multivector<S>(acc);
}

template <Scalar S>
Multivector<S> apply_linear(const detail::LinearTable<S>& table, const Multivector<S>& a) {
  typename Multivector<S>::Coeffs acc{};
  const auto& ca = a.coeffs();
  for (unsigned j = 0; j < kBladeCount; ++j) {
    if (ca[j].is_zero()) continue;
    for (const auto& t : table[j]) acc[t.blade] += t.coeff * ca[j];
  }
  return Multivector<S>(acc);
}

template <Scalar S>
Multivector<S> fold(std::span<const Multivector<S>> factors,
                    Multivector<S> (*op)(const Multivector<S>&, const Multivector<S>&)) {
  if (factors.empty()) throw InputError("product of an empty factor list");
  Multivector<S> acc = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) acc = op(acc, factors[i]);
  return acc;
}

void check_grade(int k) {
  if (k < 0 || k > detail::kMaxGrade)
    throw InputError("grade " + std::to_string(k) + " outside 0..5");
}

// Solves L(a) x = 1 for the left-regular matrix of `a` by Gauss-Jordan
// elimination. Float pivots at or below the clean threshold count as zero.
template <Scalar S>
Multivector<S> solve_inverse(const Multivector<S>& a) {
  const auto& gp = detail::tables<S>().geometric;
  using Row = std::array<S, kBladeCount + 1>;
  std::array<Row, kBladeCount> m{};
  for (unsigned i = 0; i < kBladeCount; ++i) {
    if (a.coeffs()[i].is_zero()) continue;
    for (unsigned j = 0; j < kBladeCount; ++j)
      for (const auto& t : gp[i][j]) m[t.blade][j] += t.coeff * a.coeffs()[i];
  }
  m[0][kBladeCount] = S::from_rational(1);

  for (unsigned col = 0; col < kBladeCount; ++col) {
    unsigned piv = kBladeCount;
    if constexpr (backend_of<S> == Backend::kFloat) {
      double best = 0;
      for (unsigned r = col; r < kBladeCount; ++r) {
        double v = std::fabs(m[r][col].value());
        if (v > best) {
          best = v;
          piv = r;
        }
      }
      if (best <= kFloatCleanEpsilon) piv = kBladeCount;
    } else {
      for (unsigned r = col; r < kBladeCount && piv == kBladeCount; ++r)
        if (!m[r][col].is_zero()) piv = r;
    }
    if (piv == kBladeCount) throw NotInvertible("multivector has no inverse");
    std::swap(m[piv], m[col]);
    S scale = divide_exact(S::from_rational(1), m[col][col]);
    for (auto& v : m[col]) v = v * scale;
    for (unsigned r = 0; r < kBladeCount; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      S f = m[r][col];
      for (unsigned j = col; j <= kBladeCount; ++j) m[r][j] = m[r][j] - f * m[col][j];
    }
  }
  typename Multivector<S>::Coeffs x{};
  for (unsigned i = 0; i < kBladeCount; ++i) x[i] = m[i][kBladeCount];
  return Multivector<S>(x);
}

}  // namespace

template <Scalar S>
Multivector<S> canonicalize(std::span<const int> generators) {
  Multivector<S> acc = Multivector<S>::one();
  for (int g : generators) {
    if (g < 0 || g > kInf) throw InputError("unknown generator index " + std::to_string(g));
    acc = geometric_product(acc, Multivector<S>::generator(g));
  }
  return acc;
}

template <Scalar S>
Multivector<S> geometric_product(const Multivector<S>& a, const Multivector<S>& b) {
  return apply_bilinear(detail::tables<S>().geometric, a, b);
}

template <Scalar S>
Multivector<S> geometric_product(std::span<const Multivector<S>> factors) {
  return fold<S>(factors, &geometric_product<S>);
}

template <Scalar S>
Multivector<S> outer_product(const Multivector<S>& a, const Multivector<S>& b) {
  return apply_bilinear(detail::tables<S>().outer, a, b);
}

template <Scalar S>
Multivector<S> outer_product(std::span<const Multivector<S>> factors) {
  return fold<S>(factors, &outer_product<S>);
}

template <Scalar S>
Multivector<S> left_contraction(const Multivector<S>& a, const Multivector<S>& b) {
  return apply_bilinear(detail::tables<S>().contraction, a, b);
}

template <Scalar S>
Multivector<S> grade(const Multivector<S>& a, int k) {
  check_grade(k);
  return apply_linear(detail::tables<S>().grade[k], a);
}

template <Scalar S>
bool grade_q(const Multivector<S>& a, int k) {
  return grade(a, k) == a;
}

template <Scalar S>
Multivector<S> reversion(const Multivector<S>& a) {
  return apply_linear(detail::tables<S>().reversion, a);
}

template <Scalar S>
Multivector<S> involution(const Multivector<S>& a) {
  return apply_linear(detail::tables<S>().involution, a);
}

template <Scalar S>
S magnitude_squared(const Multivector<S>& a) {
  return geometric_product(a, reversion(a)).scalar_part();
}

double magnitude(const Multivector<Float>& a) {
  double m2 = magnitude_squared(a).value();
  if (m2 < 0) throw InputError("magnitude of a multivector with negative square");
  return std::sqrt(m2);
}

template <Scalar S>
InverseParts<S> inverse_parts(const Multivector<S>& a) {
  if (a.is_zero()) throw NotInvertible("zero has no inverse");
  Multivector<S> rev = reversion(a);
  Multivector<S> norm = geometric_product(a, rev);
  if (norm.is_scalar() && !norm.scalar_part().is_zero()) return {rev, norm.scalar_part()};

  if constexpr (backend_of<S> == Backend::kSymbolic) {
    typename Multivector<Rational>::Coeffs numeric{};
    for (unsigned i = 0; i < kBladeCount; ++i) {
      auto c = a.coeffs()[i].constant_value();
      if (!c)
        throw UnsupportedSymbolicInverse(
            "symbolic multivector is not a versor; only A*rev(A) scalar inverses are supported");
      numeric[i] = *c;
    }
    return {convert<Poly>(solve_inverse(Multivector<Rational>(numeric))), Poly(1)};
  } else {
    Multivector<S> inv = solve_inverse(a);
    if constexpr (backend_of<S> == Backend::kFloat) {
      Multivector<S> left = geometric_product(inv, a);
      Multivector<S> right = geometric_product(a, inv);
      if (max_abs_difference(left, Multivector<S>::one()) > 1e-9 ||
          max_abs_difference(right, Multivector<S>::one()) > 1e-9)
        throw NotInvertible("multivector has no inverse");
    }
    return {inv, S::from_rational(1)};
  }
}

template <Scalar S>
Multivector<S> multivector_inverse(const Multivector<S>& a) {
  auto parts = inverse_parts(a);
  return divide(parts.numerator, parts.denominator);
}

template <Scalar S>
Multivector<S> pseudoscalar() {
  std::array<Multivector<S>, kGeneratorCount> gens;
  for (int g = 0; g < kGeneratorCount; ++g) gens[g] = Multivector<S>::generator(g);
  return outer_product<S>(std::span<const Multivector<S>>(gens));
}

template <Scalar S>
Multivector<S> pseudoscalar_inverse() {
  return -pseudoscalar<S>();
}

template <Scalar S>
Multivector<S> dual(const Multivector<S>& a) {
  static const Multivector<S> inv = pseudoscalar_inverse<S>();
  return left_contraction(a, inv);
}

template <Scalar S>
S vector_inner(const Multivector<S>& a, const Multivector<S>& b) {
  return left_contraction(grade(a, 1), grade(b, 1)).scalar_part();
}

double max_abs_difference(const Multivector<Float>& a, const Multivector<Float>& b) {
  double worst = 0;
  for (unsigned i = 0; i < kBladeCount; ++i)
    worst = std::max(worst, std::fabs(a.coeffs()[i].value() - b.coeffs()[i].value()));
  return worst;
}

#define CGA_INSTANTIATE_ALGEBRA(S)                                                          \
  template Multivector<S> canonicalize<S>(std::span<const int>);                            \
  template Multivector<S> geometric_product<S>(const Multivector<S>&, const Multivector<S>&); \
  template Multivector<S> geometric_product<S>(std::span<const Multivector<S>>);            \
  template Multivector<S> outer_product<S>(const Multivector<S>&, const Multivector<S>&);   \
  template Multivector<S> outer_product<S>(std::span<const Multivector<S>>);                \
  template Multivector<S> left_contraction<S>(const Multivector<S>&, const Multivector<S>&); \
  template Multivector<S> grade<S>(const Multivector<S>&, int);                             \
  template bool grade_q<S>(const Multivector<S>&, int);                                     \
  template Multivector<S> reversion<S>(const Multivector<S>&);                              \
  template Multivector<S> involution<S>(const Multivector<S>&);                             \
  template S magnitude_squared<S>(const Multivector<S>&);                                   \
  template InverseParts<S> inverse_parts<S>(const Multivector<S>&);                         \
  template Multivector<S> multivector_inverse<S>(const Multivector<S>&);                    \
  template Multivector<S> pseudoscalar<S>();                                                \
  template Multivector<S> pseudoscalar_inverse<S>();                                        \
  template Multivector<S> dual<S>(const Multivector<S>&);                                   \
  template S vector_inner<S>(const Multivector<S>&, const Multivector<S>&);

CGA_INSTANTIATE_ALGEBRA(Rational)
CGA_INSTANTIATE_ALGEBRA(Poly)
CGA_INSTANTIATE_ALGEBRA(Float)

}  // namespace cga
