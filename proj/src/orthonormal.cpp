#include "cga/detail/orthonormal.hpp"

#include <bit>

#include "cga/errors.hpp"

namespace cga::detail {

std::pair<int, unsigned> ortho_blade_product(unsigned a, unsigned b) {
  // Reordering sign: each generator of b passes the higher generators of a.
  int swaps = 0;
  for (unsigned rest = a >> 1; rest; rest >>= 1) swaps += std::popcount(rest & b);
  int sign = (swaps & 1) ? -1 : 1;
  if (a & b & kMinusBit) sign = -sign;
  return {sign, a ^ b};
}

Dense ortho_product(const Dense& a, const Dense& b) {
  Dense out{};
  for (unsigned i = 0; i < kBladeCount; ++i) {
    if (a[i].is_zero()) continue;
    for (unsigned j = 0; j < kBladeCount; ++j) {
      if (b[j].is_zero()) continue;
      auto [sign, m] = ortho_blade_product(i, j);
      Rational t = a[i] * b[j];
      if (sign < 0)
        out[m] -= t;
      else
        out[m] += t;
    }
  }
  return out;
}

Dense mat_vec(const Matrix& m, const Dense& v) {
  Dense out{};
  for (unsigned i = 0; i < kBladeCount; ++i)
    for (unsigned j = 0; j < kBladeCount; ++j)
      if (!m[i][j].is_zero() && !v[j].is_zero()) out[i] += m[i][j] * v[j];
  return out;
}

namespace {

// Null generator in orthonormal coordinates.
Dense null_generator(int index) {
  Dense v{};
  switch (index) {
    case 0:
      v[1] = Rational(-1, 2);
      v[kMinusBit] = Rational(1, 2);
      break;
    case kInf:
      v[1] = 1;
      v[kMinusBit] = 1;
      break;
    default:
      v[1u << index] = 1;
  }
  return v;
}

Matrix build_to_ortho() {
  Matrix m{};
  for (unsigned blade = 0; blade < kBladeCount; ++blade) {
    Dense acc{};
    acc[0] = 1;
    for (int g = 0; g < kGeneratorCount; ++g)
      if (blade & (1u << g)) acc = ortho_product(acc, null_generator(g));
    for (unsigned i = 0; i < kBladeCount; ++i) m[i][blade] = acc[i];
  }
  return m;
}

Matrix invert(Matrix a) {
  Matrix inv{};
  for (unsigned i = 0; i < kBladeCount; ++i) inv[i][i] = 1;
  for (unsigned col = 0; col < kBladeCount; ++col) {
    unsigned piv = col;
    while (piv < kBladeCount && a[piv][col].is_zero()) ++piv;
    if (piv == kBladeCount) throw Error("basis change matrix is singular");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    Rational scale = divide_exact(Rational(1), a[col][col]);
    for (unsigned j = 0; j < kBladeCount; ++j) {
      a[col][j] *= scale;
      inv[col][j] *= scale;
    }
    for (unsigned r = 0; r < kBladeCount; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      Rational f = a[r][col];
      for (unsigned j = 0; j < kBladeCount; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

}  // namespace

const Matrix& to_ortho() {
  static const Matrix m = build_to_ortho();
  return m;
}

const Matrix& to_null() {
  static const Matrix m = invert(to_ortho());
  return m;
}

}  // namespace cga::detail
