#include "cga/detail/tables.hpp"

#include "cga/detail/orthonormal.hpp"

namespace cga::detail {

namespace {

Dense ortho_column(unsigned blade) {
  Dense v{};
  for (unsigned i = 0; i < kBladeCount; ++i) v[i] = to_ortho()[i][blade];
  return v;
}

Dense ortho_grade_part(const Dense& v, int k) {
  Dense out{};
  for (unsigned i = 0; i < kBladeCount; ++i)
    if (ortho_grade(i) == k) out[i] = v[i];
  return out;
}

Image<Rational> to_null_image(const Dense& ortho) {
  Dense null = mat_vec(to_null(), ortho);
  Image<Rational> out;
  for (unsigned i = 0; i < kBladeCount; ++i)
    if (!null[i].is_zero()) out.push_back({static_cast<std::uint8_t>(i), null[i]});
  return out;
}

template <class Keep>
Image<Rational> graded_product(unsigned a, unsigned b, Keep keep_grade) {
  Dense fa = ortho_column(a), fb = ortho_column(b);
  Dense acc{};
  for (int r = 0; r <= kMaxGrade; ++r) {
    Dense ar = ortho_grade_part(fa, r);
    for (int s = 0; s <= kMaxGrade; ++s) {
      int target = keep_grade(r, s);
      if (target < 0 || target > kMaxGrade) continue;
      Dense part = ortho_grade_part(ortho_product(ar, ortho_grade_part(fb, s)), target);
      for (unsigned i = 0; i < kBladeCount; ++i) acc[i] += part[i];
    }
  }
  return to_null_image(acc);
}

template <class SignOf>
Image<Rational> graded_sign_map(unsigned blade, SignOf sign_of_grade) {
  Dense f = ortho_column(blade);
  for (unsigned i = 0; i < kBladeCount; ++i)
    if (sign_of_grade(ortho_grade(i)) < 0) f[i] = -f[i];
  return to_null_image(f);
}

Tables<Rational> build() {
  Tables<Rational> t;
  for (unsigned a = 0; a < kBladeCount; ++a) {
    for (unsigned b = 0; b < kBladeCount; ++b) {
      t.geometric[a][b] = to_null_image(ortho_product(ortho_column(a), ortho_column(b)));
      t.outer[a][b] = graded_product(a, b, [](int r, int s) { return r + s; });
      t.contraction[a][b] = graded_product(a, b, [](int r, int s) { return s >= r ? s - r : -1; });
    }
    for (int k = 0; k <= kMaxGrade; ++k)
      t.grade[k][a] = to_null_image(ortho_grade_part(ortho_column(a), k));
    t.reversion[a] = graded_sign_map(a, [](int k) { return (k * (k - 1) / 2) % 2 ? -1 : 1; });
    t.involution[a] = graded_sign_map(a, [](int k) { return k % 2 ? -1 : 1; });
  }
  return t;
}

}  // namespace

const Tables<Rational>& rational_tables() {
  static const Tables<Rational> t = build();
  return t;
}

}  // namespace cga::detail
