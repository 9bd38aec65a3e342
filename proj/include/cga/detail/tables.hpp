#pragma once

// Null-basis structure constants, generated once from the orthonormal
// engine and then converted per backend.

#include <array>
#include <cstdint>
#include <vector>

#include "cga/blade.hpp"
#include "cga/scalar.hpp"

namespace cga::detail {

inline constexpr int kMaxGrade = 5;

template <class S>
struct Term {
  std::uint8_t blade;
  S coeff;
};

template <class S>
using Image = std::vector<Term<S>>;

template <class S>
using BilinearTable = std::array<std::array<Image<S>, kBladeCount>, kBladeCount>;

template <class S>
using LinearTable = std::array<Image<S>, kBladeCount>;

template <class S>
struct Tables {
  BilinearTable<S> geometric;
  BilinearTable<S> outer;
  BilinearTable<S> contraction;
  std::array<LinearTable<S>, kMaxGrade + 1> grade;
  LinearTable<S> reversion;
  LinearTable<S> involution;
};

const Tables<Rational>& rational_tables();

template <Scalar S>
Tables<S> convert_tables(const Tables<Rational>& src) {
  auto conv_image = [](const Image<Rational>& in) {
    Image<S> out;
    out.reserve(in.size());
    for (const auto& t : in) out.push_back({t.blade, S::from_rational(t.coeff)});
    return out;
  };
  Tables<S> out;
  for (unsigned a = 0; a < kBladeCount; ++a) {
    for (unsigned b = 0; b < kBladeCount; ++b) {
      out.geometric[a][b] = conv_image(src.geometric[a][b]);
      out.outer[a][b] = conv_image(src.outer[a][b]);
      out.contraction[a][b] = conv_image(src.contraction[a][b]);
    }
    for (int k = 0; k <= kMaxGrade; ++k) out.grade[k][a] = conv_image(src.grade[k][a]);
    out.reversion[a] = conv_image(src.reversion[a]);
    out.involution[a] = conv_image(src.involution[a]);
  }
  return out;
}

template <Scalar S>
const Tables<S>& tables() {
  if constexpr (std::is_same_v<S, Rational>) {
    return rational_tables();
  } else {
    static const Tables<S> t = convert_tables<S>(rational_tables());
    return t;
  }
}

}  // namespace cga::detail
