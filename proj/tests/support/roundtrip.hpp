#pragma once

// render -> parse -> evaluate identity over random multivectors.

#include <cstdint>
#include <optional>
#include <string>

#include "cga/expr/session.hpp"
#include "cga/render.hpp"
#include "support/properties.hpp"

namespace cga::testing {

inline Multivector<Poly> random_symbolic_multivector(RandomSource& rnd) {
  Multivector<Poly>::Coeffs c{};
  for (auto& v : c)
    if (rnd.coin(0.4)) v = rnd.coin(0.3) ? Poly(rnd.rational()) : rnd.poly(3);
  if (rnd.coin(0.1)) c[rnd.integer(0, kBladeCount - 1)] = divide_exact(rnd.poly(2) + Poly(1), Poly::symbol("pb"));
  return Multivector<Poly>(c);
}

template <Scalar S>
SuiteResult roundtrip_suite(int n, std::uint64_t seed) {
  RandomSource rnd(seed);
  expr::Session session(backend_of<S>);
  SuiteResult r;
  for (int i = 0; i < n && r.ok(); ++i) {
    Multivector<S> m;
    if constexpr (std::is_same_v<S, Poly>)
      m = random_symbolic_multivector(rnd);
    else
      m = rnd.multivector(rnd.coin() ? 0.2 : 0.6);
    ++r.cases;
    std::string text = render_input(m);
    try {
      auto ev = session.evaluate(text);
      const auto* back = std::get_if<Multivector<S>>(&ev.value);
      if (!back || !(*back == m)) r.counterexample = "'" + text + "' evaluated to " + ev.text;
    } catch (const std::exception& e) {
      r.counterexample = "'" + text + "': " + e.what();
    }
  }
  return r;
}

}  // namespace cga::testing
