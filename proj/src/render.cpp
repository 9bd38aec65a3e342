#include "cga/render.hpp"

#include <nlohmann/json.hpp>

namespace cga {

namespace {

// Per-backend coefficient formatting.
struct Coefficient {
  bool negative = false;  // sign pulled out into the term separator
  bool unit = false;      // magnitude is exactly 1
  bool compound = false;  // multi-term polynomial, needs parentheses
  std::string display;    // magnitude (or full text when compound)
  std::string input;
};

Coefficient describe(const Rational& c) {
  Rational m = c.abs();
  return {c.is_negative(), m.is_one(), false, m.to_string(), m.to_string()};
}

Coefficient describe(const Float& c) {
  Float m(std::fabs(c.value()));
  return {c.is_negative(), m.value() == 1.0, false, m.to_string(), m.to_string()};
}

Coefficient describe(const Poly& c) {
  if (c.term_count() > 1)
    return {false, false, true, c.to_string(PolyStyle::kDisplay, true),
            c.to_string(PolyStyle::kInput, false)};
  const auto& [mono, coeff] = *c.terms().begin();
  Poly mag(mono, coeff.abs());
  bool unit = mono.is_one() && coeff.abs().is_one();
  return {coeff.is_negative(), unit, false, mag.to_string(PolyStyle::kDisplay),
          mag.to_string(PolyStyle::kInput)};
}

void append_term(std::string& out, bool first, bool negative, const std::string& body) {
  if (first)
    out += negative ? "-" + body : body;
  else
    out += (negative ? " - " : " + ") + body;
}

}  // namespace

template <Scalar S>
std::string gfactor_render(const Multivector<S>& a) {
  auto blades = a.support();
  if (blades.empty()) return "0";
  // A lone scalar prints as its polynomial without parentheses.
  if (blades.size() == 1 && blades[0].is_scalar()) {
    if constexpr (backend_of<S> == Backend::kSymbolic)
      return a.scalar_part().to_string(PolyStyle::kDisplay);
  }
  std::string out;
  bool first = true;
  for (Blade b : blades) {
    Coefficient c = describe(a[b]);
    std::string body;
    if (b.is_scalar())
      body = c.compound ? "(" + c.display + ")" : c.display;
    else if (c.compound)
      body = "(" + c.display + ") " + b.to_string();
    else if (c.unit)
      body = b.to_string();
    else
      body = c.display + " " + b.to_string();
    append_term(out, first, c.negative, body);
    first = false;
  }
  return out;
}

template <Scalar S>
std::string render_input(const Multivector<S>& a) {
  auto blades = a.support();
  if (blades.empty()) return "0";
  std::string out;
  bool first = true;
  for (Blade b : blades) {
    Coefficient c = describe(a[b]);
    std::string coeff = c.compound ? "(" + c.input + ")" : c.input;
    std::string body;
    if (b.is_scalar())
      body = coeff;
    else if (c.unit)
      body = b.to_string(true);
    else
      body = coeff + "*" + b.to_string(true);
    append_term(out, first, c.negative, body);
    first = false;
  }
  return out;
}

std::string scalar_text(const Rational& s) { return s.to_string(); }
std::string scalar_text(const Poly& s) { return s.to_string(PolyStyle::kText); }
std::string scalar_text(const Float& s) { return s.to_string(); }

template <>
Rational parse_scalar_text<Rational>(std::string_view text) {
  return Rational::parse(text);
}
template <>
Poly parse_scalar_text<Poly>(std::string_view text) {
  return Poly::parse(text);
}
template <>
Float parse_scalar_text<Float>(std::string_view text) {
  return Float::parse(text);
}

template <Scalar S>
std::string to_json(const Multivector<S>& a) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (Blade b : a.support()) j[b.key()] = scalar_text(a[b]);
  return j.dump();
}

template <Scalar S>
Multivector<S> from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed multivector JSON: ") + e.what());
  }
  if (!j.is_object()) throw InputError("multivector JSON must be an object");
  typename Multivector<S>::Coeffs c{};
  for (const auto& [key, value] : j.items()) {
    if (!value.is_string()) throw InputError("coefficient for '" + key + "' must be a string");
    c[Blade::from_key(key).mask()] = parse_scalar_text<S>(value.template get<std::string>());
  }
  return Multivector<S>(c);
}

#define CGA_INSTANTIATE_RENDER(S)                                      \
  template std::string gfactor_render<S>(const Multivector<S>&);     \
  template std::string render_input<S>(const Multivector<S>&);       \
  template std::string to_json<S>(const Multivector<S>&);            \
  template Multivector<S> from_json<S>(std::string_view);

CGA_INSTANTIATE_RENDER(Rational)
CGA_INSTANTIATE_RENDER(Poly)
CGA_INSTANTIATE_RENDER(Float)

}  // namespace cga
