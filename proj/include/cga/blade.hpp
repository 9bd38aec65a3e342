#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>

namespace cga {

// Generator indices. e0, e1, e2, e3 use their own number; e∞ is 4.
inline constexpr int kInf = 4;
inline constexpr int kGeneratorCount = 5;
inline constexpr int kBladeCount = 32;

// Canonical null-basis element e[i1,...,ik]: the geometric product of the
// listed generators in ascending order e0 < e1 < e2 < e3 < e∞. Bit i of the
// mask is generator i, so e0 has weight 1 and e∞ weight 16.
class Blade {
 public:
  constexpr Blade() = default;
  constexpr explicit Blade(unsigned mask) : mask_(static_cast<std::uint8_t>(mask & 31u)) {}

  // Strictly increasing indices in 0..4; throws InputError otherwise.
  static Blade from_indices(std::span<const int> indices);
  static Blade from_indices(std::initializer_list<int> indices) {
    return from_indices(std::span<const int>(indices.begin(), indices.size()));
  }
  static constexpr Blade scalar() { return Blade(0); }
  static constexpr Blade generator(int index) { return Blade(1u << index); }

  constexpr unsigned mask() const { return mask_; }
  // Nominal length: number of generators. Not the Clifford grade when the
  // blade holds both e0 and e∞.
  constexpr int popcount() const { return std::popcount(static_cast<unsigned>(mask_)); }
  constexpr bool contains(int index) const { return (mask_ >> index) & 1u; }
  constexpr bool is_scalar() const { return mask_ == 0; }

  // "e[0,1,∞]" (display) or "e[0,1,inf]" (calculator input).
  std::string to_string(bool ascii = false) const;
  // Serialization key: "s" for the scalar, else "e0.e1.einf".
  std::string key() const;
  static Blade from_key(const std::string& key);

  friend constexpr bool operator==(Blade, Blade) = default;

 private:
  std::uint8_t mask_ = 0;
};

// Formatting order: nominal length first, then mask value.
constexpr bool display_before(Blade a, Blade b) {
  if (a.popcount() != b.popcount()) return a.popcount() < b.popcount();
  return a.mask() < b.mask();
}

std::string generator_name(int index, bool ascii = false);

}  // namespace cga
