#include "cga/blade.hpp"

#include "cga/errors.hpp"

namespace cga {

std::string generator_name(int index, bool ascii) {
  if (index == kInf) return ascii ? "inf" : "∞";
  return std::to_string(index);
}

Blade Blade::from_indices(std::span<const int> indices) {
  unsigned mask = 0;
  int prev = -1;
  for (int i : indices) {
    if (i < 0 || i > kInf) throw InputError("unknown generator index " + std::to_string(i));
    if (i <= prev) throw InputError("blade indices must be strictly increasing");
    mask |= 1u << i;
    prev = i;
  }
  return Blade(mask);
}

std::string Blade::to_string(bool ascii) const {
  std::string out = "e[";
  bool first = true;
  for (int i = 0; i < kGeneratorCount; ++i) {
    if (!contains(i)) continue;
    if (!first) out += ',';
    out += generator_name(i, ascii);
    first = false;
  }
  return out + "]";
}

std::string Blade::key() const {
  if (is_scalar()) return "s";
  std::string out;
  for (int i = 0; i < kGeneratorCount; ++i) {
    if (!contains(i)) continue;
    if (!out.empty()) out += '.';
    out += i == kInf ? "einf" : "e" + std::to_string(i);
  }
  return out;
}

Blade Blade::from_key(const std::string& key) {
  if (key == "s") return scalar();
  unsigned mask = 0;
  int prev = -1;
  std::size_t pos = 0;
  while (pos <= key.size()) {
    std::size_t dot = key.find('.', pos);
    std::string part = key.substr(pos, dot == std::string::npos ? std::string::npos : dot - pos);
    int idx;
    if (part == "einf")
      idx = kInf;
    else if (part.size() == 2 && part[0] == 'e' && part[1] >= '0' && part[1] <= '3')
      idx = part[1] - '0';
    else
      throw InputError("bad blade key '" + key + "'");
    if (idx <= prev) throw InputError("bad blade key order '" + key + "'");
    mask |= 1u << idx;
    prev = idx;
    if (dot == std::string::npos) break;
    pos = dot + 1;
  }
  return Blade(mask);
}

}  // namespace cga
