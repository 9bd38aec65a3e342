#include "cga/float.hpp"

#include <charconv>
#include <system_error>

namespace cga {

Float Float::parse(std::string_view text) {
  double v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw InputError("malformed float '" + std::string(text) + "'");
  return Float(v);
}

std::string Float::to_string() const {
  char buf[64];
  double v = v_ == 0.0 ? 0.0 : v_;  // no "-0"
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

Float divide_exact(const Float& a, const Float& b) {
  if (b.value() == 0.0) throw NotInvertible("division by zero");
  return Float(a.value() / b.value());
}

}  // namespace cga
