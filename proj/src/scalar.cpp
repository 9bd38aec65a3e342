#include "cga/scalar.hpp"

#include <string>

#include "cga/errors.hpp"

namespace cga {

std::string_view backend_name(Backend b) {
  switch (b) {
    case Backend::kExact: return "exact";
    case Backend::kSymbolic: return "symbolic";
    case Backend::kFloat: return "float";
  }
  return "?";
}

Backend parse_backend(std::string_view name) {
  if (name == "exact") return Backend::kExact;
  if (name == "symbolic") return Backend::kSymbolic;
  if (name == "float") return Backend::kFloat;
  throw InputError("unknown backend '" + std::string(name) + "' (expected exact, symbolic or float)");
}

}  // namespace cga
