#include "cga/dyn.hpp"

#include <vector>

namespace cga {

Backend backend_of_value(const DynMultivector& m) {
  return std::visit([](const auto& v) {
    using M = std::decay_t<decltype(v)>;
    return backend_of<std::decay_t<decltype(M().scalar_part())>>;
  }, m);
}

namespace {

template <class Op>
DynMultivector fold_same_backend(std::span<const DynMultivector> factors, Op op) {
  if (factors.empty()) throw InputError("product of an empty factor list");
  return std::visit(
      [&](const auto& first) -> DynMultivector {
        using M = std::decay_t<decltype(first)>;
        std::vector<M> typed;
        typed.reserve(factors.size());
        for (const auto& f : factors) {
          const M* v = std::get_if<M>(&f);
          if (!v)
            throw BackendMismatch(std::string("cannot combine ") +
                                  std::string(backend_name(backend_of_value(first))) + " and " +
                                  std::string(backend_name(backend_of_value(f))) + " multivectors");
          typed.push_back(*v);
        }
        return op(std::span<const M>(typed));
      },
      factors.front());
}

}  // namespace

DynMultivector geometric_product(std::span<const DynMultivector> factors) {
  return fold_same_backend(factors, [](auto typed) -> DynMultivector { return geometric_product(typed); });
}

DynMultivector outer_product(std::span<const DynMultivector> factors) {
  return fold_same_backend(factors, [](auto typed) -> DynMultivector { return outer_product(typed); });
}

DynMultivector left_contraction(const DynMultivector& a, const DynMultivector& b) {
  const DynMultivector pair[] = {a, b};
  return fold_same_backend(pair, [](auto typed) -> DynMultivector {
    return left_contraction(typed[0], typed[1]);
  });
}

std::string gfactor_render(const DynMultivector& m) {
  return std::visit([](const auto& v) { return gfactor_render(v); }, m);
}

std::string to_json(const DynMultivector& m) {
  return std::visit([](const auto& v) { return to_json(v); }, m);
}

}  // namespace cga
