#include "cga/expr/evaluator.hpp"

#include <cmath>

#include "cga/expr/session.hpp"
#include "cga/geometry.hpp"

namespace cga::expr {

namespace {

// Exact value of a numeric literal: integers, p/q, decimals and
// scientific notation.
Rational exact_literal(const std::string& text) {
  auto e = text.find_first_of("eE");
  if (e == std::string::npos) return Rational::parse(text);
  Rational mantissa = Rational::parse(text.substr(0, e));
  long exponent = std::stol(text.substr(e + 1));
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
  Rational factor(mpq_class(scale, 1));
  return exponent >= 0 ? mantissa * factor : divide_exact(mantissa, factor);
}

template <Scalar S>
class Evaluator {
  using MV = Multivector<S>;

 public:
  Evaluator(const Environment& env, std::vector<std::string>& warnings)
      : env_(env), warnings_(warnings) {}

  EvalValue run(const Expr& e) {
    auto v = eval_value(e);
    return {DynMultivector(std::move(v.mv)), std::move(v.text)};
  }

 private:
  struct Value {
    MV mv;
    std::optional<std::string> text;
  };

  static constexpr std::string_view backend() { return backend_name(backend_of<S>); }

  MV eval(const Expr& e) { return eval_value(e).mv; }

  Value eval_value(const Expr& e) {
    switch (e.kind) {
      case ExprKind::kNumber: return {MV(number(e.text)), {}};
      case ExprKind::kSymbol: return {lookup(e.text), {}};
      case ExprKind::kBasis: return {canonicalize<S>(e.indices), {}};
      case ExprKind::kNegate: return {-eval(*e.children[0]), {}};
      case ExprKind::kBinary: return {binary(e), {}};
      case ExprKind::kCall: return call(e);
      case ExprKind::kAssign:
        throw EvalError("assignment to '" + e.text + "' is only allowed as a whole statement");
    }
    throw EvalError("unknown expression");
  }

  static S number(const std::string& text) {
    if constexpr (backend_of<S> == Backend::kFloat) {
      if (text.find('/') != std::string::npos) return Float::from_rational(Rational::parse(text));
      return Float::parse(text);
    } else {
      return S::from_rational(exact_literal(text));
    }
  }

  MV lookup(const std::string& name) {
    if (auto it = env_.find(name); it != env_.end()) {
      if (const MV* v = std::get_if<MV>(&it->second)) return *v;
      throw BackendMismatch("variable '" + name + "' holds a " +
                            std::string(backend_name(backend_of_value(it->second))) +
                            " value but the session backend is " + std::string(backend()));
    }
    if (name == "I5") return pseudoscalar<S>();
    if (name == "I5i") return pseudoscalar_inverse<S>();
    if constexpr (backend_of<S> == Backend::kSymbolic) {
      return MV(Poly::symbol(name));
    } else {
      throw EvalError("free symbol '" + name + "' is not allowed in the " + std::string(backend()) +
                      " backend (use ':backend symbolic')");
    }
  }

  MV binary(const Expr& e) {
    MV a = eval(*e.children[0]);
    MV b = eval(*e.children[1]);
    switch (e.op) {
      case '+': return a + b;
      case '-': return a - b;
      case '*': return geometric_product(a, b);
      case '^': return outer_product(a, b);
      case '|': return left_contraction(a, b);
      case '/':
        if (!b.is_scalar()) throw EvalError("'/' divides by scalars only");
        return divide(a, b.scalar_part());
    }
    throw EvalError(std::string("unknown operator '") + e.op + "'");
  }

  // ---------------------------------------------------------- arguments

  static void arity(const Expr& call, std::size_t lo, std::size_t hi) {
    std::size_t n = call.children.size();
    if (n >= lo && n <= hi) return;
    std::string expected = lo == hi ? std::to_string(lo)
                           : hi == SIZE_MAX ? "at least " + std::to_string(lo)
                                            : std::to_string(lo) + " to " + std::to_string(hi);
    throw EvalError(call.text + ": expected " + expected + " argument" + (hi == 1 ? "" : "s") +
                    ", got " + std::to_string(n));
  }

  std::vector<MV> args(const Expr& call) {
    std::vector<MV> out;
    for (const auto& c : call.children) out.push_back(eval(*c));
    return out;
  }

  S scalar_arg(const Expr& call, std::size_t i) {
    MV v = eval(*call.children[i]);
    if (!v.is_scalar())
      throw EvalError(call.text + ": argument " + std::to_string(i + 1) + " must be a scalar");
    return v.scalar_part();
  }

  int int_arg(const Expr& call, std::size_t i) {
    S s = scalar_arg(call, i);
    std::optional<long> v;
    if constexpr (backend_of<S> == Backend::kExact) {
      if (s.is_integer()) v = s.numerator().get_si();
    } else if constexpr (backend_of<S> == Backend::kSymbolic) {
      if (auto c = s.constant_value(); c && c->is_integer()) v = c->numerator().get_si();
    } else {
      if (std::floor(s.value()) == s.value()) v = static_cast<long>(s.value());
    }
    if (!v) throw EvalError(call.text + ": argument " + std::to_string(i + 1) + " must be an integer");
    return static_cast<int>(*v);
  }

  Vector3<S> vector_arg(const Expr& call, std::size_t i) {
    MV v = eval(*call.children[i]);
    for (Blade b : v.support())
      if (b.popcount() != 1 || b.contains(0) || b.contains(kInf))
        throw EvalError(call.text + ": argument " + std::to_string(i + 1) +
                        " must be a Euclidean vector x*e[1] + y*e[2] + z*e[3]");
    return to_vector(v);
  }

  void flag(const Construction<S>& c, const std::string& what) {
    if (c.degenerate) warnings_.push_back(what);
  }

  std::string scalar_display(const S& s) { return gfactor_render(MV(s)); }

  // ---------------------------------------------------------- functions

  Value call(const Expr& c) {
    const std::string& f = c.text;
    if (f == "gp" || f == "op") {
      arity(c, 1, SIZE_MAX);
      auto a = args(c);
      return {f == "gp" ? geometric_product<S>(a) : outer_product<S>(a), {}};
    }
    if (f == "lc") {
      arity(c, 2, 2);
      auto a = args(c);
      return {left_contraction(a[0], a[1]), {}};
    }
    if (f == "grade" || f == "gradeq") {
      arity(c, 2, 2);
      MV a = eval(*c.children[0]);
      int k = int_arg(c, 1);
      if (f == "grade") return {grade(a, k), {}};
      bool q = grade_q(a, k);
      return {MV(S::from_rational(q ? 1 : 0)), q ? "True" : "False"};
    }
    if (f == "rev" || f == "inv" || f == "gradeinv" || f == "dual" || f == "mag2" ||
        f == "mag" || f == "tovector" || f == "normalize") {
      arity(c, 1, 1);
      MV a = eval(*c.children[0]);
      if (f == "rev") return {reversion(a), {}};
      if (f == "inv") return {multivector_inverse(a), {}};
      if (f == "gradeinv") return {involution(a), {}};
      if (f == "dual") return {dual(a), {}};
      if (f == "mag2") return {MV(magnitude_squared(a)), {}};
      if (f == "normalize") return {normalize_point(a), {}};
      if (f == "mag") {
        if constexpr (backend_of<S> == Backend::kFloat)
          return {MV(Float(magnitude(a))), {}};
        else
          throw EvalError("mag needs the float backend; use mag2 for the exact square");
      }
      Vector3<S> v = to_vector(a);
      return {v.to_multivector(),
              "{" + scalar_display(v.x) + ", " + scalar_display(v.y) + ", " + scalar_display(v.z) + "}"};
    }
    if (f == "point") {
      arity(c, 3, 3);
      return {embed_point(Vector3<S>{scalar_arg(c, 0), scalar_arg(c, 1), scalar_arg(c, 2)}), {}};
    }
    if (f == "line") {
      arity(c, 2, 2);
      auto a = args(c);
      auto r = line_through(a[0], a[1]);
      flag(r, "line: coincident points give a degenerate (zero) line");
      return {r.blade, {}};
    }
    if (f == "plane") {
      arity(c, 3, 3);
      auto a = args(c);
      auto r = plane_through(a[0], a[1], a[2]);
      flag(r, "plane: collinear points give a degenerate (zero) plane");
      return {r.blade, {}};
    }
    if (f == "sphere") {
      arity(c, 4, 4);
      auto a = args(c);
      auto r = sphere_through(a[0], a[1], a[2], a[3]);
      flag(r, "sphere: coplanar points give a degenerate sphere");
      return {r.blade, {}};
    }
    if (f == "spheredual") {
      arity(c, 2, 2);
      return {sphere_dual(eval(*c.children[0]), scalar_arg(c, 1)), {}};
    }
    if (f == "planedual") {
      arity(c, 4, 4);
      Vector3<S> n{scalar_arg(c, 0), scalar_arg(c, 1), scalar_arg(c, 2)};
      return {plane_dual(n, scalar_arg(c, 3)), {}};
    }
    if (f == "translator") {
      arity(c, 3, 3);
      return {translator(Vector3<S>{scalar_arg(c, 0), scalar_arg(c, 1), scalar_arg(c, 2)}).value(), {}};
    }
    if (f == "rotor") {
      arity(c, 2, 2);
      return {rotor(vector_arg(c, 0), vector_arg(c, 1)).value(), {}};
    }
    if (f == "rotate") {
      arity(c, 3, 5);
      MV x = eval(*c.children[0]);
      Vector3<S> a = vector_arg(c, 1), b = vector_arg(c, 2);
      if (c.children.size() == 3) return {rotation(x, a, b), {}};
      if (c.children.size() == 5) return {rotation(x, a, b, scalar_arg(c, 3), scalar_arg(c, 4)), {}};
      if constexpr (backend_of<S> == Backend::kFloat) {
        return {rotation(x, a, b, scalar_arg(c, 3).value()), {}};
      } else {
        throw EvalError("rotate: a raw angle needs the float backend; in the " +
                        std::string(backend()) + " backend pass cos(θ/2), sin(θ/2)");
      }
    }
    if (f == "inversor") {
      arity(c, 3, 3);
      MV x = eval(*c.children[0]);
      MV p = eval(*c.children[1]);
      return {inversor(x, p, scalar_arg(c, 2)), {}};
    }
    if (f == "coeff") {
      arity(c, 2, 2);
      MV a = eval(*c.children[0]);
      MV b = eval(*c.children[1]);
      auto support = b.support();
      if (support.size() != 1 || !(b[support[0]] == S::from_rational(1)))
        throw EvalError("coeff: second argument must be a single basis element e[...]");
      return {MV(a[support[0]]), {}};
    }
    if (f == "subst") return subst(c);
    throw EvalError("unknown function '" + f + "'");
  }

  Value subst(const Expr& c) {
    arity(c, 1, SIZE_MAX);
    if constexpr (backend_of<S> != Backend::kSymbolic) {
      throw EvalError("subst needs the symbolic backend");
    } else {
      MV a = eval(*c.children[0]);
      std::map<SymbolId, Poly> bindings;
      for (std::size_t i = 1; i < c.children.size(); ++i) {
        const Expr& b = *c.children[i];
        if (b.kind != ExprKind::kAssign)
          throw EvalError("subst: argument " + std::to_string(i + 1) + " must look like name=value");
        MV v = eval(*b.children[0]);
        if (!v.is_scalar()) throw EvalError("subst: value for '" + b.text + "' must be a scalar");
        bindings[SymbolTable::intern(b.text)] = v.scalar_part();
      }
      typename MV::Coeffs out{};
      for (unsigned i = 0; i < kBladeCount; ++i) out[i] = a.coeffs()[i].substitute(bindings);
      return {MV(out), {}};
    }
  }

  const Environment& env_;
  std::vector<std::string>& warnings_;
};

}  // namespace

EvalValue evaluate_expression(const Expr& ast, Backend backend, const Environment& env,
                              std::vector<std::string>& warnings) {
  switch (backend) {
    case Backend::kExact: return Evaluator<Rational>(env, warnings).run(ast);
    case Backend::kSymbolic: return Evaluator<Poly>(env, warnings).run(ast);
    case Backend::kFloat: return Evaluator<Float>(env, warnings).run(ast);
  }
  throw EvalError("unknown backend");
}

}  // namespace cga::expr
