#include "menv/evaluate.hpp"

#include <stdexcept>

#include "menv/center.hpp"

namespace menv {

Engine parse_engine(const std::string& name) {
  if (name == "closed") return Engine::closed;
  if (name == "operator") return Engine::operator_calculus;
  if (name == "oracle") return Engine::oracle;
  throw std::invalid_argument("unknown engine '" + name + "' (expected closed, operator or oracle)");
}

std::string to_string(Engine engine) {
  switch (engine) {
    case Engine::closed:
      return "closed";
    case Engine::operator_calculus:
      return "operator";
    case Engine::oracle:
      return "oracle";
  }
  return "?";
}

Evaluator::Evaluator(Engine engine) : engine_(engine) {}

Element Evaluator::multiply(const Monomial& x, const Monomial& z) {
  switch (engine_) {
    case Engine::closed:
      return mul_closed(x, z);
    case Engine::operator_calculus: {
      auto it = left_ops_.find(x);
      if (it == left_ops_.end()) it = left_ops_.emplace(x, left_op_monomial(x)).first;
      return it->second.apply(z);
    }
    case Engine::oracle:
      return straightener_.mul_oracle(x, z);
  }
  return {};
}

Element Evaluator::mul(const Element& x, const Element& y) {
  Element out;
  for (const auto& [mx, cx] : x.terms())
    for (const auto& [my, cy] : y.terms()) out.add(multiply(mx, my), cx * cy);
  return out;
}

Element Evaluator::eval(const Expr& x) {
  return std::visit(
      [this](const auto& node) -> Element {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, Expr::Scalar>) {
          return scalar(GammaCoeff::monomial(node.gamma_power, node.value));
        } else if constexpr (std::is_same_v<T, Expr::Mono>) {
          return Element(node.value);
        } else if constexpr (std::is_same_v<T, Expr::Scaled>) {
          return GammaCoeff::monomial(node.factor.gamma_power, node.factor.value) * eval(node.body);
        } else if constexpr (std::is_same_v<T, Expr::Neg>) {
          return -eval(node.operand);
        } else if constexpr (std::is_same_v<T, Expr::Sum>) {
          return eval(node.lhs) + eval(node.rhs);
        } else if constexpr (std::is_same_v<T, Expr::Difference>) {
          return eval(node.lhs) - eval(node.rhs);
        } else if constexpr (std::is_same_v<T, Expr::Product>) {
          return mul(eval(node.lhs), eval(node.rhs));
        } else {
          std::vector<Element> args;
          for (const auto& arg : node.args) args.push_back(eval(arg));
          switch (node.function) {
            case Expr::Function::comm:
              return mul(args[0], args[1]) - mul(args[1], args[0]);
            case Expr::Function::assoc:
              return mul(mul(args[0], args[1]), args[2]) - mul(args[0], mul(args[1], args[2]));
            case Expr::Function::ad: {
              const Gen s = *args[0].terms().begin()->first.leading();
              if (engine_ == Engine::operator_calculus) return ad_action(s, args[1]);
              return mul(args[1], args[0]) - mul(args[0], args[1]);
            }
          }
          return {};
        }
      },
      x.node());
}

Element Evaluator::evaluate(const Expr& x, const GammaMode& mode) {
  Element value = eval(x);
  return mode.is_symbolic() ? value : gamma_eval(value, mode.value());
}

Element evaluate(const Expr& x, Engine engine, const GammaMode& mode) { return Evaluator(engine).evaluate(x, mode); }

namespace {

AltElement eval_alt(const Expr& x) {
  return std::visit(
      [](const auto& node) -> AltElement {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, Expr::Scalar>) {
          return AltElement(AltMonomial::unit(), GammaCoeff::monomial(node.gamma_power, node.value));
        } else if constexpr (std::is_same_v<T, Expr::Mono>) {
          return reduce_mod_J(Element(node.value));
        } else if constexpr (std::is_same_v<T, Expr::Scaled>) {
          return GammaCoeff::monomial(node.factor.gamma_power, node.factor.value) * eval_alt(node.body);
        } else if constexpr (std::is_same_v<T, Expr::Neg>) {
          return -eval_alt(node.operand);
        } else if constexpr (std::is_same_v<T, Expr::Sum>) {
          return eval_alt(node.lhs) + eval_alt(node.rhs);
        } else if constexpr (std::is_same_v<T, Expr::Difference>) {
          return eval_alt(node.lhs) - eval_alt(node.rhs);
        } else if constexpr (std::is_same_v<T, Expr::Product>) {
          return alt_mul(eval_alt(node.lhs), eval_alt(node.rhs));
        } else {
          std::vector<AltElement> args;
          for (const auto& arg : node.args) args.push_back(eval_alt(arg));
          switch (node.function) {
            case Expr::Function::comm:
              return alt_mul(args[0], args[1]) - alt_mul(args[1], args[0]);
            case Expr::Function::assoc:
              return alt_associator(args[0], args[1], args[2]);
            case Expr::Function::ad:
              return alt_mul(args[1], args[0]) - alt_mul(args[0], args[1]);
          }
          return {};
        }
      },
      x.node());
}

}  // namespace

AltElement gamma_eval(const AltElement& x, const Rational& gamma0) {
  if (gamma0 == 0) throw std::domain_error("gamma must be nonzero");
  AltElement out;
  for (const auto& [mono, coeff] : x.terms()) out.add(mono, GammaCoeff(coeff.evaluate(gamma0)));
  return out;
}

AltElement evaluate_alt(const Expr& x, const GammaMode& mode) {
  AltElement value = eval_alt(x);
  return mode.is_symbolic() ? value : gamma_eval(value, mode.value());
}

}  // namespace menv
