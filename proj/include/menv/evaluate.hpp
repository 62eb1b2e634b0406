#pragma once

#include <map>
#include <string>

#include "menv/alternative.hpp"
#include "menv/expr.hpp"
#include "menv/gamma_mode.hpp"
#include "menv/operators.hpp"
#include "menv/product.hpp"
#include "menv/straighten.hpp"

namespace menv {

/// closed: the explicit structure constants; operator_calculus: L_x built
/// from M, D and S; oracle: recursive straightening.
enum class Engine { closed, operator_calculus, oracle };

/// "closed", "operator" or "oracle"; throws std::invalid_argument otherwise.
Engine parse_engine(const std::string& name);
std::string to_string(Engine engine);

/// Evaluates expressions in U(M_gamma) with one engine. Keeps per-engine
/// caches, so reuse an instance for many expressions.
class Evaluator {
 public:
  explicit Evaluator(Engine engine = Engine::closed);

  /// Value with symbolic gamma, then specialized when mode is instantiated.
  Element evaluate(const Expr& x, const GammaMode& mode = GammaMode::symbolic());
  Element multiply(const Monomial& x, const Monomial& z);

  Engine engine() const { return engine_; }

 private:
  Element eval(const Expr& x);
  Element mul(const Element& x, const Element& y);

  Engine engine_;
  Straightener straightener_;
  std::map<Monomial, CompositeOp> left_ops_;
};

Element evaluate(const Expr& x, Engine engine = Engine::closed, const GammaMode& mode = GammaMode::symbolic());

/// Evaluates directly in A(M_gamma) = U(M_gamma)/J with the quotient table;
/// monomial literals are reduced modulo J first.
AltElement evaluate_alt(const Expr& x, const GammaMode& mode = GammaMode::symbolic());

AltElement gamma_eval(const AltElement& x, const Rational& gamma0);

}  // namespace menv
