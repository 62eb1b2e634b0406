#pragma once

#include <algorithm>
#include <random>
#include <string>

#include "menv/expr.hpp"

namespace menv::testing {

inline unsigned degree_bound(const Expr& x);

/// Random syntax tree of depth <= depth in the shapes the parser produces:
/// positive scalars, non-unit monomials, ad with a generator first.
class ExprGenerator {
 public:
  explicit ExprGenerator(std::uint64_t seed, unsigned max_exp = 2) : rng_(seed), max_exp_(max_exp) {}

  Expr operator()(unsigned depth) { return expr(depth); }

  /// Like operator(), retrying until degree_bound(result) <= max_degree.
  Expr bounded(unsigned depth, unsigned max_degree) {
    for (;;) {
      Expr x = expr(depth);
      if (degree_bound(x) <= max_degree) return x;
    }
  }

 private:
  Expr expr(unsigned depth) {
    if (depth == 0) return leaf();
    switch (pick(0, 9)) {
      case 0:
      case 1:
        return leaf();
      case 2:
        return Expr::sum(expr(depth - 1), expr(depth - 1));
      case 3:
        return Expr::difference(expr(depth - 1), expr(depth - 1));
      case 4:
        return Expr::neg(expr(depth - 1));
      case 5:
      case 6:
        return Expr::product(expr(depth - 1), expr(depth - 1));
      case 7:
        return Expr::scaled(scalar_part(), expr(depth - 1));
      case 8:
        return Expr::call(Expr::Function::comm, {expr(depth - 1), expr(depth - 1)});
      default:
        if (pick(0, 1) == 0)
          return Expr::call(Expr::Function::assoc, {expr(depth - 1), expr(depth - 1), expr(depth - 1)});
        return Expr::call(Expr::Function::ad, {Expr::mono(Monomial::of(static_cast<Gen>(pick(0, 4)))), expr(depth - 1)});
    }
  }

  Expr leaf() {
    if (pick(0, 3) == 0) {
      const auto s = scalar_part();
      return Expr::scalar(s.value, s.gamma_power);
    }
    return Expr::mono(monomial());
  }

  Expr::Scalar scalar_part() {
    Expr::Scalar s{Rational(pick(1, 5), pick(1, 3)), static_cast<unsigned>(pick(0, 2))};
    s.value.canonicalize();
    return s;
  }

  Monomial monomial() {
    for (;;) {
      Monomial m;
      for (auto& e : m.exps) e = static_cast<unsigned>(pick(0, static_cast<int>(max_exp_)));
      if (m.degree() > 0 && m.degree() <= 3) return m;
    }
  }

  int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  std::mt19937_64 rng_;
  unsigned max_exp_;
};

/// Upper bound on the total degree of the value of x.
inline unsigned degree_bound(const Expr& x) {
  return std::visit(
      [](const auto& n) -> unsigned {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Expr::Scalar>) {
          return 0;
        } else if constexpr (std::is_same_v<T, Expr::Mono>) {
          return n.value.degree();
        } else if constexpr (std::is_same_v<T, Expr::Scaled>) {
          return degree_bound(n.body);
        } else if constexpr (std::is_same_v<T, Expr::Neg>) {
          return degree_bound(n.operand);
        } else if constexpr (std::is_same_v<T, Expr::Sum> || std::is_same_v<T, Expr::Difference>) {
          return std::max(degree_bound(n.lhs), degree_bound(n.rhs));
        } else if constexpr (std::is_same_v<T, Expr::Product>) {
          return degree_bound(n.lhs) + degree_bound(n.rhs);
        } else {
          unsigned total = 0;
          for (const Expr& arg : n.args) total += degree_bound(arg);
          return total;
        }
      },
      x.node());
}

/// Random expression text, built token by token; may be malformed.
inline std::string random_text(std::mt19937_64& rng, std::size_t length) {
  static const char* const tokens[] = {"a", "b", "c", "d", "e", "^2", " ", "+", "-", "*", "(", ")",
                                       "2", "1/3", "g", "comm(", "assoc(", "ad(", ",", "x", "0"};
  std::uniform_int_distribution<std::size_t> pick(0, std::size(tokens) - 1);
  std::string out;
  for (std::size_t n = 0; n < length; ++n) out += tokens[pick(rng)];
  return out;
}

}  // namespace menv::testing
