#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "menv/monomial.hpp"
#include "menv/rational.hpp"

namespace menv {

/// Syntax tree of an expression over M_gamma.
///
/// Grammar (whitespace is insignificant except inside words):
///
///   expr    := ['-'] term (('+' | '-') term)*
///   term    := addend ['*' addend]
///   addend  := [rational] ['g' ['^' int]] [factor]     (not all empty)
///   factor  := '(' expr ')' | call | monomial
///   call    := ('comm' | 'assoc' | 'ad') '(' expr (',' expr)* ')'
///   monomial:= generator powers in the order a, b, c, d, e, e.g. "a^2 b c^3 e"
///
/// A monomial literal names the left-tapped basis element a^i (b^j (...)).
/// The product is not associative, so "x * y * z" is rejected: group it.
/// ad(s, x) is [x, s] and needs a single generator as s.
class Expr {
 public:
  struct Scalar {
    Rational value;  // > 0
    unsigned gamma_power = 0;
    bool operator==(const Scalar&) const = default;
  };
  struct Mono;
  struct Scaled;
  struct Neg;
  struct Sum;
  struct Difference;
  struct Product;
  struct Call;
  using Node = std::variant<Scalar, Mono, Scaled, Neg, Sum, Difference, Product, Call>;

  enum class Function { comm, assoc, ad };

  static Expr scalar(const Rational& value, unsigned gamma_power = 0);
  static Expr mono(const Monomial& m);
  static Expr scaled(const Scalar& factor, Expr body);
  static Expr neg(Expr x);
  static Expr sum(Expr x, Expr y);
  static Expr difference(Expr x, Expr y);
  static Expr product(Expr x, Expr y);
  static Expr call(Function f, std::vector<Expr> args);

  const Node& node() const;

  /// Structural equality.
  friend bool operator==(const Expr& x, const Expr& y);

 private:
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct Expr::Mono {
  Monomial value;
};
struct Expr::Scaled {
  Scalar factor;
  Expr body;
};
struct Expr::Neg {
  Expr operand;
};
struct Expr::Sum {
  Expr lhs, rhs;
};
struct Expr::Difference {
  Expr lhs, rhs;
};
struct Expr::Product {
  Expr lhs, rhs;
};
struct Expr::Call {
  Function function;
  std::vector<Expr> args;
};

inline const Expr::Node& Expr::node() const { return *node_; }

const char* function_name(Expr::Function f);

class ParseError : public std::runtime_error {
 public:
  enum class Kind { syntax, ambiguity, order };
  ParseError(Kind kind, std::size_t position, const std::string& message);

  Kind kind() const { return kind_; }
  /// Byte offset into the input.
  std::size_t position() const { return position_; }

 private:
  Kind kind_;
  std::size_t position_;
};

Expr parse_expr(std::string_view input);

/// Inverse of parse_expr up to structural equality; inserts only the
/// parentheses the grammar needs.
std::string to_string(const Expr& x);

}  // namespace menv
