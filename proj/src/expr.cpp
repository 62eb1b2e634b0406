#include "menv/expr.hpp"

#include <cctype>
#include <optional>

namespace menv {

// ---------------------------------------------------------------------------
// Construction and equality

Expr Expr::scalar(const Rational& value, unsigned gamma_power) {
  return Expr(std::make_shared<const Node>(Scalar{value, gamma_power}));
}
Expr Expr::mono(const Monomial& m) { return Expr(std::make_shared<const Node>(Mono{m})); }
Expr Expr::scaled(const Scalar& factor, Expr body) {
  return Expr(std::make_shared<const Node>(Scaled{factor, std::move(body)}));
}
Expr Expr::neg(Expr x) { return Expr(std::make_shared<const Node>(Neg{std::move(x)})); }
Expr Expr::sum(Expr x, Expr y) { return Expr(std::make_shared<const Node>(Sum{std::move(x), std::move(y)})); }
Expr Expr::difference(Expr x, Expr y) {
  return Expr(std::make_shared<const Node>(Difference{std::move(x), std::move(y)}));
}
Expr Expr::product(Expr x, Expr y) {
  return Expr(std::make_shared<const Node>(Product{std::move(x), std::move(y)}));
}
Expr Expr::call(Function f, std::vector<Expr> args) {
  return Expr(std::make_shared<const Node>(Call{f, std::move(args)}));
}

bool operator==(const Expr& x, const Expr& y) {
  if (x.node_ == y.node_) return true;
  if (x.node().index() != y.node().index()) return false;
  return std::visit(
      [&y](const auto& lhs) -> bool {
        using T = std::decay_t<decltype(lhs)>;
        const auto& rhs = std::get<T>(y.node());
        if constexpr (std::is_same_v<T, Expr::Scalar>) {
          return lhs == rhs;
        } else if constexpr (std::is_same_v<T, Expr::Mono>) {
          return lhs.value == rhs.value;
        } else if constexpr (std::is_same_v<T, Expr::Scaled>) {
          return lhs.factor == rhs.factor && lhs.body == rhs.body;
        } else if constexpr (std::is_same_v<T, Expr::Neg>) {
          return lhs.operand == rhs.operand;
        } else if constexpr (std::is_same_v<T, Expr::Call>) {
          return lhs.function == rhs.function && lhs.args == rhs.args;
        } else {
          return lhs.lhs == rhs.lhs && lhs.rhs == rhs.rhs;
        }
      },
      x.node());
}

const char* function_name(Expr::Function f) {
  switch (f) {
    case Expr::Function::comm:
      return "comm";
    case Expr::Function::assoc:
      return "assoc";
    case Expr::Function::ad:
      return "ad";
  }
  return "?";
}

ParseError::ParseError(Kind kind, std::size_t position, const std::string& message)
    : std::runtime_error(message + " at position " + std::to_string(position)), kind_(kind), position_(position) {}

// ---------------------------------------------------------------------------
// Printing

namespace {

std::string scalar_text(const Expr::Scalar& s, bool force_value) {
  std::string out;
  if (force_value || s.value != 1) out = to_string(s.value);
  if (s.gamma_power > 0) {
    if (!out.empty()) out += ' ';
    out += s.gamma_power == 1 ? "g" : "g^" + std::to_string(s.gamma_power);
  }
  return out;
}

std::string print_expr(const Expr& x);

std::string print_factor(const Expr& x) {
  if (const auto* m = std::get_if<Expr::Mono>(&x.node())) return to_string(m->value);
  if (const auto* c = std::get_if<Expr::Call>(&x.node())) {
    std::string out = function_name(c->function);
    out += '(';
    for (std::size_t t = 0; t < c->args.size(); ++t) {
      if (t > 0) out += ", ";
      out += print_expr(c->args[t]);
    }
    return out + ')';
  }
  return '(' + print_expr(x) + ')';
}

std::string print_addend(const Expr& x) {
  if (const auto* s = std::get_if<Expr::Scalar>(&x.node())) return scalar_text(*s, s->gamma_power == 0);
  if (const auto* s = std::get_if<Expr::Scaled>(&x.node()))
    return scalar_text(s->factor, s->factor.gamma_power == 0) + ' ' + print_factor(s->body);
  return print_factor(x);
}

std::string print_term(const Expr& x) {
  if (const auto* p = std::get_if<Expr::Product>(&x.node()))
    return print_addend(p->lhs) + " * " + print_addend(p->rhs);
  return print_addend(x);
}

std::string print_expr(const Expr& x) {
  if (const auto* s = std::get_if<Expr::Sum>(&x.node())) return print_expr(s->lhs) + " + " + print_term(s->rhs);
  if (const auto* d = std::get_if<Expr::Difference>(&x.node()))
    return print_expr(d->lhs) + " - " + print_term(d->rhs);
  if (const auto* n = std::get_if<Expr::Neg>(&x.node())) return '-' + print_term(n->operand);
  return print_term(x);
}

}  // namespace

std::string to_string(const Expr& x) { return print_expr(x); }

// ---------------------------------------------------------------------------
// Parsing

namespace {

class Parser {
 public:
  explicit Parser(std::string_view input) : in_(input) {}

  Expr parse_all() {
    Expr x = expr();
    skip_ws();
    if (pos_ < in_.size()) fail(describe_unexpected());
    return x;
  }

 private:
  std::string_view in_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& message, ParseError::Kind kind = ParseError::Kind::syntax) const {
    throw ParseError(kind, pos_, message);
  }
  [[noreturn]] void fail_at(std::size_t pos, const std::string& message,
                            ParseError::Kind kind = ParseError::Kind::syntax) const {
    throw ParseError(kind, pos, message);
  }

  std::string describe_unexpected() const {
    if (pos_ >= in_.size()) return "unexpected end of input";
    return std::string("unexpected '") + in_[pos_] + "'";
  }

  void skip_ws() {
    while (pos_ < in_.size() && std::isspace(static_cast<unsigned char>(in_[pos_]))) ++pos_;
  }
  char peek() {
    skip_ws();
    return pos_ < in_.size() ? in_[pos_] : '\0';
  }
  bool accept(char ch) {
    if (peek() != ch) return false;
    ++pos_;
    return true;
  }
  void expect(char ch) {
    if (!accept(ch)) fail(std::string("expected '") + ch + "', " + describe_unexpected());
  }

  static bool is_letter(char ch) { return std::isalpha(static_cast<unsigned char>(ch)) != 0; }
  static bool is_digit(char ch) { return std::isdigit(static_cast<unsigned char>(ch)) != 0; }

  // A function name at the cursor, when it is followed by '('.
  std::optional<Expr::Function> function_at() {
    skip_ws();
    std::size_t end = pos_;
    while (end < in_.size() && is_letter(in_[end])) ++end;
    const std::string_view word = in_.substr(pos_, end - pos_);
    std::optional<Expr::Function> f;
    if (word == "comm") f = Expr::Function::comm;
    if (word == "assoc") f = Expr::Function::assoc;
    if (word == "ad") f = Expr::Function::ad;
    if (!f) return std::nullopt;
    while (end < in_.size() && std::isspace(static_cast<unsigned char>(in_[end]))) ++end;
    if (end >= in_.size() || in_[end] != '(') return std::nullopt;
    return f;
  }

  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < in_.size() && is_digit(in_[pos_])) ++pos_;
    return std::string(in_.substr(start, pos_ - start));
  }

  unsigned exponent() {
    skip_ws();
    const std::size_t start = pos_;
    const std::string text = digits();
    if (text.empty()) fail("expected an exponent after '^'");
    const Integer value{text};
    if (value == 0) fail_at(start, "exponent must be positive");
    if (!value.fits_uint_p()) fail_at(start, "exponent too large");
    return static_cast<unsigned>(value.get_ui());
  }

  Expr expr() {
    const bool negated = accept('-');
    Expr x = term();
    if (negated) x = Expr::neg(std::move(x));
    for (;;) {
      if (accept('+')) {
        x = Expr::sum(std::move(x), term());
      } else if (accept('-')) {
        x = Expr::difference(std::move(x), term());
      } else {
        return x;
      }
    }
  }

  Expr term() {
    Expr x = addend();
    if (!accept('*')) return x;
    Expr y = addend();
    if (peek() == '*')
      fail("ambiguous product: '*' is not associative, so chains of three or more factors must be grouped "
           "with parentheses",
           ParseError::Kind::ambiguity);
    return Expr::product(std::move(x), std::move(y));
  }

  bool factor_starts() {
    const char ch = peek();
    if (ch == '(') return true;
    if (function_at()) return true;
    return ch >= 'a' && ch <= 'e';
  }

  Expr addend() {
    skip_ws();
    const std::size_t start = pos_;
    std::optional<Rational> value;
    if (is_digit(peek())) {
      std::string text = digits();
      if (pos_ < in_.size() && in_[pos_] == '/') {
        ++pos_;
        const std::string den = digits();
        if (den.empty()) fail("expected a denominator after '/'");
        if (Integer{den} == 0) fail_at(start, "zero denominator");
        text += '/' + den;
      }
      value = parse_rational(text);
    }
    unsigned gamma_power = 0;
    if (peek() == 'g' && !(pos_ + 1 < in_.size() && is_letter(in_[pos_ + 1]))) {
      ++pos_;
      gamma_power = accept('^') ? exponent() : 1;
    }
    const bool has_scalar = value.has_value() || gamma_power > 0;
    const Expr::Scalar s{value.value_or(Rational(1)), gamma_power};
    if (!factor_starts()) {
      if (!has_scalar) fail("expected an expression, " + describe_unexpected());
      return Expr::scalar(s.value, s.gamma_power);
    }
    Expr body = factor();
    if (!has_scalar) return body;
    return Expr::scaled(s, std::move(body));
  }

  Expr factor() {
    if (accept('(')) {
      Expr x = expr();
      expect(')');
      return x;
    }
    if (auto f = function_at()) return call(*f);
    return monomial();
  }

  Expr call(Expr::Function f) {
    while (pos_ < in_.size() && is_letter(in_[pos_])) ++pos_;
    expect('(');
    std::vector<Expr> args;
    std::vector<std::size_t> starts;
    do {
      skip_ws();
      starts.push_back(pos_);
      args.push_back(expr());
    } while (accept(','));
    const std::size_t close = pos_;
    expect(')');
    const std::size_t arity = f == Expr::Function::assoc ? 3 : 2;
    if (args.size() != arity)
      fail_at(close, std::string(function_name(f)) + " takes " + std::to_string(arity) + " arguments, got " +
                         std::to_string(args.size()));
    if (f == Expr::Function::ad) {
      const auto* m = std::get_if<Expr::Mono>(&args[0].node());
      if (!m || m->value.degree() != 1) fail_at(starts[0], "the first argument of ad must be a generator");
    }
    return Expr::call(f, std::move(args));
  }

  Expr monomial() {
    skip_ws();
    Monomial m;
    int last = -1;
    std::size_t letters = 0;
    while (pos_ < in_.size()) {
      skip_ws();
      if (pos_ >= in_.size()) break;
      const char ch = in_[pos_];
      if (ch < 'a' || ch > 'e' || function_at()) break;
      const int g = ch - 'a';
      if (g <= last)
        fail("generators in a monomial must appear once each, in the order a, b, c, d, e",
             ParseError::Kind::order);
      ++pos_;
      unsigned power = 1;
      if (accept('^')) power = exponent();
      m.exps[static_cast<std::size_t>(g)] = power;
      last = g;
      ++letters;
    }
    if (letters == 0) fail("expected a monomial, " + describe_unexpected());
    return Expr::mono(m);
  }
};

}  // namespace

Expr parse_expr(std::string_view input) { return Parser(input).parse_all(); }

}  // namespace menv
