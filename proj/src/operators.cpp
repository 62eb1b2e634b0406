#include "menv/operators.hpp"

#include <algorithm>

#include "menv/combinatorics.hpp"

namespace menv {

namespace {

Element apply_primitive(const PrimitiveOp& op, const Element& x) {
  Element out;
  switch (op.kind) {
    case PrimitiveOp::Kind::multiply:
      for (const auto& [mono, coeff] : x.terms()) out.add(mono.times(op.gen, op.power), coeff);
      break;
    case PrimitiveOp::Kind::differentiate:
      for (const auto& [mono, coeff] : x.terms()) {
        unsigned e = mono[op.gen];
        if (e < op.power) continue;
        Monomial next = mono;
        next[op.gen] = e - op.power;
        out.add(next, coeff * Rational(falling_factorial(e, op.power)));
      }
      break;
    case PrimitiveOp::Kind::shift: {
      if (op.shift.is_zero()) return x;
      // a^i -> (a + alpha)^i = sum_t C(i,t) alpha^(i-t) a^t
      std::vector<GammaCoeff> alpha_pow{GammaCoeff(1)};
      for (const auto& [mono, coeff] : x.terms()) {
        unsigned i = mono[Gen::a];
        while (alpha_pow.size() <= i) alpha_pow.push_back(alpha_pow.back() * op.shift);
        Monomial next = mono;
        for (unsigned t = 0; t <= i; ++t) {
          next[Gen::a] = t;
          out.add(next, coeff * alpha_pow[i - t] * Rational(binomial(i, t)));
        }
      }
      break;
    }
  }
  return out;
}

CompositeOp I() { return CompositeOp::identity(); }
CompositeOp S(long alpha) { return CompositeOp::S(GammaCoeff(alpha)); }
CompositeOp M(Gen g) { return CompositeOp::M(g); }
CompositeOp D(Gen g) { return CompositeOp::D(g); }
GammaCoeff gamma() { return GammaCoeff::gamma(); }

}  // namespace

CompositeOp CompositeOp::identity() {
  CompositeOp op;
  op.terms_.push_back({GammaCoeff(1), {}});
  return op;
}

CompositeOp CompositeOp::primitive(const PrimitiveOp& prim) {
  CompositeOp op;
  op.add_term(GammaCoeff(1), {prim});
  return op;
}

void CompositeOp::add_term(const GammaCoeff& scalar, std::vector<PrimitiveOp> ops) {
  if (scalar.is_zero()) return;
  std::erase_if(ops, [](const PrimitiveOp& p) {
    return (p.kind == PrimitiveOp::Kind::shift && p.shift.is_zero()) ||
           (p.kind != PrimitiveOp::Kind::shift && p.power == 0);
  });
  terms_.push_back({scalar, std::move(ops)});
}

Element CompositeOp::apply(const Element& x) const {
  Element out;
  for (const auto& term : terms_) {
    Element y = x;
    for (auto it = term.ops.rbegin(); it != term.ops.rend() && !y.is_zero(); ++it) y = apply_primitive(*it, y);
    out.add(y, term.scalar);
  }
  return out;
}

Element CompositeOp::apply(const Monomial& x) const { return apply(Element(x)); }

CompositeOp CompositeOp::pow(unsigned n) const {
  CompositeOp out = identity();
  for (unsigned t = 0; t < n; ++t) out = *this * out;
  return out;
}

CompositeOp& CompositeOp::operator+=(const CompositeOp& other) {
  terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
  return *this;
}

CompositeOp& CompositeOp::operator-=(const CompositeOp& other) {
  for (const auto& term : other.terms_) terms_.push_back({-term.scalar, term.ops});
  return *this;
}

CompositeOp& CompositeOp::operator*=(const GammaCoeff& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& term : terms_) term.scalar *= c;
  return *this;
}

CompositeOp operator*(const CompositeOp& x, const CompositeOp& y) {
  CompositeOp out;
  for (const auto& tx : x.terms_) {
    for (const auto& ty : y.terms_) {
      std::vector<PrimitiveOp> ops = tx.ops;
      ops.insert(ops.end(), ty.ops.begin(), ty.ops.end());
      out.add_term(tx.scalar * ty.scalar, std::move(ops));
    }
  }
  return out;
}

CompositeOp op_commutator(const CompositeOp& x, const CompositeOp& y) { return x * y - y * x; }

CompositeOp left_op(Gen s) {
  switch (s) {
    case Gen::a:
      return M(Gen::a);
    case Gen::b:
      return S(1) * M(Gen::b) + (S(-1) - S(1)) * D(Gen::c) * M(Gen::d);
    case Gen::c:
      return S(1) * M(Gen::c) - (S(1) + S(-1)) * D(Gen::b) * M(Gen::d);
    case Gen::d:
      return S(-1) * M(Gen::d);
    case Gen::e:
      return CompositeOp::S(-gamma()) * M(Gen::e);
  }
  return {};
}

CompositeOp right_op(Gen s) {
  switch (s) {
    case Gen::a:
      return M(Gen::a) + M(Gen::b) * D(Gen::b) + M(Gen::c) * D(Gen::c) - M(Gen::d) * D(Gen::d) -
             gamma() * (M(Gen::e) * D(Gen::e)) - GammaCoeff(3) * (D(Gen::b) * D(Gen::c) * M(Gen::d));
    case Gen::b:
      return M(Gen::b) - (S(-1) + I()) * D(Gen::c) * M(Gen::d);
    case Gen::c:
      return M(Gen::c) + (S(-1) - I()) * D(Gen::b) * M(Gen::d);
    case Gen::d:
      return M(Gen::d);
    case Gen::e:
      return M(Gen::e);
  }
  return {};
}

CompositeOp adjoint_op(Gen s) {
  switch (s) {
    case Gen::a:
      return M(Gen::b) * D(Gen::b) + M(Gen::c) * D(Gen::c) - M(Gen::d) * D(Gen::d) -
             gamma() * (M(Gen::e) * D(Gen::e)) - GammaCoeff(3) * (D(Gen::b) * D(Gen::c) * M(Gen::d));
    case Gen::b:
      return (I() - S(1)) * M(Gen::b) + (S(1) - GammaCoeff(2) * S(-1) - I()) * D(Gen::c) * M(Gen::d);
    case Gen::c:
      return (I() - S(1)) * M(Gen::c) + (S(1) + GammaCoeff(2) * S(-1) - I()) * D(Gen::b) * M(Gen::d);
    case Gen::d:
      return (I() - S(-1)) * M(Gen::d);
    case Gen::e:
      return (I() - CompositeOp::S(-gamma())) * M(Gen::e);
  }
  return {};
}

CompositeOp derivation_op(Gen s, Gen t) {
  if (index(s) > index(t)) return GammaCoeff(-1) * derivation_op(t, s);
  if (s == Gen::a) {
    switch (t) {
      case Gen::a:
        return {};
      case Gen::b:
        return (I() - S(1)) * M(Gen::b) + (S(1) + S(-1) - I()) * D(Gen::c) * M(Gen::d);
      case Gen::c:
        return (I() - S(1)) * M(Gen::c) + (S(1) - S(-1) - I()) * D(Gen::b) * M(Gen::d);
      case Gen::d:
        return (S(-1) - I()) * M(Gen::d);
      case Gen::e:
        return gamma() * ((CompositeOp::S(-gamma()) - I()) * M(Gen::e));
    }
  }
  // D_{b,c} coincides with ad_d on all of U(M).
  if (s == Gen::b && t == Gen::c) return (I() - S(-1)) * M(Gen::d);
  return {};
}

CompositeOp left_op_monomial(const Monomial& x) {
  const int i = static_cast<int>(x.exps[0]), j = static_cast<int>(x.exps[1]),
            k = static_cast<int>(x.exps[2]), l = static_cast<int>(x.exps[3]),
            m = static_cast<int>(x.exps[4]);
  const auto u = [](int v) { return static_cast<unsigned>(v); };
  CompositeOp op;
  for (int alpha = 0; alpha <= std::min(j, k); ++alpha) {
    for (int beta = 0; beta <= alpha; ++beta) {
      for (int kappa = 0; kappa <= i; ++kappa) {
        for (int delta = 0; delta <= i - kappa; ++delta) {
          for (int eps = 0; eps <= i - kappa - delta; ++eps) {
            // The zeta sum is the closed form of X_i(kappa, delta, eps) at
            // alpha - beta, times delta! eps!.
            const IntPoly xp = x_poly(i, kappa, delta, eps);
            if (xp.is_zero()) continue;
            const Integer c_i = factorial(u(alpha)) * binomial(u(alpha), u(beta)) * factorial(u(delta)) *
                                factorial(u(eps)) * xp.evaluate(alpha - beta);
            if (c_i == 0) continue;
            for (int eta = 0; eta <= j - alpha - eps; ++eta) {
              for (int theta = 0; theta <= j - alpha - eps - eta; ++theta) {
                for (int lambda = 0; lambda <= k - alpha - delta; ++lambda) {
                  for (int mu = 0; mu <= k - alpha - delta - lambda; ++mu) {
                    Integer coeff = c_i * multinomial(u(j), {u(alpha), u(eps), u(eta), u(theta)}) *
                                    multinomial(u(k), {u(alpha), u(delta), u(lambda), u(mu)});
                    if ((i + j + k + alpha - beta - kappa - eps - eta - theta - lambda) % 2 != 0) coeff = -coeff;
                    const long w0 = j + k - l - 2 * alpha - beta - 2 * delta - 2 * eps - 2 * theta - 2 * mu;
                    GammaCoeff shift(std::vector<Rational>{Rational(w0), Rational(-m)});
                    op.add_term(GammaCoeff(Rational(coeff)),
                                {PrimitiveOp::multiply_by(Gen::a, u(kappa)), PrimitiveOp::shift_by(shift),
                                 PrimitiveOp::multiply_by(Gen::b, u(eta)),
                                 PrimitiveOp::differentiate(Gen::b, u(k - alpha - lambda)),
                                 PrimitiveOp::differentiate(Gen::c, u(j - alpha - eta)),
                                 PrimitiveOp::multiply_by(Gen::c, u(lambda)),
                                 PrimitiveOp::multiply_by(Gen::d, u(j + k + l - alpha - eta - lambda)),
                                 PrimitiveOp::multiply_by(Gen::e, u(m))});
                  }
                }
              }
            }
          }
        }
      }
    }
  }
  return op;
}

std::vector<Monomial> monomials_up_to_degree(unsigned max_degree) {
  std::vector<Monomial> out;
  for (unsigned i = 0; i <= max_degree; ++i)
    for (unsigned j = 0; i + j <= max_degree; ++j)
      for (unsigned k = 0; i + j + k <= max_degree; ++k)
        for (unsigned l = 0; i + j + k + l <= max_degree; ++l)
          for (unsigned m = 0; i + j + k + l + m <= max_degree; ++m) out.emplace_back(i, j, k, l, m);
  return out;
}

std::vector<Monomial> monomials_with_exponents_up_to(unsigned max_exp) {
  std::vector<Monomial> out;
  for (unsigned i = 0; i <= max_exp; ++i)
    for (unsigned j = 0; j <= max_exp; ++j)
      for (unsigned k = 0; k <= max_exp; ++k)
        for (unsigned l = 0; l <= max_exp; ++l)
          for (unsigned m = 0; m <= max_exp; ++m) out.emplace_back(i, j, k, l, m);
  return out;
}

bool op_equal_upto(const CompositeOp& a, const CompositeOp& b, unsigned degree_bound) {
  for (const Monomial& z : monomials_up_to_degree(degree_bound))
    if (a.apply(z) != b.apply(z)) return false;
  return true;
}

}  // namespace menv
