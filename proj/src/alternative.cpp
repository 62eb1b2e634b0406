#include "menv/alternative.hpp"

#include <stdexcept>

#include "menv/combinatorics.hpp"
#include "menv/operators.hpp"
#include "menv/product.hpp"

namespace menv {

namespace {

// a^i (a + omega)^r, as coefficients of a^0, a^1, ...
std::vector<GammaCoeff> shifted_power(unsigned i, unsigned r, const GammaCoeff& omega) {
  std::vector<GammaCoeff> out(i + r + 1);
  GammaCoeff omega_pow(1);
  for (unsigned nu = 0; nu <= r; ++nu) {
    out[i + r - nu] += omega_pow * Rational(binomial(r, nu));
    omega_pow *= omega;
  }
  return out;
}

void add_type1(AltElement& out, const std::vector<GammaCoeff>& poly, const GammaCoeff& scale) {
  for (unsigned t = 0; t < poly.size(); ++t) out.add(AltMonomial::type1(t), poly[t] * scale);
}

}  // namespace

AltElement reduce_mod_J(const Element& x) {
  AltElement out;
  for (const auto& [mono, coeff] : x.terms()) {
    const unsigned l = mono[Gen::d];
    if (l == 0) {
      out.add(AltMonomial::type2(mono[Gen::a], mono[Gen::b], mono[Gen::c], mono[Gen::e]), coeff);
    } else if (l == 1 && mono[Gen::b] + mono[Gen::c] + mono[Gen::e] == 0) {
      out.add(AltMonomial::type1(mono[Gen::a]), coeff);
    }
  }
  return out;
}

Element lift(const AltElement& x) {
  Element out;
  for (const auto& [mono, coeff] : x.terms()) out.add(mono.monomial(), coeff);
  return out;
}

AltElement t_correction(unsigned i, unsigned r, unsigned j, unsigned k) {
  if (j > 1 || k > 1) throw std::invalid_argument("t_correction: j and k must be 0 or 1");
  AltElement out;
  if (j == 0 && k == 0) return out;
  if (j == 1 && k == 0) {
    add_type1(out, shifted_power(0, i + r, GammaCoeff(-1)), 1);
    add_type1(out, shifted_power(i, r, GammaCoeff(1)), -1);
  } else if (j == 0 && k == 1) {
    add_type1(out, shifted_power(0, i + r, GammaCoeff(-1)), -1);
    add_type1(out, shifted_power(i, r, GammaCoeff(1)), -1);
  } else {
    add_type1(out, shifted_power(i, r, GammaCoeff(-1)), 1);
    add_type1(out, shifted_power(i, r, GammaCoeff(2)), -1);
  }
  return out;
}

AltElement alt_mul(const AltMonomial& x, const AltMonomial& y) {
  AltElement out;
  const unsigned i = x[Gen::a], r = y[Gen::a];
  if (x.is_type1() && y.is_type1()) return out;
  if (x.is_type1()) {
    if (y[Gen::b] + y[Gen::c] + y[Gen::e] == 0) add_type1(out, shifted_power(i, r, GammaCoeff(-1)), 1);
    return out;
  }
  const unsigned j = x[Gen::b], k = x[Gen::c], m = x[Gen::e];
  if (y.is_type1()) {
    if (j + k + m == 0) out.add(AltMonomial::type1(i + r), 1);
    return out;
  }
  const unsigned n = y[Gen::b], p = y[Gen::c], s = y[Gen::e];
  const GammaCoeff omega(std::vector<Rational>{Rational(static_cast<long>(j + k)), Rational(-static_cast<long>(m))});
  const auto poly = shifted_power(i, r, omega);
  for (unsigned t = 0; t < poly.size(); ++t) out.add(AltMonomial::type2(t, j + n, k + p, m + s), poly[t]);
  if (m == 0 && s == 0 && j + n == 1 && k + p == 1) out += t_correction(i, r, j, k);
  return out;
}

AltElement alt_mul(const AltElement& x, const AltElement& y) {
  AltElement out;
  for (const auto& [mx, cx] : x.terms())
    for (const auto& [my, cy] : y.terms()) out.add(alt_mul(mx, my), cx * cy);
  return out;
}

AltElement alt_associator(const AltElement& x, const AltElement& y, const AltElement& z) {
  return alt_mul(alt_mul(x, y), z) - alt_mul(x, alt_mul(y, z));
}

bool AlternatorReport::ok() const {
  for (const auto& c : checks)
    if (!c.matches || !c.vanishes_mod_J) return false;
  return !checks.empty();
}

std::vector<std::string> AlternatorReport::failures() const {
  std::vector<std::string> out;
  for (const auto& c : checks) {
    if (!c.matches)
      out.push_back(c.name + " = " + to_string(c.computed) + ", expected " + to_string(c.expected));
    if (!c.vanishes_mod_J) out.push_back(c.name + " does not vanish modulo J");
  }
  return out;
}

AlternatorReport alternator_generators_check() {
  const auto mono = [](unsigned i, unsigned j, unsigned k, unsigned l, unsigned m) {
    return Element(Monomial(i, j, k, l, m));
  };
  const Element a = generator(Gen::a), b = generator(Gen::b), c = generator(Gen::c);
  const Element ab = mono(1, 1, 0, 0, 0), ac = mono(1, 0, 1, 0, 0), bc = mono(0, 1, 1, 0, 0),
                be = mono(0, 1, 0, 0, 1);

  AlternatorReport report;
  const auto record = [&](std::string name, Element computed, Element expected) {
    AlternatorCheck check{std::move(name), std::move(computed), std::move(expected), false, false};
    check.matches = check.computed == check.expected;
    check.vanishes_mod_J = reduce_mod_J(check.computed).is_zero();
    report.checks.push_back(std::move(check));
  };
  record("(c,ab,ab)", associator(c, ab, ab), -mono(0, 1, 0, 1, 0));
  record("(b,ac,ac)", associator(b, ac, ac), mono(0, 0, 1, 1, 0));
  record("(a,bc,bc)", associator(a, bc, bc), GammaCoeff(2) * mono(0, 0, 0, 2, 0));
  record("(ac,be,a)+(be,ac,a)", associator(ac, be, a) + associator(be, ac, a),
         GammaCoeff::gamma() * mono(0, 0, 0, 1, 1));
  return report;
}

bool quotient_homomorphism_check(unsigned degree_bound) {
  const auto monos = monomials_up_to_degree(degree_bound);
  std::vector<AltElement> images;
  images.reserve(monos.size());
  for (const auto& x : monos) images.push_back(reduce_mod_J(Element(x)));
  for (std::size_t u = 0; u < monos.size(); ++u)
    for (std::size_t v = 0; v < monos.size(); ++v)
      if (reduce_mod_J(mul_closed(monos[u], monos[v])) != alt_mul(images[u], images[v])) return false;
  return true;
}

}  // namespace menv
