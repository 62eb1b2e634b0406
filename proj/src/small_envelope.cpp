#include "menv/small_envelope.hpp"

#include <stdexcept>
#include <vector>

#include "menv/malcev.hpp"

namespace menv {

SmallBasis SmallBasis::power(unsigned r) {
  if (r == 0) throw std::invalid_argument("a^0 is not a basis element of A_gamma");
  return SmallBasis(Gen::a, r);
}

SmallBasis SmallBasis::letter(Gen g) {
  if (g == Gen::a) throw std::invalid_argument("use SmallBasis::power for a");
  return SmallBasis(g, 0);
}

std::string to_string(const SmallBasis& x) {
  if (!x.is_power()) return std::string(1, name(x.gen()));
  return x.exponent() == 1 ? "a" : "a^" + std::to_string(x.exponent());
}

SmallElement small_mul(const SmallBasis& x, const SmallBasis& y) {
  const auto one = [](const SmallBasis& z, const GammaCoeff& c = GammaCoeff(1)) { return SmallElement(z, c); };
  const SmallBasis d = SmallBasis::letter(Gen::d);
  if (y.is_power()) {
    if (x.is_power()) return one(SmallBasis::power(x.exponent() + y.exponent()));
    switch (x.gen()) {
      case Gen::b:
      case Gen::c:
        return one(x);
      case Gen::e:
        return one(x, (-GammaCoeff::gamma()).pow(y.exponent()));
      default:
        return {};
    }
  }
  if (x.is_power()) return y.gen() == Gen::d ? one(d) : SmallElement();
  if (x.gen() == Gen::b && y.gen() == Gen::c) return one(d);
  if (x.gen() == Gen::c && y.gen() == Gen::b) return one(d, GammaCoeff(-1));
  return {};
}

const SmallTable& standard_small_table() {
  static const SmallTable table = [](const SmallBasis& x, const SmallBasis& y) { return small_mul(x, y); };
  return table;
}

SmallElement small_mul(const SmallElement& x, const SmallElement& y, const SmallTable& table) {
  SmallElement out;
  for (const auto& [bx, cx] : x.terms())
    for (const auto& [by, cy] : y.terms()) out.add(table(bx, by), cx * cy);
  return out;
}

SmallElement small_associator(const SmallElement& x, const SmallElement& y, const SmallElement& z,
                              const SmallTable& table) {
  return small_mul(small_mul(x, y, table), z, table) - small_mul(x, small_mul(y, z, table), table);
}

namespace {

std::vector<SmallElement> basis_up_to(unsigned cap, bool with_e) {
  std::vector<SmallElement> out;
  for (unsigned r = 1; r <= cap; ++r) out.emplace_back(SmallBasis::power(r));
  for (Gen g : {Gen::b, Gen::c, Gen::d}) out.emplace_back(SmallBasis::letter(g));
  if (with_e) out.emplace_back(SmallBasis::letter(Gen::e));
  return out;
}

SmallElement embed(Gen g) {
  return g == Gen::a ? SmallElement(SmallBasis::power(1)) : SmallElement(SmallBasis::letter(g));
}

// Combinations of a-powers whose coefficients sum to zero.
bool in_power_ideal(const SmallElement& x) {
  GammaCoeff total;
  for (const auto& [basis, coeff] : x.terms()) {
    if (!basis.is_power()) return false;
    total += coeff;
  }
  return total.is_zero();
}

}  // namespace

bool small_alternativity_check(unsigned exponent_cap, const SmallTable& table) {
  const auto basis = basis_up_to(exponent_cap, true);
  for (const auto& x : basis)
    for (const auto& y : basis)
      for (const auto& z : basis) {
        const SmallElement xyz = small_associator(x, y, z, table);
        if (xyz != -small_associator(y, x, z, table)) return false;
        if (xyz != -small_associator(x, z, y, table)) return false;
      }
  return true;
}

bool embedding_check(const SmallTable& table) {
  const BracketTable brackets = BracketTable::one_parameter_family();
  for (Gen s : kGenerators)
    for (Gen t : kGenerators) {
      const SmallElement x = embed(s), y = embed(t);
      const SmallElement comm = small_mul(x, y, table) - small_mul(y, x, table);
      SmallElement expected;
      const auto& v = brackets.at(s, t);
      for (Gen g : kGenerators) expected.add(embed(g), v[index(g)]);
      if (comm != expected) return false;
    }
  return true;
}

bool small_ideal_check(unsigned exponent_cap, const SmallTable& table) {
  const auto basis = basis_up_to(exponent_cap, false);
  for (unsigned t = 1; t <= exponent_cap; ++t)
    for (unsigned s = t + 1; s <= exponent_cap; ++s) {
      const SmallElement g = SmallElement(SmallBasis::power(t)) - SmallElement(SmallBasis::power(s));
      for (const auto& x : basis) {
        if (!in_power_ideal(small_mul(x, g, table))) return false;
        if (!in_power_ideal(small_mul(g, x, table))) return false;
      }
    }
  return true;
}

}  // namespace menv
