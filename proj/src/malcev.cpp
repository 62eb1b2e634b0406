#include "menv/malcev.hpp"

namespace menv {

namespace {

using Vector = BracketTable::Vector;

Vector add(Vector x, const Vector& y) {
  for (std::size_t u = 0; u < 5; ++u) x[u] += y[u];
  return x;
}

Vector sub(Vector x, const Vector& y) {
  for (std::size_t u = 0; u < 5; ++u) x[u] -= y[u];
  return x;
}

bool is_zero(const Vector& x) {
  for (const auto& c : x)
    if (!c.is_zero()) return false;
  return true;
}

// [[x,y],[x,z]] - [[[x,y],z],x] - [[[y,z],x],x] - [[[z,x],x],y]
Vector malcev_defect(const BracketTable& t, const Vector& x, const Vector& y, const Vector& z) {
  Vector xy = t.bracket(x, y);
  Vector lhs = t.bracket(xy, t.bracket(x, z));
  Vector r1 = t.bracket(t.bracket(xy, z), x);
  Vector r2 = t.bracket(t.bracket(t.bracket(y, z), x), x);
  Vector r3 = t.bracket(t.bracket(t.bracket(z, x), x), y);
  return sub(sub(sub(lhs, r1), r2), r3);
}

}  // namespace

Vector basis_vector(Gen g, const GammaCoeff& c) {
  Vector v{};
  v[index(g)] = c;
  return v;
}

BracketTable BracketTable::one_parameter_family() {
  BracketTable t;
  t.set(Gen::b, Gen::c, basis_vector(Gen::d, 2));
  t.set(Gen::a, Gen::b, basis_vector(Gen::b, -1));
  t.set(Gen::a, Gen::c, basis_vector(Gen::c, -1));
  t.set(Gen::a, Gen::d, basis_vector(Gen::d, 1));
  t.set(Gen::a, Gen::e, basis_vector(Gen::e, GammaCoeff::gamma()));
  return t;
}

void BracketTable::set(Gen s, Gen t, const Vector& value) {
  table_[index(s)][index(t)] = value;
  Vector negated;
  for (std::size_t u = 0; u < 5; ++u) negated[u] = -value[u];
  table_[index(t)][index(s)] = negated;
}

Vector BracketTable::bracket(const Vector& x, const Vector& y) const {
  Vector out{};
  for (std::size_t s = 0; s < 5; ++s) {
    if (x[s].is_zero()) continue;
    for (std::size_t t = 0; t < 5; ++t) {
      if (y[t].is_zero()) continue;
      GammaCoeff c = x[s] * y[t];
      const Vector& st = table_[s][t];
      for (std::size_t u = 0; u < 5; ++u)
        if (!st[u].is_zero()) out[u] += c * st[u];
    }
  }
  return out;
}

Element bracket_gen_gen(Gen s, Gen t) {
  static const BracketTable table = BracketTable::one_parameter_family();
  Element out;
  const Vector& v = table.at(s, t);
  for (Gen g : kGenerators) out.add(Monomial::of(g), v[index(g)]);
  return out;
}

bool verify_malcev(const BracketTable& table) {
  // The defect is quadratic in x and linear in y, z; polarizing x gives
  // f(x1+x2,y,z) - f(x1,y,z) - f(x2,y,z), which vanishes on all basis
  // quadruples iff the identity holds for all x, y, z.
  for (Gen x1 : kGenerators) {
    for (Gen x2 : kGenerators) {
      if (index(x2) < index(x1)) continue;
      for (Gen y : kGenerators) {
        for (Gen z : kGenerators) {
          Vector vy = basis_vector(y), vz = basis_vector(z);
          Vector v1 = basis_vector(x1), v2 = basis_vector(x2);
          Vector defect;
          if (x1 == x2) {
            defect = malcev_defect(table, v1, vy, vz);
          } else {
            defect = sub(sub(malcev_defect(table, add(v1, v2), vy, vz), malcev_defect(table, v1, vy, vz)),
                         malcev_defect(table, v2, vy, vz));
          }
          if (!is_zero(defect)) return false;
        }
      }
    }
  }
  return true;
}

}  // namespace menv
