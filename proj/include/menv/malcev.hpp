#pragma once

#include <array>

#include "menv/element.hpp"

namespace menv {

/// Anticommutative bracket on the 5-dimensional space span{a,b,c,d,e}
/// with Q[gamma] structure constants.
class BracketTable {
 public:
  using Vector = std::array<GammaCoeff, 5>;

  /// The all-zero (abelian) bracket.
  BracketTable() = default;

  /// [b,c] = 2d, [a,b] = -b, [a,c] = -c, [a,d] = d, [a,e] = gamma e.
  static BracketTable one_parameter_family();

  /// Sets [s,t] = value and [t,s] = -value.
  void set(Gen s, Gen t, const Vector& value);
  const Vector& at(Gen s, Gen t) const { return table_[index(s)][index(t)]; }

  Vector bracket(const Vector& x, const Vector& y) const;

 private:
  std::array<std::array<Vector, 5>, 5> table_{};
};

BracketTable::Vector basis_vector(Gen g, const GammaCoeff& c = GammaCoeff(1));

/// [s,t] of the one-parameter family as a degree-one element of U(M).
Element bracket_gen_gen(Gen s, Gen t);

/// True iff the Malcev identity
///   [[x,y],[x,z]] = [[[x,y],z],x] + [[[y,z],x],x] + [[[z,x],x],y]
/// holds identically in gamma. The identity is quadratic in x, so it is
/// checked in linearized form on all basis quadruples, which is equivalent
/// to checking it for all x, y, z.
bool verify_malcev(const BracketTable& table);

}  // namespace menv
