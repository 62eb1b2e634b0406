#pragma once

#include <functional>
#include <string>

#include "menv/combination.hpp"
#include "menv/monomial.hpp"

namespace menv {

/// Basis of the small alternative envelope A_gamma: a^r (r >= 1), b, c, d, e.
class SmallBasis {
 public:
  /// a^r; throws std::invalid_argument for r == 0.
  static SmallBasis power(unsigned r);
  /// One of b, c, d, e; for a use power(1).
  static SmallBasis letter(Gen g);

  bool is_power() const { return gen_ == Gen::a; }
  Gen gen() const { return gen_; }
  /// Exponent of a; 0 for b, c, d, e.
  unsigned exponent() const { return exponent_; }

  friend auto operator<=>(const SmallBasis&, const SmallBasis&) = default;

 private:
  SmallBasis(Gen g, unsigned r) : gen_(g), exponent_(r) {}
  Gen gen_;
  unsigned exponent_;
};

std::string to_string(const SmallBasis& x);

using SmallElement = Combination<SmallBasis>;

/// Product of two basis elements. Replaceable so that checks can be run
/// against a modified table.
using SmallTable = std::function<SmallElement(const SmallBasis&, const SmallBasis&)>;

/// The defining table: a^r a^s = a^{r+s}, a^r d = d, b a^r = b, b c = d,
/// c a^r = c, c b = -d, e a^r = (-gamma)^r e; every other product is 0.
SmallElement small_mul(const SmallBasis& x, const SmallBasis& y);
/// small_mul wrapped as a SmallTable.
const SmallTable& standard_small_table();

SmallElement small_mul(const SmallElement& x, const SmallElement& y, const SmallTable& table = standard_small_table());
SmallElement small_associator(const SmallElement& x, const SmallElement& y, const SmallElement& z,
                              const SmallTable& table = standard_small_table());

/// Associator skew-symmetry under both adjacent transpositions, on all basis
/// triples with a-exponents <= exponent_cap, identically in gamma.
bool small_alternativity_check(unsigned exponent_cap, const SmallTable& table = standard_small_table());

/// Commutators of a, b, c, d, e in A_gamma reproduce the bracket of M_gamma.
bool embedding_check(const SmallTable& table = standard_small_table());

/// span{a^t - a^s} is a two-sided ideal of span{a^r, b, c, d}, checked on
/// products with exponents <= exponent_cap.
bool small_ideal_check(unsigned exponent_cap, const SmallTable& table = standard_small_table());

}  // namespace menv
