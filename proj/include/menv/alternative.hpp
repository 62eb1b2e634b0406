#pragma once

#include <string>
#include <vector>

#include "menv/element.hpp"

namespace menv {

/// Basis of the alternative quotient A(M_gamma) = U(M_gamma) / J with
/// J = (bd, cd, d^2, de): either a^i d (type 1) or a^r b^n c^p e^s (type 2).
/// Stored as the representing PBW monomial, which fixes the ordering and
/// the printed form.
class AltMonomial {
 public:
  static AltMonomial type1(unsigned i) { return AltMonomial(Monomial(i, 0, 0, 1, 0)); }
  static AltMonomial type2(unsigned r, unsigned n, unsigned p, unsigned s) {
    return AltMonomial(Monomial(r, n, p, 0, s));
  }
  static AltMonomial unit() { return type2(0, 0, 0, 0); }

  bool is_type1() const { return mono_[Gen::d] == 1; }
  const Monomial& monomial() const { return mono_; }
  unsigned operator[](Gen g) const { return mono_[g]; }

  friend auto operator<=>(const AltMonomial&, const AltMonomial&) = default;

 private:
  explicit AltMonomial(const Monomial& m) : mono_(m) {}
  Monomial mono_;
};

inline std::string to_string(const AltMonomial& x) { return to_string(x.monomial()); }

using AltElement = Combination<AltMonomial>;

/// Projection U(M_gamma) -> A(M_gamma): monomials in J go to zero, the rest
/// to their coset representative.
AltElement reduce_mod_J(const Element& x);

/// The representing element of U(M_gamma) (a linear section of reduce_mod_J).
Element lift(const AltElement& x);

AltElement alt_mul(const AltMonomial& x, const AltMonomial& y);
AltElement alt_mul(const AltElement& x, const AltElement& y);
AltElement alt_associator(const AltElement& x, const AltElement& y, const AltElement& z);

/// T^{ir}_{jk}, the correction term of b^j c^k times b^{1-j} c^{1-k}.
/// Throws std::invalid_argument unless j, k are 0 or 1.
AltElement t_correction(unsigned i, unsigned r, unsigned j, unsigned k);

struct AlternatorCheck {
  std::string name;
  Element computed;
  Element expected;
  bool matches = false;
  bool vanishes_mod_J = false;
};

struct AlternatorReport {
  std::vector<AlternatorCheck> checks;
  bool ok() const;
  /// One line per failed check; empty when ok().
  std::vector<std::string> failures() const;
};

/// Recomputes (c,ab,ab), (b,ac,ac), (a,bc,bc) and (ac,be,a) + (be,ac,a) in
/// U(M_gamma) and compares them with -bd, cd, 2d^2 and gamma de. Each must
/// also vanish modulo J.
AlternatorReport alternator_generators_check();

/// reduce_mod_J(x z) == alt_mul(reduce_mod_J(x), reduce_mod_J(z)) for all
/// monomials x, z of total degree <= degree_bound.
bool quotient_homomorphism_check(unsigned degree_bound);

}  // namespace menv
