#pragma once

#include <cstddef>
#include <memory>
#include <tuple>
#include <unordered_map>
#include <variant>
#include <vector>

#include "menv/element.hpp"

namespace menv {

/// Unreduced expression in the unital free nonassociative algebra on
/// {a,b,c,d,e}. Immutable; subtrees are shared.
class FreeTerm {
 public:
  struct Leaf;
  struct Scalar;
  struct Node;
  struct Sum;
  struct Scaled;
  using Variant = std::variant<Leaf, Scalar, Node, Sum, Scaled>;

  static FreeTerm gen(Gen g);
  static FreeTerm scalar(const GammaCoeff& c);
  static FreeTerm product(const FreeTerm& left, const FreeTerm& right);
  static FreeTerm sum(std::vector<FreeTerm> parts);
  static FreeTerm scaled(const GammaCoeff& factor, const FreeTerm& body);

  const Variant& node() const;

  friend FreeTerm operator*(const FreeTerm& x, const FreeTerm& y) { return product(x, y); }
  friend FreeTerm operator+(const FreeTerm& x, const FreeTerm& y) { return sum({x, y}); }
  friend FreeTerm operator-(const FreeTerm& x, const FreeTerm& y) {
    return sum({x, scaled(GammaCoeff(-1), y)});
  }

 private:
  explicit FreeTerm(std::shared_ptr<const Variant> node) : node_(std::move(node)) {}
  std::shared_ptr<const Variant> node_;
};

struct FreeTerm::Leaf {
  Gen gen;
};
struct FreeTerm::Scalar {
  GammaCoeff value;
};
struct FreeTerm::Node {
  FreeTerm left, right;
};
struct FreeTerm::Sum {
  std::vector<FreeTerm> parts;
};
struct FreeTerm::Scaled {
  GammaCoeff factor;
  FreeTerm body;
};

inline const FreeTerm::Variant& FreeTerm::node() const { return *node_; }

/// (x y) z - x (y z) as a free term.
FreeTerm associator_term(const FreeTerm& x, const FreeTerm& y, const FreeTerm& z);
/// x y - y x as a free term.
FreeTerm commutator_term(const FreeTerm& x, const FreeTerm& y);

/// Ground-truth multiplication in U(M_gamma) by recursive PBW straightening.
///
/// Everything is derived from the bracket of the algebra, the values of the
/// derivations D_{s,t} on generators, and three rewriting identities valid
/// for a basis monomial x = t y (t its smallest generator) and s in M:
///
///   [t y, s] = [t,s] y + t [y,s] - D_{s,t}(y) - [y,[s,t]]
///   s (t y)  = t (s y) + [s,t] y + 2/3 D_{s,t}(y) + 2/3 [y,[s,t]]
///   (s x) z  = 2 s (x z) - x (s z) - x [z,s] + [x z, s]
///
/// Every intermediate product is normalized to an Element before the next
/// rewrite, so the identities are only ever applied to basis monomials.
/// Results are memoized per instance; an instance is not thread safe, use
/// one per thread.
class Straightener {
 public:
  /// [x, s]
  Element bracket_mono_gen(const Monomial& x, Gen s);
  /// s x
  Element left_mul_gen(Gen s, const Monomial& x);
  /// x z
  Element mul_oracle(const Monomial& x, const Monomial& z);
  /// D_{s,t}(x), extended from generators by the Leibniz rule.
  Element derive(Gen s, Gen t, const Monomial& x);
  /// Image of a free term in U(M_gamma).
  Element straighten(const FreeTerm& term);
  /// Bilinear extension of mul_oracle.
  Element mul(const Element& x, const Element& y);

  /// Calls nested deeper than this raise std::logic_error.
  static constexpr int kMaxDepth = 4096;

 private:
  struct GenKey {
    Gen gen;
    Monomial mono;
    bool operator==(const GenKey&) const = default;
  };
  struct GenKeyHash {
    std::size_t operator()(const GenKey& k) const noexcept {
      return MonomialHash{}(k.mono) * 7u + index(k.gen);
    }
  };
  struct PairKey {
    Monomial x, z;
    bool operator==(const PairKey&) const = default;
  };
  struct PairKeyHash {
    std::size_t operator()(const PairKey& k) const noexcept {
      return MonomialHash{}(k.x) * 1000033u ^ MonomialHash{}(k.z);
    }
  };
  struct DeriveKey {
    Gen s, t;
    Monomial mono;
    bool operator==(const DeriveKey&) const = default;
  };
  struct DeriveKeyHash {
    std::size_t operator()(const DeriveKey& k) const noexcept {
      return MonomialHash{}(k.mono) * 31u + index(k.s) * 5u + index(k.t);
    }
  };

  class DepthGuard;

  Element left_mul_gen_element(Gen s, const Element& x);
  Element bracket_element_gen(const Element& x, Gen s);
  Element bracket_element_element(const Element& x, const Element& g);

  std::unordered_map<GenKey, Element, GenKeyHash> bracket_cache_;
  std::unordered_map<GenKey, Element, GenKeyHash> left_cache_;
  std::unordered_map<PairKey, Element, PairKeyHash> product_cache_;
  std::unordered_map<DeriveKey, Element, DeriveKeyHash> derive_cache_;
  int depth_ = 0;
};

/// D_{s,t}(g) for a generator g.
Element derivation_on_generator(Gen s, Gen t, Gen g);

/// Convenience entry points backed by a thread-local Straightener.
Element mul_oracle(const Monomial& x, const Monomial& z);
Element straighten(const FreeTerm& term);

}  // namespace menv
