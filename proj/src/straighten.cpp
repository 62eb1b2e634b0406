#include "menv/straighten.hpp"

#include <stdexcept>

#include "menv/malcev.hpp"

namespace menv {

// ---------------------------------------------------------------------------
// FreeTerm

FreeTerm FreeTerm::gen(Gen g) { return FreeTerm(std::make_shared<const Variant>(Leaf{g})); }

FreeTerm FreeTerm::scalar(const GammaCoeff& c) { return FreeTerm(std::make_shared<const Variant>(Scalar{c})); }

FreeTerm FreeTerm::product(const FreeTerm& left, const FreeTerm& right) {
  return FreeTerm(std::make_shared<const Variant>(Node{left, right}));
}

FreeTerm FreeTerm::sum(std::vector<FreeTerm> parts) {
  return FreeTerm(std::make_shared<const Variant>(Sum{std::move(parts)}));
}

FreeTerm FreeTerm::scaled(const GammaCoeff& factor, const FreeTerm& body) {
  return FreeTerm(std::make_shared<const Variant>(Scaled{factor, body}));
}

FreeTerm associator_term(const FreeTerm& x, const FreeTerm& y, const FreeTerm& z) {
  return (x * y) * z - x * (y * z);
}

FreeTerm commutator_term(const FreeTerm& x, const FreeTerm& y) { return x * y - y * x; }

// ---------------------------------------------------------------------------
// Derivations on generators

Element derivation_on_generator(Gen s, Gen t, Gen g) {
  if (index(s) > index(t)) return -derivation_on_generator(t, s, g);
  const auto gen = [](Gen h, const GammaCoeff& c) { return Element(Monomial::of(h), c); };
  if (s == Gen::a) {
    switch (t) {
      case Gen::b:
        if (g == Gen::a) return gen(Gen::b, -1);
        if (g == Gen::c) return gen(Gen::d, 1);
        return {};
      case Gen::c:
        if (g == Gen::a) return gen(Gen::c, -1);
        if (g == Gen::b) return gen(Gen::d, -1);
        return {};
      case Gen::d:
        return g == Gen::a ? gen(Gen::d, -1) : Element();
      case Gen::e:
        return g == Gen::a ? gen(Gen::e, GammaCoeff::monomial(2, -1)) : Element();
      default:
        return {};
    }
  }
  if (s == Gen::b && t == Gen::c && g == Gen::a) return gen(Gen::d, 1);
  return {};
}

namespace {

bool derivation_is_zero(Gen s, Gen t) {
  if (index(s) > index(t)) std::swap(s, t);
  if (s == t) return true;
  if (s == Gen::a) return false;
  return !(s == Gen::b && t == Gen::c);
}

}  // namespace

// ---------------------------------------------------------------------------
// Straightener

class Straightener::DepthGuard {
 public:
  explicit DepthGuard(int& depth) : depth_(depth) {
    if (++depth_ > kMaxDepth) {
      depth_ = 0;
      throw std::logic_error("straightening recursion did not terminate");
    }
  }
  ~DepthGuard() {
    if (depth_ > 0) --depth_;
  }
  DepthGuard(const DepthGuard&) = delete;
  DepthGuard& operator=(const DepthGuard&) = delete;

 private:
  int& depth_;
};

Element Straightener::left_mul_gen_element(Gen s, const Element& x) {
  Element out;
  for (const auto& [mono, coeff] : x.terms()) out.add(left_mul_gen(s, mono), coeff);
  return out;
}

Element Straightener::bracket_element_gen(const Element& x, Gen s) {
  Element out;
  for (const auto& [mono, coeff] : x.terms()) out.add(bracket_mono_gen(mono, s), coeff);
  return out;
}

// [x, g] for a degree-one element g.
Element Straightener::bracket_element_element(const Element& x, const Element& g) {
  Element out;
  for (const auto& [gmono, gcoeff] : g.terms()) out.add(bracket_element_gen(x, *gmono.leading()), gcoeff);
  return out;
}

Element Straightener::bracket_mono_gen(const Monomial& x, Gen s) {
  if (x.is_unit()) return {};
  GenKey key{s, x};
  if (auto it = bracket_cache_.find(key); it != bracket_cache_.end()) return it->second;
  DepthGuard guard(depth_);

  const Gen t = *x.leading();
  const Monomial y = x.tail();
  // [t y, s] = [t,s] y + t [y,s] - D_{s,t}(y) - [y,[s,t]]
  const Element st = bracket_gen_gen(s, t);
  Element out;
  for (const auto& [gmono, gcoeff] : st.terms()) out.add(left_mul_gen(*gmono.leading(), y), -gcoeff);
  out += left_mul_gen_element(t, bracket_mono_gen(y, s));
  out -= derive(s, t, y);
  out -= bracket_element_element(Element(y), st);

  bracket_cache_.emplace(key, out);
  return out;
}

Element Straightener::left_mul_gen(Gen s, const Monomial& x) {
  const auto lead = x.leading();
  if (!lead || index(s) <= index(*lead)) return Element(x.times(s));
  GenKey key{s, x};
  if (auto it = left_cache_.find(key); it != left_cache_.end()) return it->second;
  DepthGuard guard(depth_);

  const Gen t = *lead;
  const Monomial y = x.tail();
  // s (t y) = t (s y) + [s,t] y + 2/3 D_{s,t}(y) + 2/3 [y,[s,t]]
  const Element st = bracket_gen_gen(s, t);
  const Rational two_thirds(2, 3);
  Element out = left_mul_gen_element(t, left_mul_gen(s, y));
  for (const auto& [gmono, gcoeff] : st.terms()) out.add(left_mul_gen(*gmono.leading(), y), gcoeff);
  out.add(derive(s, t, y), two_thirds);
  out.add(bracket_element_element(Element(y), st), two_thirds);

  left_cache_.emplace(key, out);
  return out;
}

Element Straightener::derive(Gen s, Gen t, const Monomial& x) {
  if (x.is_unit() || derivation_is_zero(s, t)) return {};
  DeriveKey key{s, t, x};
  if (auto it = derive_cache_.find(key); it != derive_cache_.end()) return it->second;
  DepthGuard guard(depth_);

  // Leibniz over the left-tapped factorization x = u x'.
  const Gen u = *x.leading();
  const Monomial rest = x.tail();
  Element out;
  const Element du = derivation_on_generator(s, t, u);
  for (const auto& [gmono, gcoeff] : du.terms())
    out.add(left_mul_gen(*gmono.leading(), rest), gcoeff);
  out += left_mul_gen_element(u, derive(s, t, rest));

  derive_cache_.emplace(key, out);
  return out;
}

Element Straightener::mul_oracle(const Monomial& x, const Monomial& z) {
  if (x.is_unit()) return Element(z);
  const Gen s = *x.leading();
  const Monomial rest = x.tail();
  if (rest.is_unit()) return left_mul_gen(s, z);
  PairKey key{x, z};
  if (auto it = product_cache_.find(key); it != product_cache_.end()) return it->second;
  DepthGuard guard(depth_);

  // (s x') z = 2 s (x' z) - x' (s z) - x' [z,s] + [x' z, s]
  const Element rest_z = mul_oracle(rest, z);
  Element out;
  out.add(left_mul_gen_element(s, rest_z), GammaCoeff(2));
  const Element s_z = left_mul_gen(s, z);
  for (const auto& [mono, coeff] : s_z.terms()) out.add(mul_oracle(rest, mono), -coeff);
  const Element z_s = bracket_mono_gen(z, s);
  for (const auto& [mono, coeff] : z_s.terms()) out.add(mul_oracle(rest, mono), -coeff);
  out += bracket_element_gen(rest_z, s);

  product_cache_.emplace(key, out);
  return out;
}

Element Straightener::mul(const Element& x, const Element& y) {
  Element out;
  for (const auto& [mx, cx] : x.terms())
    for (const auto& [my, cy] : y.terms()) out.add(mul_oracle(mx, my), cx * cy);
  return out;
}

Element Straightener::straighten(const FreeTerm& term) {
  return std::visit(
      [this](const auto& node) -> Element {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, FreeTerm::Leaf>) {
          return generator(node.gen);
        } else if constexpr (std::is_same_v<T, FreeTerm::Scalar>) {
          return scalar(node.value);
        } else if constexpr (std::is_same_v<T, FreeTerm::Node>) {
          return mul(straighten(node.left), straighten(node.right));
        } else if constexpr (std::is_same_v<T, FreeTerm::Sum>) {
          Element out;
          for (const auto& part : node.parts) out += straighten(part);
          return out;
        } else {
          return node.factor * straighten(node.body);
        }
      },
      term.node());
}

namespace {

Straightener& local_straightener() {
  static thread_local Straightener instance;
  return instance;
}

}  // namespace

Element mul_oracle(const Monomial& x, const Monomial& z) { return local_straightener().mul_oracle(x, z); }

Element straighten(const FreeTerm& term) { return local_straightener().straighten(term); }

}  // namespace menv
