#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "menv/gamma_coeff.hpp"

namespace menv {

/// Finite sparse linear combination of basis keys with Q[gamma] coefficients.
///
/// No stored coefficient is ever zero, so the zero combination is the empty
/// map and equality is key-by-key. Keys are kept in increasing order, which
/// gives every combination a deterministic iteration order.
template <class Key>
class Combination {
 public:
  using key_type = Key;
  using Map = std::map<Key, GammaCoeff>;

  Combination() = default;
  explicit Combination(const Key& key, const GammaCoeff& coeff = GammaCoeff(1)) {
    add(key, coeff);
  }

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  GammaCoeff coefficient(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? GammaCoeff() : it->second;
  }

  void add(const Key& key, const GammaCoeff& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  /// this += scale * other
  void add(const Combination& other, const GammaCoeff& scale) {
    if (scale.is_zero()) return;
    for (const auto& [key, coeff] : other.terms_) add(key, coeff * scale);
  }

  Combination& operator+=(const Combination& other) {
    for (const auto& [key, coeff] : other.terms_) add(key, coeff);
    return *this;
  }
  Combination& operator-=(const Combination& other) {
    for (const auto& [key, coeff] : other.terms_) add(key, -coeff);
    return *this;
  }
  Combination& operator*=(const GammaCoeff& scale) {
    if (scale.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& entry : terms_) entry.second *= scale;
    return *this;
  }

  friend Combination operator+(Combination x, const Combination& y) { return x += y; }
  friend Combination operator-(Combination x, const Combination& y) { return x -= y; }
  friend Combination operator-(Combination x) { return x *= GammaCoeff(-1); }
  friend Combination operator*(const GammaCoeff& c, Combination x) { return x *= c; }
  friend Combination operator*(Combination x, const GammaCoeff& c) { return x *= c; }
  friend bool operator==(const Combination& x, const Combination& y) {
    return x.terms_ == y.terms_;
  }

  /// Linear extension of a map from keys to combinations.
  template <class F>
  auto map_linear(F&& f) const -> decltype(f(std::declval<const Key&>())) {
    decltype(f(std::declval<const Key&>())) out;
    for (const auto& [key, coeff] : terms_) out.add(f(key), coeff);
    return out;
  }

 private:
  Map terms_;
};

namespace detail {
std::string format_terms(const std::vector<std::pair<std::string, GammaCoeff>>& terms);
}

/// Text form, highest key first, one summand per (key, gamma power), e.g.
/// "a b c + b c - 2 d" or "g^2 b - b". The output is accepted by the
/// expression parser whenever keys print as monomial literals.
template <class Key>
std::string to_string(const Combination<Key>& x) {
  std::vector<std::pair<std::string, GammaCoeff>> terms;
  for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it)
    terms.emplace_back(to_string(it->first), it->second);
  return detail::format_terms(terms);
}

}  // namespace menv
