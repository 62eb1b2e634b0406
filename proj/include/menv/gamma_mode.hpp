#pragma once

#include <optional>
#include <string>

#include "menv/rational.hpp"

namespace menv {

/// Either symbolic gamma, or gamma fixed to a nonzero rational.
class GammaMode {
 public:
  static GammaMode symbolic() { return GammaMode(); }
  /// Throws std::domain_error when gamma0 == 0.
  static GammaMode instantiated(const Rational& gamma0);
  /// "symbolic" or a rational string such as "2/3".
  static GammaMode parse(const std::string& text);

  bool is_symbolic() const { return !value_.has_value(); }
  const Rational& value() const { return *value_; }
  std::string to_string() const;

  friend bool operator==(const GammaMode& x, const GammaMode& y) {
    return x.value_ == y.value_;
  }

 private:
  GammaMode() = default;
  std::optional<Rational> value_;
};

}  // namespace menv
