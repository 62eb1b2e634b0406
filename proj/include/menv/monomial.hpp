#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

namespace menv {

/// Basis of the Malcev algebra, totally ordered a < b < c < d < e.
enum class Gen : std::uint8_t { a = 0, b, c, d, e };

inline constexpr std::array<Gen, 5> kGenerators = {Gen::a, Gen::b, Gen::c, Gen::d, Gen::e};

constexpr std::size_t index(Gen g) { return static_cast<std::size_t>(g); }
constexpr char name(Gen g) { return static_cast<char>('a' + static_cast<int>(g)); }
std::optional<Gen> gen_from_char(char ch);

/// Left-tapped PBW monomial a^i b^j c^k d^l e^m of U(M).
///
/// The basis element is the right-nested product x1(x2(...(x_{n-1} x_n)))
/// of its generators in increasing order; the exponent tuple alone names it.
struct Monomial {
  std::array<unsigned, 5> exps{};

  constexpr Monomial() = default;
  constexpr Monomial(unsigned i, unsigned j, unsigned k, unsigned l, unsigned m)
      : exps{i, j, k, l, m} {}

  static constexpr Monomial unit() { return Monomial(); }
  static constexpr Monomial of(Gen g, unsigned power = 1) {
    Monomial x;
    x.exps[index(g)] = power;
    return x;
  }

  unsigned operator[](Gen g) const { return exps[index(g)]; }
  unsigned& operator[](Gen g) { return exps[index(g)]; }

  unsigned degree() const { return exps[0] + exps[1] + exps[2] + exps[3] + exps[4]; }
  bool is_unit() const { return degree() == 0; }

  /// Smallest generator occurring in the monomial (the outermost left factor).
  std::optional<Gen> leading() const;
  /// The monomial with one copy of leading() removed. Requires !is_unit().
  Monomial tail() const;
  Monomial times(Gen g, unsigned power = 1) const {
    Monomial x = *this;
    x.exps[index(g)] += power;
    return x;
  }

  auto operator<=>(const Monomial&) const = default;
};

/// "a^2 b c^3 e"; the unit prints as "1".
std::string to_string(const Monomial& x);

struct MonomialHash {
  std::size_t operator()(const Monomial& x) const noexcept {
    std::size_t h = 0;
    for (unsigned v : x.exps) h = h * 1000003u + v;
    return h;
  }
};

}  // namespace menv
