#include "menv/monomial.hpp"

#include <algorithm>
#include <cstdlib>

#include "menv/element.hpp"

namespace menv {

std::optional<Gen> gen_from_char(char ch) {
  if (ch < 'a' || ch > 'e') return std::nullopt;
  return static_cast<Gen>(ch - 'a');
}

std::optional<Gen> Monomial::leading() const {
  for (Gen g : kGenerators)
    if (exps[index(g)] > 0) return g;
  return std::nullopt;
}

Monomial Monomial::tail() const {
  Monomial x = *this;
  auto lead = leading();
  if (!lead) std::abort();
  --x.exps[index(*lead)];
  return x;
}

std::string to_string(const Monomial& x) {
  if (x.is_unit()) return "1";
  std::string out;
  for (Gen g : kGenerators) {
    unsigned p = x[g];
    if (p == 0) continue;
    if (!out.empty()) out += ' ';
    out += name(g);
    if (p > 1) out += '^' + std::to_string(p);
  }
  return out;
}

unsigned degree(const Element& x) {
  unsigned d = 0;
  for (const auto& [mono, coeff] : x.terms()) d = std::max(d, mono.degree());
  return d;
}

namespace detail {

std::string format_terms(const std::vector<std::pair<std::string, GammaCoeff>>& terms) {
  std::string out;
  for (const auto& [key, coeff] : terms) {
    for (int t = coeff.degree(); t >= 0; --t) {
      Rational c = coeff.coeff(static_cast<std::size_t>(t));
      if (c == 0) continue;
      bool negative = c < 0;
      Rational magnitude = abs(c);
      std::string summand;
      auto append = [&summand](const std::string& part) {
        if (!summand.empty()) summand += ' ';
        summand += part;
      };
      if (magnitude != 1 || (t == 0 && key == "1")) append(to_string(magnitude));
      if (t == 1) append("g");
      if (t > 1) append("g^" + std::to_string(t));
      if (key != "1" || summand.empty()) append(key);
      if (out.empty())
        out = (negative ? "-" : "") + summand;
      else
        out += (negative ? " - " : " + ") + summand;
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace detail

}  // namespace menv
