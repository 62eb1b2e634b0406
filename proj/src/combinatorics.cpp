#include "menv/combinatorics.hpp"

#include <map>
#include <tuple>

namespace menv {

Integer factorial(unsigned n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

Integer binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

Integer multinomial(unsigned n, std::initializer_list<unsigned> parts) {
  Integer out = 1;
  unsigned remaining = n;
  for (unsigned p : parts) {
    if (p > remaining) return 0;
    out *= binomial(remaining, p);
    remaining -= p;
  }
  return out;
}

Integer falling_factorial(unsigned n, unsigned r) {
  if (r > n) return 0;
  Integer out = 1;
  for (unsigned t = 0; t < r; ++t) out *= n - t;
  return out;
}

Integer stirling2(unsigned r, unsigned s) {
  // (1/s!) sum_t (-1)^(s-t) C(s,t) t^r, with 0^0 = 1.
  Integer acc = 0;
  for (unsigned t = 0; t <= s; ++t) {
    Integer power;
    mpz_ui_pow_ui(power.get_mpz_t(), t, r);
    Integer term = binomial(s, t) * power;
    if ((s - t) % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  Integer out;
  mpz_divexact(out.get_mpz_t(), acc.get_mpz_t(), factorial(s).get_mpz_t());
  return out;
}

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Integer IntPoly::evaluate(const Integer& u) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * u + *it;
  return acc;
}

IntPoly& IntPoly::operator+=(const IntPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t t = 0; t < other.coeffs_.size(); ++t) coeffs_[t] += other.coeffs_[t];
  trim();
  return *this;
}

IntPoly operator*(const IntPoly& x, const IntPoly& y) {
  if (x.is_zero() || y.is_zero()) return {};
  std::vector<Integer> out(x.coeffs_.size() + y.coeffs_.size() - 1, Integer(0));
  for (std::size_t s = 0; s < x.coeffs_.size(); ++s)
    for (std::size_t t = 0; t < y.coeffs_.size(); ++t) out[s + t] += x.coeffs_[s] * y.coeffs_[t];
  return IntPoly(std::move(out));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::string IntPoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int t = static_cast<int>(coeffs_.size()) - 1; t >= 0; --t) {
    const Integer& c = coeffs_[static_cast<std::size_t>(t)];
    if (c == 0) continue;
    Integer magnitude = abs(c);
    std::string summand;
    if (magnitude != 1 || t == 0) summand = magnitude.get_str();
    if (t > 0) {
      if (!summand.empty()) summand += ' ';
      summand += var;
      if (t > 1) summand += '^' + std::to_string(t);
    }
    if (out.empty())
      out = (c < 0 ? "-" : "") + summand;
    else
      out += (c < 0 ? " - " : " + ") + summand;
  }
  return out;
}

namespace {

bool x_poly_support(int i, int kappa, int delta, int eps) {
  return i >= 0 && kappa >= 0 && kappa <= i && delta >= 0 && delta <= i - kappa && eps >= 0 &&
         eps <= i - kappa - delta;
}

}  // namespace

IntPoly x_poly(int i, int kappa, int delta, int eps) {
  if (!x_poly_support(i, kappa, delta, eps)) return {};
  const auto ui = static_cast<unsigned>(i), uk = static_cast<unsigned>(kappa);
  const auto de = static_cast<unsigned>(delta + eps);
  std::vector<Integer> coeffs(ui - uk - de + 1, Integer(0));
  const Integer lead = binomial(de, static_cast<unsigned>(eps));
  for (unsigned zeta = 0; zeta + uk + de <= ui; ++zeta)
    coeffs[zeta] = lead * multinomial(ui, {uk, zeta}) * stirling2(ui - uk - zeta, de);
  return IntPoly(std::move(coeffs));
}

IntPoly x_poly_by_recurrence(int i, int kappa, int delta, int eps) {
  if (!x_poly_support(i, kappa, delta, eps)) return {};
  if (i == 0) return IntPoly::constant(1);
  static thread_local std::map<std::tuple<int, int, int, int>, IntPoly> cache;
  auto key = std::make_tuple(i, kappa, delta, eps);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  IntPoly factor = IntPoly::variable() + IntPoly::constant(delta + eps);
  IntPoly out = factor * x_poly_by_recurrence(i - 1, kappa, delta, eps);
  out += x_poly_by_recurrence(i - 1, kappa - 1, delta, eps);
  out += x_poly_by_recurrence(i - 1, kappa, delta - 1, eps);
  out += x_poly_by_recurrence(i - 1, kappa, delta, eps - 1);
  cache.emplace(key, out);
  return out;
}

}  // namespace menv
