#include "menv/verify.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "menv/operators.hpp"
#include "menv/product.hpp"
#include "menv/straighten.hpp"

namespace menv {

SuiteBounds SuiteBounds::from_environment() {
  SuiteBounds bounds;
  if (const char* env = std::getenv("MENV_MAX_EXP")) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value >= 0) bounds.override_all(static_cast<unsigned>(value));
  }
  return bounds;
}

void SuiteBounds::override_all(unsigned bound) {
  oracle_max_exp = nalt_max_degree = alt_max_degree = small_cap = bound;
}

SuiteResult verify_engines(unsigned max_exp) {
  SuiteResult result{"oracle", true, {}};
  const auto monos = monomials_with_exponents_up_to(max_exp);
  Straightener oracle;
  std::size_t mismatches = 0;
  std::string first;
  for (const auto& x : monos) {
    const CompositeOp left = left_op_monomial(x);
    for (const auto& z : monos) {
      const Element closed = mul_closed(x, z);
      if (closed == left.apply(z) && closed == oracle.mul_oracle(x, z)) continue;
      if (mismatches++ == 0) first = "; first mismatch at " + to_string(x) + " * " + to_string(z);
    }
  }
  result.passed = mismatches == 0;
  result.detail = std::to_string(monos.size() * monos.size()) + " pairs, exponents <= " + std::to_string(max_exp) +
                  ", " + std::to_string(mismatches) + " mismatches" + first;
  return result;
}

SuiteResult verify_nalt(unsigned max_degree) {
  SuiteResult result{"nalt", true, {}};
  const auto monos = monomials_up_to_degree(max_degree);
  std::size_t checked = 0;
  for (Gen g : kGenerators) {
    const Element s = generator(g);
    for (const auto& mx : monos)
      for (const auto& my : monos) {
        const Element x(mx), y(my);
        const Element xsy = associator(x, s, y);
        ++checked;
        if ((associator(s, x, y) + xsy).is_zero() && (xsy + associator(x, y, s)).is_zero()) continue;
        result.passed = false;
        result.detail = "fails for s = " + std::string(1, name(g)) + ", x = " + to_string(mx) +
                        ", y = " + to_string(my);
        return result;
      }
  }
  result.detail = std::to_string(checked) + " triples, degree <= " + std::to_string(max_degree);
  return result;
}

SuiteResult verify_malcev_suite() {
  SuiteResult result{"malcev", true, {}};
  const bool family = verify_malcev(BracketTable::one_parameter_family());
  BracketTable perturbed = BracketTable::one_parameter_family();
  perturbed.set(Gen::b, Gen::c, basis_vector(Gen::e, GammaCoeff(2)));
  const bool control = verify_malcev(perturbed);
  result.passed = family && !control;
  result.detail = std::string("family ") + (family ? "satisfies" : "violates") +
                  " the identity; perturbed [b,c] = 2e " + (control ? "satisfies" : "violates") + " it";
  return result;
}

SuiteResult verify_alt(unsigned max_degree, unsigned random_pairs) {
  SuiteResult result{"alt", true, {}};
  std::ostringstream detail;
  const AlternatorReport report = alternator_generators_check();
  if (!report.ok()) {
    result.passed = false;
    for (const auto& line : report.failures()) detail << line << "; ";
  }
  const bool hom = quotient_homomorphism_check(max_degree);
  if (!hom) result.passed = false;
  std::mt19937_64 rng(20240611);
  std::size_t violations = 0;
  for (unsigned t = 0; t < random_pairs; ++t) {
    const AltElement x = random_alt_element(rng, 3, 3), y = random_alt_element(rng, 3, 3);
    if (!alt_associator(x, x, y).is_zero() || !alt_associator(y, x, x).is_zero()) ++violations;
  }
  if (violations != 0) result.passed = false;
  detail << "alternator generators " << (report.ok() ? "ok" : "FAILED") << ", quotient homomorphism to degree "
         << max_degree << (hom ? " ok" : " FAILED") << ", alternative laws on " << random_pairs << " random pairs: "
         << violations << " violations";
  result.detail = detail.str();
  return result;
}

SuiteResult verify_small(unsigned cap) {
  SuiteResult result{"small", true, {}};
  const bool alternative = small_alternativity_check(cap);
  const bool embedding = embedding_check();
  const bool ideal = small_ideal_check(cap);
  const SmallTable perturbed = [](const SmallBasis& x, const SmallBasis& y) {
    if (!x.is_power() && !y.is_power() && x.gen() == Gen::b && y.gen() == Gen::c)
      return SmallElement(SmallBasis::letter(Gen::e));
    return small_mul(x, y);
  };
  const bool control = small_alternativity_check(cap, perturbed);
  result.passed = alternative && embedding && ideal && !control;
  const auto flag = [](bool ok) { return ok ? "ok" : "FAILED"; };
  result.detail = "alternativity to cap " + std::to_string(cap) + " " + flag(alternative) + ", embedding " +
                  flag(embedding) + ", ideal " + flag(ideal) + ", perturbed b c = e " +
                  (control ? "wrongly passes" : "fails as it should");
  return result;
}

std::vector<SuiteResult> run_suites(const std::string& name, const SuiteBounds& bounds) {
  static const std::vector<std::string> names = {"oracle", "nalt", "malcev", "alt", "small"};
  if (name != "all" && std::find(names.begin(), names.end(), name) == names.end())
    throw std::invalid_argument("unknown suite '" + name + "'");
  const auto want = [&name](const char* suite) { return name == "all" || name == suite; };
  std::vector<SuiteResult> out;
  if (want("oracle")) out.push_back(verify_engines(bounds.oracle_max_exp));
  if (want("nalt")) out.push_back(verify_nalt(bounds.nalt_max_degree));
  if (want("malcev")) out.push_back(verify_malcev_suite());
  if (want("alt")) out.push_back(verify_alt(bounds.alt_max_degree));
  if (want("small")) out.push_back(verify_small(bounds.small_cap));
  return out;
}

}  // namespace menv
