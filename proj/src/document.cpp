#include "menv/document.hpp"

#include <cstdint>
#include <limits>

namespace menv {

nlohmann::ordered_json to_json(const Element& x, const GammaMode& gamma) {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [mono, coeff] : x.terms()) {
    nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
    for (const auto& c : coeff.coeffs()) coeffs.push_back(to_string(c));
    nlohmann::ordered_json term;
    term["mono"] = mono.exps;
    term["coeff"] = std::move(coeffs);
    terms.push_back(std::move(term));
  }
  nlohmann::ordered_json doc;
  doc["gamma"] = gamma.to_string();
  doc["terms"] = std::move(terms);
  return doc;
}

namespace {

[[noreturn]] void schema(const std::string& message) { throw DocumentError("invalid element document: " + message); }

Rational rational_field(const nlohmann::json& value, const std::string& where) {
  if (!value.is_string()) schema(where + " must be a rational string");
  try {
    return parse_rational(value.get<std::string>());
  } catch (const std::invalid_argument& e) {
    schema(where + ": " + e.what());
  }
}

}  // namespace

ElementDocument from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) schema("top level must be an object");
  for (const auto& item : doc.items())
    if (item.key() != "gamma" && item.key() != "terms") schema("unknown key '" + item.key() + "'");
  if (!doc.contains("gamma")) schema("missing \"gamma\"");
  if (!doc.contains("terms")) schema("missing \"terms\"");

  ElementDocument out;
  const auto& gamma = doc["gamma"];
  if (!gamma.is_string()) schema("\"gamma\" must be a string");
  if (gamma.get<std::string>() != "symbolic") {
    const Rational value = rational_field(gamma, "\"gamma\"");
    if (value == 0) schema("\"gamma\" must be nonzero");
    out.gamma = GammaMode::instantiated(value);
  }

  const auto& terms = doc["terms"];
  if (!terms.is_array()) schema("\"terms\" must be an array");
  for (std::size_t t = 0; t < terms.size(); ++t) {
    const std::string where = "terms[" + std::to_string(t) + "]";
    const auto& term = terms[t];
    if (!term.is_object() || term.size() != 2 || !term.contains("mono") || !term.contains("coeff"))
      schema(where + " must be an object with exactly \"mono\" and \"coeff\"");

    const auto& mono = term["mono"];
    if (!mono.is_array() || mono.size() != 5) schema(where + ".mono must be an array of 5 exponents");
    Monomial m;
    for (std::size_t g = 0; g < 5; ++g) {
      if (!mono[g].is_number_unsigned()) schema(where + ".mono entries must be nonnegative integers");
      if (mono[g].get<std::uint64_t>() > std::numeric_limits<unsigned>::max()) schema(where + ".mono exponent too large");
      m.exps[g] = mono[g].get<unsigned>();
    }

    const auto& coeff = term["coeff"];
    if (!coeff.is_array() || coeff.empty()) schema(where + ".coeff must be a nonempty array");
    std::vector<Rational> cs;
    for (std::size_t p = 0; p < coeff.size(); ++p)
      cs.push_back(rational_field(coeff[p], where + ".coeff[" + std::to_string(p) + "]"));
    if (cs.back() == 0) schema(where + ".coeff has a trailing zero");
    if (!out.gamma.is_symbolic() && cs.size() > 1)
      schema(where + ".coeff depends on gamma but \"gamma\" is fixed");
    if (out.element.terms().count(m) != 0) schema(where + " repeats a monomial");
    out.element.add(m, GammaCoeff(std::move(cs)));
  }
  return out;
}

std::string serialize(const Element& x, const GammaMode& gamma) { return to_json(x, gamma).dump(); }

ElementDocument deserialize(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DocumentError(std::string("malformed JSON: ") + e.what());
  }
  return from_json(doc);
}

}  // namespace menv
