#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"
#include "menv/element.hpp"
#include "menv/gamma_mode.hpp"

namespace menv {

/// JSON form of an Element:
///
///   {"gamma":"symbolic","terms":[{"mono":[0,0,0,1,2],"coeff":["1"]}]}
///
/// "gamma" is "symbolic" or a rational such as "2/3"; "coeff" lists the
/// coefficients of gamma^0, gamma^1, ... as rational strings with no
/// trailing zero. Terms are sorted by exponent tuple, so equal elements
/// serialize to identical bytes.
struct ElementDocument {
  GammaMode gamma = GammaMode::symbolic();
  Element element;
};

class DocumentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

nlohmann::ordered_json to_json(const Element& x, const GammaMode& gamma);
/// Throws DocumentError on any schema violation.
ElementDocument from_json(const nlohmann::json& doc);

/// Compact single-line JSON.
std::string serialize(const Element& x, const GammaMode& gamma = GammaMode::symbolic());
ElementDocument deserialize(std::string_view text);

}  // namespace menv
