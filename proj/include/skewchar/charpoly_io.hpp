#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "skewchar/charpoly.hpp"

namespace skewchar {

// Text form of one term: "+k * d[i;c]^e * ..." (factors in symbol order).
std::string term_to_text(const Monomial& m, const Int& coeff);
// Whole polynomial: terms in ascending monomial order separated by spaces;
// "0" for the zero polynomial.
std::string to_text(const CharPoly& p);
CharPoly parse_charpoly_text(std::string_view text, const Signature& sig);

// {"coeff": "k", "parity": 0|1, "factors": [{"i": i, "c": "p/q", "e": e}]}
nlohmann::json term_to_json(const Monomial& m, const Int& coeff);
// {"m": m, "n": n, "terms": [...]}
nlohmann::json to_json(const CharPoly& p);
CharPoly charpoly_from_json(const nlohmann::json& j);

}  // namespace skewchar
