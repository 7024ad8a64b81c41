#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "jsr/algebraic.hpp"
#include "jsr/bounds.hpp"
#include "jsr/census.hpp"
#include "jsr/finiteness.hpp"
#include "jsr/matrix.hpp"

namespace jsr {

/// {"dimension": n, "matrices": [[["1","1/2"], ...], ...], "name": .., "provenance": .., "metadata": {..}}
/// Entries are rational strings or JSON integers; floats are rejected.
struct MatrixSetDocument {
  MatrixSet set;
  std::optional<std::string> name;
  std::optional<std::string> provenance;
  nlohmann::json metadata = nlohmann::json::object();

  friend bool operator==(const MatrixSetDocument&, const MatrixSetDocument&) = default;
};

/// Errors name the offending location, e.g. "matrices[1][0][2]: ...".
MatrixSetDocument parse_document(const nlohmann::json& j);
MatrixSetDocument parse_document_text(std::string_view text, std::string_view source = "<input>");
/// "-" reads standard input.
MatrixSetDocument load_document(const std::string& path);

nlohmann::json to_json(const MatrixSetDocument& doc);
nlohmann::json to_json(const ExactMatrix& a);
nlohmann::json to_json(const ProductWord& w);
/// {"exact": .., "decimal": .., "enclosure": [lo, hi]}
nlohmann::json to_json(const AlgebraicValue& v);
/// {"exact": "p/q", "decimal": ..}
nlohmann::json rational_json(const Rational& q);
nlohmann::json to_json(const LevelBounds& lvl);
nlohmann::json to_json(const BoundsReport& r);
nlohmann::json to_json(const Certificate& c);
nlohmann::json to_json(const StabilityVerdict& v);

/// canonical_class, member0, member1, rule_chain, certificate_word,
/// exact_value, decimal_value, bounds_gap, status; RFC 4180 quoting.
std::string census_csv(const CensusResult& r);

}  // namespace jsr
