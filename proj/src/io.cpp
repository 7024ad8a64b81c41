#include "jsr/io.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "jsr/errors.hpp"

namespace jsr {

using nlohmann::json;

namespace {

Rational parse_entry(const json& e, const std::string& where) {
  if (e.is_string()) {
    try {
      return parse_rational(e.get<std::string>());
    } catch (const InputError& ex) {
      throw InputError(where + ": " + ex.what());
    }
  }
  if (e.is_number_integer()) return Rational(e.dump());
  if (e.is_number_float())
    throw InputError(where + ": floating-point number " + e.dump() +
                     " is not accepted; write the entry as an exact string such as \"1/2\"");
  throw InputError(where + ": expected a rational string or integer, got " + std::string(e.type_name()));
}

std::optional<std::string> optional_string(const json& j, const char* key) {
  if (!j.contains(key)) return std::nullopt;
  if (!j[key].is_string()) throw InputError(std::string(key) + ": expected a string");
  return j[key].get<std::string>();
}

std::string fixed12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", x);
  return buf;
}

}  // namespace

MatrixSetDocument parse_document(const json& j) {
  if (!j.is_object()) throw InputError("document: expected a JSON object");
  for (const auto& [key, _] : j.items()) {
    if (key != "dimension" && key != "matrices" && key != "name" && key != "provenance" && key != "metadata")
      throw InputError("document: unknown key '" + key + "'");
  }
  if (!j.contains("dimension")) throw InputError("document: missing 'dimension'");
  const json& dj = j["dimension"];
  if (!dj.is_number_unsigned() || dj.get<std::uint64_t>() == 0)
    throw InputError("dimension: expected a positive integer, got " + dj.dump());
  const std::size_t n = dj.get<std::size_t>();

  if (!j.contains("matrices")) throw InputError("document: missing 'matrices'");
  const json& ms = j["matrices"];
  if (!ms.is_array() || ms.empty()) throw InputError("matrices: expected a non-empty array");

  std::vector<ExactMatrix> members;
  for (std::size_t k = 0; k < ms.size(); ++k) {
    const std::string mk = "matrices[" + std::to_string(k) + "]";
    const json& m = ms[k];
    if (!m.is_array()) throw InputError(mk + ": expected an array of rows");
    if (m.size() != n)
      throw InputError(mk + ": has " + std::to_string(m.size()) + " rows, dimension is " + std::to_string(n));
    std::vector<Rational> e;
    e.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      const std::string rk = mk + "[" + std::to_string(i) + "]";
      if (!m[i].is_array()) throw InputError(rk + ": expected an array of entries");
      if (m[i].size() != n)
        throw InputError(rk + ": has " + std::to_string(m[i].size()) + " entries, dimension is " +
                         std::to_string(n));
      for (std::size_t c = 0; c < n; ++c) e.push_back(parse_entry(m[i][c], rk + "[" + std::to_string(c) + "]"));
    }
    members.emplace_back(n, std::move(e));
  }

  std::optional<MatrixSet> set;
  try {
    set.emplace(std::move(members));
  } catch (const InputError& ex) {
    throw InputError(std::string("matrices: ") + ex.what());
  }
  MatrixSetDocument doc{std::move(*set), optional_string(j, "name"), optional_string(j, "provenance")};
  if (j.contains("metadata")) {
    if (!j["metadata"].is_object()) throw InputError("metadata: expected an object");
    doc.metadata = j["metadata"];
  }
  return doc;
}

MatrixSetDocument parse_document_text(std::string_view text, std::string_view source) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& ex) {
    throw InputError(std::string(source) + ": " + ex.what());
  }
  try {
    return parse_document(j);
  } catch (const InputError& ex) {
    throw InputError(std::string(source) + ": " + ex.what());
  }
}

MatrixSetDocument load_document(const std::string& path) {
  std::stringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw InputError(path + ": cannot open file");
    buf << in.rdbuf();
  }
  return parse_document_text(buf.str(), path == "-" ? "<stdin>" : path);
}

json to_json(const ExactMatrix& a) {
  json rows = json::array();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < a.dim(); ++j) row.push_back(to_string(a(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const MatrixSetDocument& doc) {
  json j;
  j["dimension"] = doc.set.dim();
  j["matrices"] = json::array();
  for (const auto& m : doc.set) j["matrices"].push_back(to_json(m));
  if (doc.name) j["name"] = *doc.name;
  if (doc.provenance) j["provenance"] = *doc.provenance;
  if (!doc.metadata.empty()) j["metadata"] = doc.metadata;
  return j;
}

json to_json(const ProductWord& w) { return json(std::vector<std::size_t>(w.begin(), w.end())); }

json to_json(const AlgebraicValue& v) {
  return json{{"exact", v.exact_string()}, {"decimal", v.decimal_string()}, {"enclosure", {v.lo(), v.hi()}}};
}

json rational_json(const Rational& q) { return json{{"exact", to_string(q)}, {"decimal", fixed12(to_double(q))}}; }

json to_json(const LevelBounds& lvl) {
  json ties = json::array();
  for (const auto& w : lvl.lower_ties) ties.push_back(to_json(w));
  return json{{"depth", lvl.depth},
              {"lower", to_json(lvl.lower)},
              {"lower_witness", to_json(lvl.lower_witness)},
              {"lower_ties", std::move(ties)},
              {"max_norm", rational_json(lvl.max_norm)},
              {"upper", to_json(lvl.upper)},
              {"upper_witness", to_json(lvl.upper_witness)},
              {"products", lvl.products}};
}

json to_json(const BoundsReport& r) {
  json levels = json::array();
  for (const auto& l : r.levels) levels.push_back(to_json(l));
  json ties = json::array();
  for (const auto& w : r.best_ties) ties.push_back(to_json(w));
  return json{{"set_digest", r.set_digest},
              {"depth", r.depth},
              {"norm", std::string(to_string(r.norm))},
              {"pruned", r.pruned},
              {"best_lower", to_json(r.best_lower)},
              {"best_witness", to_json(r.best_witness)},
              {"best_ties", std::move(ties)},
              {"best_upper", to_json(r.best_upper)},
              {"best_upper_depth", r.best_upper_depth},
              {"certified", r.certified()},
              {"products_total", r.products_total},
              {"levels", std::move(levels)}};
}

json to_json(const Certificate& c) {
  return json{{"word", to_json(c.word)},
              {"value", to_json(c.value)},
              {"rule", std::string(to_string(c.rule))},
              {"status", std::string(to_string(c.status))},
              {"detail", c.detail}};
}

json to_json(const StabilityVerdict& v) {
  json j{{"outcome", std::string(to_string(v.outcome))}, {"depth_reached", v.depth_reached}};
  if (v.witness) j["witness"] = to_json(*v.witness);
  if (v.outcome != StabilityOutcome::Unstable && v.depth_reached > 0) {
    j["upper"] = to_json(v.upper);
    j["upper_norm"] = rational_json(v.upper_norm);
    j["upper_witness"] = to_json(v.upper_witness);
  }
  return j;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

}  // namespace

std::string census_csv(const CensusResult& r) {
  std::ostringstream out;
  out << "canonical_class,member0,member1,rule_chain,certificate_word,exact_value,decimal_value,bounds_gap,status\n";
  for (const auto& rec : r.records) {
    std::string chain;
    for (const auto& step : rec.rule_chain) chain += (chain.empty() ? "" : " > ") + step;
    out << csv_field(rec.canonical_class) << ',' << csv_field(flatten_entries(rec.pair[0])) << ','
        << csv_field(flatten_entries(rec.pair[1])) << ',' << csv_field(chain) << ','
        << csv_field(rec.certificate.word.to_string()) << ',' << csv_field(rec.exact_value.exact_string()) << ','
        << rec.exact_value.decimal_string() << ',' << fixed12(rec.bounds_gap) << ','
        << to_string(rec.certificate.status) << '\n';
  }
  return out.str();
}

}  // namespace jsr
