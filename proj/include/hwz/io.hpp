#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hwz/catalog.hpp"
#include "hwz/curves.hpp"
#include "hwz/invariants.hpp"
#include "hwz/model_maps.hpp"

namespace hwz::io {

using json = nlohmann::json;

// Shortest decimal that round-trips, capped at 12 significant digits.
std::string format_real(double x);

// x rounded to 12 significant digits, so dumps stay short and stable.
double json_real(double x);

// "m,m'; m,m'; ..." with optional whitespace. Throws Error(Parse).
std::vector<EndClass> parse_pairs(std::string_view text);

json pairs_json(const std::vector<EndClass>& pairs);
json label_json(const moduli::Label2& l);
json label_json(const moduli::Label3& l);
json label_json(const moduli::OrderedLabel3& l);

// {"pairs": [[p,p'],...]}; 2 or 3 pairs. Throws Error(Parse).
std::vector<EndClass> parse_label_json(const json& j);

json report_json(const invariants::InvariantReport& r);
json double_points_json(const std::vector<model_maps::DoublePoint>& points);
json catalog_json(const catalog::CatalogEntry& e);
json spectrum_json(const std::vector<invariants::Eigenvalue>& spectrum);

void write_trace_csv(std::ostream& out, const curves::Trace& trace);

}  // namespace hwz::io
