#include "hwz/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "hwz/error.hpp"

namespace hwz::io {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::int64_t parse_int(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error(ErrorKind::Parse, "not an integer: '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

std::string format_real(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (x == 0.0) return "0";
  char buf[32];
  for (int digits = 1; digits <= 12; ++digits) {
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    if (std::strtod(buf, nullptr) == x) return buf;
  }
  return buf;
}

double json_real(double x) {
  if (!std::isfinite(x) || x == 0.0) return x == 0.0 ? 0.0 : x;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

std::vector<EndClass> parse_pairs(std::string_view text) {
  std::vector<EndClass> out;
  if (trim(text).empty()) throw Error(ErrorKind::Parse, "empty pair list");
  while (true) {
    const auto semi = text.find(';');
    const std::string_view item = text.substr(0, semi);
    const auto comma = item.find(',');
    if (comma == std::string_view::npos || item.find(',', comma + 1) != std::string_view::npos) {
      throw Error(ErrorKind::Parse, "expected 'm,m'' but got '" + std::string(trim(item)) + "'");
    }
    out.push_back({parse_int(item.substr(0, comma)), parse_int(item.substr(comma + 1))});
    if (semi == std::string_view::npos) break;
    text.remove_prefix(semi + 1);
  }
  return out;
}

json pairs_json(const std::vector<EndClass>& pairs) {
  json arr = json::array();
  for (const auto& e : pairs) arr.push_back({e.m, e.m_prime});
  return {{"pairs", arr}};
}

json label_json(const moduli::Label2& l) { return pairs_json({l.p, l.q}); }
json label_json(const moduli::Label3& l) { return pairs_json({l.pairs.begin(), l.pairs.end()}); }
json label_json(const moduli::OrderedLabel3& l) { return pairs_json({l.pairs.begin(), l.pairs.end()}); }

std::vector<EndClass> parse_label_json(const json& j) {
  if (!j.is_object() || !j.contains("pairs") || !j["pairs"].is_array()) {
    throw Error(ErrorKind::Parse, "label JSON needs a \"pairs\" array");
  }
  std::vector<EndClass> out;
  for (const auto& p : j["pairs"]) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer()) {
      throw Error(ErrorKind::Parse, "each pair must be two integers");
    }
    out.push_back({p[0].get<std::int64_t>(), p[1].get<std::int64_t>()});
  }
  if (out.size() != 2 && out.size() != 3) throw Error(ErrorKind::Parse, "a label has 2 or 3 pairs");
  return out;
}

json report_json(const invariants::InvariantReport& r) {
  return {
      {"label", pairs_json(r.label)},
      {"delta", r.delta},
      {"gcds", {r.gcds[0], r.gcds[1], r.gcds[2]}},
      {"m_C", r.m_c},
      {"m_C_oracle", r.m_c_oracle},
      {"index", r.index},
      {"lower_bound", r.lower_bound},
      {"aleph", r.terms.aleph},
      {"aleph_plus", r.terms.aleph_plus},
      {"aleph_minus", r.terms.aleph_minus},
      {"chi", r.chi},
      {"c1", r.c1},
      {"e_pairing", r.e_pairing},
      {"translate_intersection_count", r.translate_count},
  };
}

json double_points_json(const std::vector<model_maps::DoublePoint>& points) {
  json arr = json::array();
  for (const auto& d : points) {
    arr.push_back({
        {"a", d.a},
        {"b", d.b},
        {"z", {json_real(d.z.real()), json_real(d.z.imag())}},
        {"w", {json_real(d.w.real()), json_real(d.w.imag())}},
        {"residual", json_real(d.residual)},
    });
  }
  return arr;
}

json catalog_json(const catalog::CatalogEntry& e) {
  json ends = json::array();
  for (const auto& d : e.ends) {
    json item = {{"side", d.side == invariants::Side::Concave ? "concave" : "convex"}};
    if (const auto* g = std::get_if<invariants::GenericEnd>(&d.kind)) {
      item["kind"] = "generic";
      item["pair"] = {g->pair.m, g->pair.m_prime};
    } else {
      const auto& p = std::get<invariants::PolarEnd>(d.kind);
      item["kind"] = "polar";
      item["m"] = p.multiplicity;
      item["nu"] = p.winding;
    }
    ends.push_back(item);
  }
  json out = {
      {"case", e.case_id},
      {"description", e.description},
      {"example", e.example_id},
      {"chi", e.chi},
      {"nu0", e.nu0},
      {"c1", catalog::entry_c1(e)},
      {"ends", ends},
      {"index", catalog::entry_index(e)},
      {"expected_index", e.expected_index},
      {"aleph", catalog::entry_aleph(e)},
      {"lower_bound", catalog::entry_lower_bound(e)},
      {"lower_bound_applies", e.lower_bound_applies},
      {"reverse_engineered", e.reverse_engineered},
  };
  if (!e.label.empty()) out["label"] = pairs_json(e.label)["pairs"];
  if (!e.note.empty()) out["note"] = e.note;
  return out;
}

json spectrum_json(const std::vector<invariants::Eigenvalue>& spectrum) {
  json arr = json::array();
  for (const auto& ev : spectrum) arr.push_back({{"value", json_real(ev.value)}, {"multiplicity", ev.multiplicity}});
  return arr;
}

void write_trace_csv(std::ostream& out, const curves::Trace& trace) {
  out << "s,t,theta,phi,f,h\n";
  char buf[160];
  for (const auto& r : trace.samples) {
    std::snprintf(buf, sizeof buf, "%.12g,%.12g,%.12g,%.12g,%.12g,%.12g\n", r.s, r.t, r.theta, r.phi, r.f, r.h);
    out << buf;
  }
}

}  // namespace hwz::io
