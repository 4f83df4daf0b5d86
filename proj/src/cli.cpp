#include "hwz/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>

#include <CLI11.hpp>

#include "hwz/catalog.hpp"
#include "hwz/curves.hpp"
#include "hwz/error.hpp"
#include "hwz/invariants.hpp"
#include "hwz/io.hpp"
#include "hwz/model_maps.hpp"
#include "hwz/moduli.hpp"
#include "hwz/sweep.hpp"

namespace hwz::cli {

namespace {

using io::json;
using moduli::Label2;
using moduli::OrderedLabel3;

struct Options {
  std::string pairs;
  std::string pair;
  int ordering = 0;
  std::string range;
  std::size_t samples = 1000;
  std::string out_path;
  double anchor = 0.0;
  std::optional<double> theta_anchor;
  double clip = 1e-4;
  std::int64_t max_abs = 2;
  int ends = 2;
  bool serial = false;
  std::string method = "formula";
  double r = 2.0;
  std::optional<std::int64_t> polar_m;
  std::int64_t nmax = 3;
};

double residual_tolerance() {
  const char* env = std::getenv("SYMPL_MODULI_TOL");
  if (!env || !*env) return 1e-9;
  char* end = nullptr;
  const double tol = std::strtod(env, &end);
  if (end == env || *end != '\0' || !(tol > 0.0)) {
    throw Error(ErrorKind::Parse, std::string("SYMPL_MODULI_TOL is not a positive number: ") + env);
  }
  return tol;
}

EndClass single_pair(const std::string& text) {
  const auto pairs = io::parse_pairs(text);
  if (pairs.size() != 1) throw Error(ErrorKind::Parse, "expected a single pair 'm,m''");
  return pairs.front();
}

json violations_json(const std::vector<moduli::Violation>& vs) {
  json arr = json::array();
  for (auto v : vs) arr.push_back(moduli::to_string(v));
  return arr;
}

int cmd_classify(const Options& o, std::ostream& out) {
  const auto pairs = io::parse_pairs(o.pairs);
  json j;
  bool ok = false;
  if (pairs.size() == 1) {
    const auto cls = reeb::classify_pair(pairs[0].m, pairs[0].m_prime);
    json rules = json::array();
    for (auto r : cls.violated) rules.push_back(reeb::to_string(r));
    ok = cls.admissible;
    j = {{"pairs", io::pairs_json(pairs)["pairs"]}, {"admissible", ok}, {"violations", rules}};
  } else if (pairs.size() == 2) {
    const Label2 l{pairs[0], pairs[1]};
    const auto check = moduli::validate_label2(l);
    ok = check.ok;
    j = {{"label", io::label_json(l)}, {"admissible", ok}, {"delta", l.delta()},
         {"violations", violations_json(check.violations)}};
  } else if (pairs.size() == 3) {
    const auto check = moduli::validate_label3(std::array<EndClass, 3>{pairs[0], pairs[1], pairs[2]});
    ok = check.ok;
    json orderings = json::array();
    for (const auto& ord : check.orderings) {
      orderings.push_back(json{{"pairs", io::label_json(ord)["pairs"]}, {"delta", ord.delta()}});
    }
    j = {{"label", io::pairs_json(pairs)}, {"admissible", ok}, {"has_zero_pair", check.has_zero_pair},
         {"sums_to_zero", check.sums_to_zero}, {"orderings", orderings}};
  } else {
    throw Error(ErrorKind::Parse, "classify takes 1, 2 or 3 pairs");
  }
  out << j.dump(2) << "\n";
  return ok ? 0 : 1;
}

invariants::InvariantReport report_for(const std::vector<EndClass>& pairs, int ordering) {
  if (pairs.size() == 2) return invariants::sphere_report(Label2{pairs[0], pairs[1]});
  if (pairs.size() != 3) throw Error(ErrorKind::Parse, "a label has 2 or 3 pairs");
  const auto check = moduli::validate_label3(std::array<EndClass, 3>{pairs[0], pairs[1], pairs[2]});
  if (!check.ok) throw Error(ErrorKind::InvalidLabel, "label is not an admissible aleph = 3 label");
  if (ordering < 0 || ordering > 1) throw Error(ErrorKind::Domain, "--ordering must be 0 or 1");
  return invariants::sphere_report(check.orderings[static_cast<std::size_t>(ordering)]);
}

void check_oracle(const invariants::InvariantReport& r) {
  if (r.m_c != r.m_c_oracle) {
    throw Error(ErrorKind::Internal, "formula m_C = " + std::to_string(r.m_c) + " but root count gives " +
                                         std::to_string(r.m_c_oracle));
  }
}

int cmd_invariants(const Options& o, std::ostream& out) {
  const auto r = report_for(io::parse_pairs(o.pairs), o.ordering);
  check_oracle(r);
  out << io::report_json(r).dump(2) << "\n";
  return 0;
}

int cmd_trace(const Options& o, std::ostream& out) {
  const EndClass pair = single_pair(o.pair);
  std::size_t range = 0;
  try {
    std::size_t used = 0;
    const long v = std::stol(o.range, &used);
    if (used != o.range.size() || v < 0) throw std::invalid_argument("range");
    range = static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw Error(ErrorKind::Parse, "--range must be a nonnegative integer, got '" + o.range + "'");
  }
  const auto ranges = curves::classify_branches(pair.m, pair.m_prime);
  if (range >= ranges.size()) {
    throw Error(ErrorKind::Domain, "pair has " + std::to_string(ranges.size()) + " ranges");
  }
  const auto trace = curves::integrate_profile(pair.m, pair.m_prime, range, o.anchor, o.samples, o.theta_anchor, o.clip);
  if (o.out_path.empty() || o.out_path == "-") {
    io::write_trace_csv(out, trace);
    return 0;
  }
  std::ofstream file(o.out_path);
  if (!file) throw Error(ErrorKind::Domain, "cannot open " + o.out_path);
  io::write_trace_csv(file, trace);
  double s_lo = trace.samples.front().s, s_hi = s_lo;
  for (const auto& smp : trace.samples) {
    s_lo = std::min(s_lo, smp.s);
    s_hi = std::max(s_hi, smp.s);
  }
  const auto& r = ranges[range];
  json j = {
      {"pair", {pair.m, pair.m_prime}},
      {"example", r.example_id},
      {"range", {{"lo", io::json_real(r.lo)}, {"hi", io::json_real(r.hi)},
                 {"lo_label", curves::to_string(r.lo_label)}, {"hi_label", curves::to_string(r.hi_label)}}},
      {"rows", trace.samples.size()},
      {"theta_first", io::json_real(trace.samples.front().theta)},
      {"theta_last", io::json_real(trace.samples.back().theta)},
      {"s_min", io::json_real(s_lo)},
      {"s_max", io::json_real(s_hi)},
      {"out", o.out_path},
  };
  out << j.dump(2) << "\n";
  return 0;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  if (o.max_abs < 1) throw Error(ErrorKind::Domain, "--max-abs must be >= 1");
  if (o.ends != 2 && o.ends != 3) throw Error(ErrorKind::Parse, "--ends must be 2 or 3");
  const auto exec = o.serial ? sweep::Exec::Serial : sweep::Exec::Parallel;

  // Lines are built in parallel into fixed slots, then written in order.
  std::vector<std::string> lines;
  std::vector<std::string> failures;
  auto run = [&](std::size_t n, auto&& make) {
    lines.assign(n, {});
    failures.assign(n, {});
    const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 16) if (exec == sweep::Exec::Parallel)
    for (std::int64_t i = 0; i < count; ++i) {
      const auto k = static_cast<std::size_t>(i);
      try {
        lines[k] = make(k).dump();
      } catch (const std::exception& e) {
        failures[k] = e.what();
      }
    }
  };

  if (o.ends == 2) {
    const auto labels = sweep::labels2(o.max_abs, exec);
    run(labels.size(), [&](std::size_t k) {
      const auto r = invariants::sphere_report(labels[k]);
      check_oracle(r);
      return io::report_json(r);
    });
  } else {
    const auto labels = sweep::labels3(o.max_abs, exec);
    run(labels.size(), [&](std::size_t k) {
      const auto check = moduli::validate_label3(labels[k]);
      const auto r = invariants::sphere_report(check.orderings.at(0));
      check_oracle(r);
      json j = io::report_json(r);
      json ords = json::array();
      json mcs = json::array();
      for (const auto& ord : check.orderings) {
        ords.push_back(io::label_json(ord)["pairs"]);
        mcs.push_back(invariants::double_points_formula(ord));
      }
      j["set"] = io::label_json(labels[k]);
      j["orderings"] = ords;
      j["m_C_orderings"] = mcs;
      return j;
    });
  }
  for (std::size_t k = 0; k < failures.size(); ++k) {
    if (!failures[k].empty()) throw Error(ErrorKind::Internal, "label #" + std::to_string(k) + ": " + failures[k]);
  }
  std::ofstream file;
  std::ostream* sink = &out;
  if (!o.out_path.empty() && o.out_path != "-") {
    file.open(o.out_path);
    if (!file) throw Error(ErrorKind::Domain, "cannot open " + o.out_path);
    sink = &file;
  }
  for (const auto& line : lines) *sink << line << "\n";
  return 0;
}

int cmd_double_points(const Options& o, std::ostream& out) {
  const auto pairs = io::parse_pairs(o.pairs);
  if (pairs.size() != 2) throw Error(ErrorKind::Parse, "double-points takes a 2-pair label");
  const Label2 l{pairs[0], pairs[1]};
  const auto check = moduli::validate_label2(l);
  if (!check.ok) throw Error(ErrorKind::InvalidLabel, "label violates " + moduli::to_string(check.violations.front()));

  const std::int64_t reference = invariants::double_points_formula(l);
  json j = {{"label", io::label_json(l)}, {"method", o.method}, {"delta", l.delta()}};
  std::int64_t m_c = reference;
  if (o.method == "roots") {
    m_c = invariants::double_points_bruteforce(l);
  } else if (o.method == "model") {
    const auto points = model_maps::phi_double_points({l, o.r}, residual_tolerance());
    if (points.size() % 2 != 0) throw Error(ErrorKind::Parity, "odd number of ordered double points");
    m_c = static_cast<std::int64_t>(points.size() / 2);
    j["r"] = io::json_real(o.r);
    j["points"] = io::double_points_json(points);
  } else if (o.method != "formula") {
    throw Error(ErrorKind::Parse, "--method must be formula, roots or model");
  }
  if (m_c != reference) {
    throw Error(ErrorKind::Internal, o.method + " gives m_C = " + std::to_string(m_c) + ", formula gives " +
                                         std::to_string(reference));
  }
  j["m_C"] = m_c;
  out << j.dump(2) << "\n";
  return 0;
}

int cmd_spectrum(const Options& o, std::ostream& out) {
  if (o.pair.empty() == !o.polar_m.has_value()) throw Error(ErrorKind::Parse, "give exactly one of --pair, --polar-m");
  json j;
  if (o.polar_m) {
    const auto spec = invariants::L0_spectrum(invariants::PolarSpectrum{*o.polar_m}, o.nmax);
    j = {{"polar_m", *o.polar_m}, {"nmax", o.nmax}, {"spectrum", io::spectrum_json(spec)}};
  } else {
    const EndClass pair = single_pair(o.pair);
    const auto orbit = reeb::ReebOrbit::generic(pair, 0.0);
    const auto data = invariants::asymptotic_constants(orbit.theta0, pair);
    const std::int64_t period = orbit.multiplicity * (orbit.pair.m < 0 ? -orbit.pair.m : orbit.pair.m);
    const auto spec = invariants::L0_spectrum(invariants::GenericSpectrum{data.zeta, period}, o.nmax);
    j = {{"pair", {pair.m, pair.m_prime}},
         {"theta0", io::json_real(orbit.theta0)},
         {"zeta", io::json_real(data.zeta)},
         {"kappa", io::json_real(data.kappa)},
         {"sigma0", data.sigma0 ? json(io::json_real(*data.sigma0)) : json(nullptr)},
         {"period", period},
         {"nmax", o.nmax},
         {"spectrum", io::spectrum_json(spec)}};
  }
  out << j.dump(2) << "\n";
  return 0;
}

int cmd_catalog(std::ostream& out) {
  json arr = json::array();
  for (const auto& e : catalog::catalog_entries()) {
    if (catalog::entry_index(e) != e.expected_index) {
      throw Error(ErrorKind::Internal, "catalog entry '" + e.description + "' has the wrong index");
    }
    arr.push_back(io::catalog_json(e));
  }
  out << arr.dump(2) << "\n";
  return 0;
}

int exit_code(const Error& e) {
  if (e.kind() == ErrorKind::Parse) return 2;
  if (e.is_invariant_breach()) return 3;
  return 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Moduli data of HWZ subvarieties in R x (S^1 x S^2)", "sympl-moduli"};
  app.require_subcommand(1);
  Options o;

  auto* classify = app.add_subcommand("classify", "admissibility of 1, 2 or 3 end classes");
  classify->add_option("--pairs", o.pairs, "pairs 'm,m'; ...'")->required();

  auto* inv = app.add_subcommand("invariants", "invariant report of a label as a thrice-punctured sphere");
  inv->add_option("--pairs", o.pairs)->required();
  inv->add_option("--ordering", o.ordering, "which valid ordering of a 3-pair label (0 or 1)");

  auto* trace = app.add_subcommand("trace", "CSV trace of an invariant cylinder profile");
  trace->add_option("--pair", o.pair, "p,p' with p > 0")->required();
  trace->add_option("--range", o.range, "index into the theta ranges")->required();
  trace->add_option("--samples", o.samples)->check(CLI::Range(std::size_t{2}, std::size_t{10000000}));
  trace->add_option("--out", o.out_path, "CSV path; stdout if omitted");
  trace->add_option("--anchor", o.anchor, "value of s at the anchor angle");
  trace->add_option("--theta-anchor", o.theta_anchor, "anchor angle (default: range midpoint)");
  trace->add_option("--clip", o.clip, "distance kept from the fixed angles")->check(CLI::PositiveNumber);

  auto* en = app.add_subcommand("enumerate", "all admissible labels in a box, one JSON line each");
  en->add_option("--max-abs", o.max_abs)->required();
  en->add_option("--ends", o.ends)->required();
  en->add_option("--out", o.out_path);
  en->add_flag("--serial", o.serial, "disable the parallel sweep");

  auto* dp = app.add_subcommand("double-points", "double points of the model map");
  dp->add_option("--pairs", o.pairs)->required();
  dp->add_option("--method", o.method, "formula, roots or model");
  dp->add_option("--r", o.r, "model-map scale r >= 1");

  auto* sp = app.add_subcommand("spectrum", "asymptotic constants and L0 spectrum");
  sp->add_option("--pair", o.pair);
  sp->add_option("--polar-m", o.polar_m);
  sp->add_option("--nmax", o.nmax);

  auto* cat = app.add_subcommand("catalog", "index table of the low-index subvarieties");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*classify) return cmd_classify(o, out);
    if (*inv) return cmd_invariants(o, out);
    if (*trace) return cmd_trace(o, out);
    if (*en) return cmd_enumerate(o, out);
    if (*dp) return cmd_double_points(o, out);
    if (*sp) return cmd_spectrum(o, out);
    if (*cat) return cmd_catalog(out);
  } catch (const Error& e) {
    err << e.what() << "\n";
    return exit_code(e);
  } catch (const std::exception& e) {
    err << "internal: " << e.what() << "\n";
    return 3;
  }
  return 2;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace hwz::cli
