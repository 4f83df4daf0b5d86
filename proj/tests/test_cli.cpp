#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "hwz/cli.hpp"
#include "hwz/moduli.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "sympl-moduli");
  std::ostringstream out, err;
  const int code = hwz::cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<json> json_lines(const std::string& text) {
  std::vector<json> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (!line.empty()) out.push_back(json::parse(line));
  }
  return out;
}

}  // namespace

TEST_CASE("classify") {
  auto ok = run({"classify", "--pairs", "2,1;1,2"});
  CHECK(ok.code == 0);
  CHECK(json::parse(ok.out)["delta"] == 3);
  CHECK(run({"classify", "--pairs", "1,2;2,1"}).code == 1);
  const auto three = run({"classify", "--pairs", "1,-1; 1,4; -2,-3"});
  CHECK(three.code == 0);
  CHECK(json::parse(three.out)["orderings"].size() == 2);
  CHECK(run({"classify", "--pairs", "1,x"}).code == 2);
  CHECK(run({"classify", "--pairs", "1,2,3"}).code == 2);
  CHECK(run({"classify"}).code == 2);
  CHECK(run({"no-such-command"}).code == 2);
}

TEST_CASE("invariants") {
  const auto a = json::parse(run({"invariants", "--pairs", "2,1;1,2"}).out);
  CHECK(a["m_C"] == 0);
  CHECK(a["index"] == 3);
  CHECK(a["e_pairing"] == 1);
  const auto b = json::parse(run({"invariants", "--pairs", "4,1;1,1"}).out);
  CHECK(b["m_C"] == 1);
  CHECK(b["m_C_oracle"] == 1);
  CHECK(b["translate_intersection_count"] == 3);
  const auto c = json::parse(run({"invariants", "--pairs", "1,-1;1,4;-2,-3", "--ordering", "0"}).out);
  CHECK(c["m_C"] == 2);
  CHECK(c["index"] == 4);
  const auto bad = run({"invariants", "--pairs", "1,2;2,1"});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("InvalidLabel") != std::string::npos);
}

TEST_CASE("trace") {
  const auto path = std::filesystem::temp_directory_path() / "hwz_test_trace.csv";
  const auto r = run({"trace", "--pair", "1,2", "--range", "1", "--samples", "1000", "--out", path.string()});
  REQUIRE(r.code == 0);
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  CHECK(line == "s,t,theta,phi,f,h");
  int rows = 0;
  double prev = -1.0;
  while (std::getline(in, line)) {
    const double theta = std::stod(line.substr(line.find(',', line.find(',') + 1) + 1));
    CHECK(theta > prev);
    prev = theta;
    ++rows;
  }
  CHECK(rows == 1000);
  std::filesystem::remove(path);

  CHECK(run({"trace", "--pair", "1,2", "--range", "x"}).code == 2);
  CHECK(run({"trace", "--pair", "1,2", "--range", "7"}).code == 1);
  CHECK(run({"trace", "--pair", "2,4", "--range", "0"}).code == 1);
}

TEST_CASE("trace endpoints for (1,0)") {
  const auto r = run({"trace", "--pair", "1,0", "--range", "0", "--samples", "3"});
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  std::string header, first, mid, last;
  std::getline(in, header);
  std::getline(in, first);
  std::getline(in, mid);
  std::getline(in, last);
  auto theta = [](const std::string& row) {
    std::istringstream cells(row);
    std::string cell;
    for (int i = 0; i < 3; ++i) std::getline(cells, cell, ',');
    return std::stod(cell);
  };
  CHECK(theta(first) == doctest::Approx(1e-4));
  CHECK(theta(last) == doctest::Approx(M_PI / 2 - 1e-4));
}

TEST_CASE("enumerate") {
  const auto two = run({"enumerate", "--max-abs", "2", "--ends", "2"});
  REQUIRE(two.code == 0);
  const auto lines = json_lines(two.out);
  CHECK(lines.size() == 104);
  for (const auto& l : lines) CHECK(l["m_C"] == l["m_C_oracle"]);
  CHECK(two.out == run({"enumerate", "--max-abs", "2", "--ends", "2", "--serial"}).out);

  const auto three = json_lines(run({"enumerate", "--max-abs", "3", "--ends", "3"}).out);
  CHECK(!three.empty());
  for (const auto& l : three) {
    CHECK(l["orderings"].size() == 2);
    CHECK(l["m_C_orderings"][0] == l["m_C_orderings"][1]);
  }
}

TEST_CASE("double-points methods agree") {
  const auto model = json::parse(run({"double-points", "--pairs", "4,1;1,1", "--method", "model"}).out);
  REQUIRE(model["points"].size() == 2);
  for (const auto& p : model["points"]) CHECK(p["residual"].get<double>() < 1e-9);
  CHECK(json::parse(run({"double-points", "--pairs", "2,1;1,2", "--method", "model"}).out)["points"].empty());

  auto labels = hwz::moduli::enumerate_labels2(6);
  std::mt19937 rng(11);
  std::shuffle(labels.begin(), labels.end(), rng);
  labels.resize(200);
  for (const auto& l : labels) {
    const std::string pairs = std::to_string(l.p.m) + "," + std::to_string(l.p.m_prime) + ";" +
                              std::to_string(l.q.m) + "," + std::to_string(l.q.m_prime);
    const auto f = json::parse(run({"double-points", "--pairs", pairs, "--method", "formula"}).out);
    const auto r = json::parse(run({"double-points", "--pairs", pairs, "--method", "roots"}).out);
    CHECK(f["m_C"] == r["m_C"]);
  }
  CHECK(run({"double-points", "--pairs", "4,1;1,1", "--method", "guess"}).code == 2);
  CHECK(run({"double-points", "--pairs", "1,2;2,1", "--method", "formula"}).code == 1);
}

TEST_CASE("spectrum") {
  const auto g = json::parse(run({"spectrum", "--pair", "1,0", "--nmax", "3"}).out);
  CHECK(g["zeta"].get<double>() == doctest::Approx(std::sqrt(6.0)));
  int zeros = 0;
  bool minus_zeta = false;
  for (const auto& e : g["spectrum"]) {
    if (e["value"].get<double>() == 0.0) ++zeros;
    if (std::abs(e["value"].get<double>() + std::sqrt(6.0)) < 1e-11) minus_zeta = true;
  }
  CHECK(zeros == 1);
  CHECK(minus_zeta);
  const auto p = json::parse(run({"spectrum", "--polar-m", "1", "--nmax", "2"}).out);
  for (const auto& e : p["spectrum"]) CHECK(e["value"].get<double>() != 0.0);
  const auto d = run({"spectrum", "--pair", "0,1"});
  CHECK(d.code == 1);
  CHECK(d.err.find("DegenerateAngle") != std::string::npos);
}

TEST_CASE("output is deterministic") {
  for (const std::vector<std::string> args :
       {std::vector<std::string>{"catalog"}, {"enumerate", "--max-abs", "3", "--ends", "3"},
        {"double-points", "--pairs", "1,-1;1,4", "--method", "model", "--r", "10"},
        {"spectrum", "--pair", "1,1", "--nmax", "4"}}) {
    const auto a = run(args);
    const auto b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}
