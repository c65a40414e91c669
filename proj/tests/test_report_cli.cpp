#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "sasaki/cli.hpp"
#include "sasaki/report.hpp"
#include "test_support.hpp"

using namespace sasaki;
using namespace sasaki::testing;
using nlohmann::ordered_json;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  for (std::string line; std::getline(is, line);) out.push_back(line);
  return out;
}

// Every number in an exact field must be an integer or a "p/q" string.
void check_no_floats(const ordered_json& j, const std::string& key = "") {
  if (j.is_number_float()) FAIL("floating-point value at " << key);
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (k == "approx" || k == "annotations") continue;
      check_no_floats(v, k);
    }
  } else if (j.is_array()) {
    for (const auto& v : j) check_no_floats(v, key);
  }
}

}  // namespace

TEST_CASE("JSON report round-trips exactly") {
  for (const JoinParams& p : {kGenus2L101, kGenus2L19, kGenusZero, JoinParams{3, 1, 7, 3, 1}}) {
    const ReportDocument doc = make_document(analyze(p));
    const std::string text = serialize_json(doc);
    const ReportDocument back = parse_report(text);
    CHECK(back == doc);
    CHECK(serialize_json(back) == text);
  }
}

TEST_CASE("JSON report layout") {
  const ordered_json j = ordered_json::parse(serialize_json(make_document(analyze(kGenus2L101))));
  CHECK(j.at("schema_version") == "1.0");
  CHECK(j.at("params").at("l") == ordered_json::array({1, 101}));
  CHECK(j.at("critical_rays").at("H").size() == 3);
  CHECK(j.at("critical_rays").at("SE").size() == 3);
  CHECK(j.at("certificates").at("csc_count") == 1);
  CHECK(j.at("certificates").at("h_identity_residual_zero") == true);
  CHECK(j.at("functionals").at("g1") ==
        ordered_json::array({"8/1", "36/1", "38356/1", "58746/1", "54/1", "27/1"}));
  const auto& ray = j.at("critical_rays").at("SE").at(2);
  CHECK(ray.at("classification") == "local_min");
  CHECK(ray.at("tags") == ordered_json::array({"global_min"}));
  check_no_floats(j);
}

TEST_CASE("malformed documents are rejected") {
  CHECK_THROWS_AS(parse_report("{}"), std::invalid_argument);
  CHECK_THROWS_AS(parse_report("not json"), std::invalid_argument);
  ordered_json j = to_json(make_document(analyze(kGenus2L101)));
  j["critical_rays"]["H"][0]["classification"] = "saddle";
  CHECK_THROWS_AS(document_from_json(j), std::invalid_argument);
}

TEST_CASE("analysis CSV") {
  const auto rows = lines(analysis_csv(make_document(analyze(kGenus2L101))));
  REQUIRE(rows.size() == 7);
  CHECK(rows[0] == "functional,source,classification,tags,lo,hi,approx,multiplicity");
  CHECK(rows[2].rfind("H,F,local_min,cscS;global_min,", 0) == 0);
}

TEST_CASE("sample abscissae and values") {
  SampleSpec spec;
  spec.lo = Rational(1);
  spec.hi = Rational(1);
  spec.points = 1;
  spec.curves = {"F"};
  CHECK(sample_csv(build_bundle({1, 1, 1, 1, 1}), spec) == "b,F\n1,0\n");

  spec = SampleSpec{};
  spec.lo = Rational(1, 1000);
  spec.hi = Rational(1000);
  spec.points = 7;
  const auto xs = sample_abscissae(spec);
  REQUIRE(xs.size() == 7);
  CHECK(xs.front() == Rational(1, 1000));
  CHECK(xs.back() == Rational(1000));
  CHECK(rel_close(xs[3].get_d(), 1.0, 1e-12));
  spec.log_spacing = false;
  spec.lo = Rational(1);
  spec.hi = Rational(4);
  spec.points = 4;
  CHECK(sample_abscissae(spec) == std::vector<Rational>{1, 2, 3, 4});

  SampleSpec bad;
  bad.curves = {"K"};
  CHECK_THROWS_AS(sample_csv(build_bundle(kGenus2L101), bad), std::invalid_argument);
  bad = SampleSpec{};
  bad.points = 1;
  CHECK_THROWS_AS(sample_abscissae(bad), std::invalid_argument);
}

TEST_CASE("cli analyze emits the JSON report") {
  const CliRun r = run({"analyze", "--genus", "2", "--l", "1,101", "--w", "3,2"});
  CHECK(r.code == 0);
  const ReportDocument doc = parse_report(r.out);
  CHECK(doc == make_document(analyze(kGenus2L101)));
  CHECK(run({"analyze", "--genus", "2", "--l", "1,101", "--w", "3,2"}).out == r.out);
}

TEST_CASE("cli analyze CSV and tolerance") {
  const CliRun r = run({"analyze", "--genus", "2", "--l", "1,19", "--w", "3,2", "--format", "csv", "--tol", "1e-4"});
  CHECK(r.code == 0);
  CHECK(lines(r.out).size() == 7);
}

TEST_CASE("cli sweep") {
  const CliRun r = run({"sweep", "--l", "1,1", "--w", "3,2", "--vary", "genus", "--range", "16:19", "--format", "csv"});
  REQUIRE(r.code == 0);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 5);
  std::vector<std::string> g2;
  for (size_t i = 1; i < rows.size(); ++i) {
    std::vector<std::string> cells;
    std::istringstream is(rows[i]);
    for (std::string c; std::getline(is, c, ',');) cells.push_back(c);
    g2.push_back(cells.at(8));
  }
  CHECK(g2 == std::vector<std::string>{"0", "0", "2", "2"});

  const CliRun j = run({"sweep", "--l", "1,1", "--w", "3,2", "--range", "0:3"});
  REQUIRE(j.code == 0);
  const auto jl = lines(j.out);
  REQUIRE(jl.size() == 4);
  CHECK(ordered_json::parse(jl[2]).at("genus") == 2);

  const CliRun l2 = run({"sweep", "--genus", "2", "--l", "2,1", "--w", "3,2", "--vary", "l2", "--range", "1:4"});
  CHECK(l2.code == 0);
  CHECK(lines(l2.out).size() == 2);
  CHECK(l2.err.find("skipping") != std::string::npos);
}

TEST_CASE("cli sample") {
  const CliRun r = run({"sample", "--genus", "2", "--l", "1,101", "--w", "3,2", "--curves", "H,SE", "--points", "5"});
  REQUIRE(r.code == 0);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 6);
  CHECK(rows[0] == "b,H,SE");
  CHECK(rows[1].rfind("0.01,", 0) == 0);
  CHECK(rows[5].rfind("100,", 0) == 0);
  CHECK(run({"sample", "--genus", "2", "--l", "1,101", "--w", "3,2", "--log", "--linear"}).code == 2);
}

TEST_CASE("cli verify") {
  const CliRun r = run({"verify", "--genus", "2", "--l", "1,101", "--w", "3,2"});
  REQUIRE(r.code == 0);
  const ordered_json j = ordered_json::parse(r.out);
  CHECK(j.dump().find("false") == std::string::npos);
  const CliRun c = run({"verify", "--genus", "0", "--l", "1,1", "--w", "1,1", "--format", "csv"});
  CHECK(c.code == 0);
  CHECK(lines(c.out).at(0) == "check,passed");
}

TEST_CASE("cli exit codes") {
  CHECK(run({"analyze", "--genus", "2", "--l", "2,4", "--w", "3,2"}).code == 2);
  CHECK(run({"analyze", "--genus", "2", "--l", "1,1", "--w", "4,2"}).code == 2);
  CHECK(run({"analyze", "--genus", "-1", "--l", "1,1", "--w", "1,1"}).code == 2);
  CHECK(run({"analyze", "--genus", "2", "--l", "1,1", "--w", "3,2", "--tol", "0"}).code == 2);
  CHECK(run({"analyze", "--bogus"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"sweep", "--l", "1,1", "--w", "3,2", "--range", "5:2"}).code == 2);
  const CliRun bad = run({"analyze", "--genus", "2", "--l", "2,4", "--w", "3,2"});
  CHECK(bad.out.empty());
  CHECK(bad.err.find("error") != std::string::npos);

  AnalysisReport rep = analyze(kGenus2L101);
  CHECK(exit_code_for(rep) == 0);
  rep.se_identity.passed = false;
  CHECK(exit_code_for(rep) == 3);
  rep = analyze(kGenus2L101);
  rep.swap_symmetry = false;
  CHECK(exit_code_for(rep) == 3);
}

TEST_CASE("sweep serializers") {
  const auto rows = sweep_genus({1, 1}, {3, 2}, 0, 1);
  CHECK(lines(sweep_csv(rows)).size() == 3);
  const auto jl = lines(sweep_json_lines(rows));
  REQUIRE(jl.size() == 2);
  const ordered_json j = ordered_json::parse(jl[0]);
  CHECK(j.at("h_critical_count") == 1);
  check_no_floats(j);
}

TEST_CASE("cli sample reproduces the shape of H and SE") {
  auto values = [](const std::string& out) {
    std::vector<double> v;
    const auto rows = lines(out);
    for (size_t i = 1; i < rows.size(); ++i) v.push_back(std::stod(rows[i].substr(rows[i].find(',') + 1)));
    return v;
  };
  const CliRun h = run({"sample", "--genus", "2", "--l", "1,101", "--w", "3,2", "--curves", "H", "--range", "0.5:1",
                        "--points", "3"});
  REQUIRE(h.code == 0);
  const auto hv = values(h.out);
  REQUIRE(hv.size() == 3);
  CHECK(hv[0] > hv[1]);
  CHECK(hv[1] < hv[2]);

  const CliRun se = run({"sample", "--genus", "2", "--l", "1,101", "--w", "3,2", "--curves", "SE", "--range",
                         "0.001:1000", "--points", "7"});
  REQUIRE(se.code == 0);
  const auto sv = values(se.out);
  REQUIRE(sv.size() == 7);
  for (size_t i = 1; i + 1 < sv.size(); ++i) {
    CHECK(sv.front() > sv[i]);
    CHECK(sv.back() > sv[i]);
  }

  // Rendered values agree with exact evaluation at the same abscissae.
  SampleSpec spec;
  spec.curves = {"SE"};
  spec.lo = Rational(1, 1000);
  spec.hi = Rational(1000);
  spec.points = 7;
  const FunctionalBundle fb = build_bundle(kGenus2L101);
  const auto xs = sample_abscissae(spec);
  const auto rows = lines(se.out);
  for (size_t i = 0; i < xs.size(); ++i) {
    CHECK(rows[i + 1] == to_decimal(xs[i], 12) + "," + to_decimal(*fb.SE(xs[i]), 12));
  }
}
