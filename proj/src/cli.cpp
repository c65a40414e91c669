#include "sasaki/cli.hpp"

#include <algorithm>
#include <sstream>

#include "CLI11.hpp"
#include "sasaki/report.hpp"

namespace sasaki {

namespace {

using Pair = std::pair<std::int64_t, std::int64_t>;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) parts.push_back(cur);
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

std::int64_t parse_int(const std::string& s, const std::string& flag) {
  try {
    size_t used = 0;
    long long v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw ValidationError(flag + ": expected an integer, got '" + s + "'");
  }
}

Pair parse_pair(const std::string& s, const std::string& flag) {
  auto parts = split(s, ',');
  if (parts.size() != 2) throw ValidationError(flag + ": expected <int,int>, got '" + s + "'");
  return {parse_int(parts[0], flag), parse_int(parts[1], flag)};
}

std::pair<std::string, std::string> parse_range(const std::string& s) {
  auto parts = split(s, ':');
  if (parts.size() != 2 || parts[0].empty() || parts[1].empty()) {
    throw ValidationError("--range: expected lo:hi, got '" + s + "'");
  }
  return {parts[0], parts[1]};
}

Rational parse_positive_rational(const std::string& s, const std::string& flag) {
  try {
    return parse_rational(s);
  } catch (const std::invalid_argument& e) {
    throw ValidationError(flag + ": " + e.what());
  }
}

struct Options {
  std::int64_t genus = -1;
  std::string l = "1,1";
  std::string w = "1,1";
  std::string tol = "1e-9";
  std::string format = "json";
  std::string vary = "genus";
  std::string range;
  std::string curves = "H,SE,F,g1,g2";
  int points = 50;
  bool log_spacing = false;
  bool linear_spacing = false;
};

JoinParams params_from(const Options& o) {
  if (o.genus < 0) throw ValidationError("--genus is required and must be nonnegative");
  Pair l = parse_pair(o.l, "--l");
  Pair w = parse_pair(o.w, "--w");
  JoinParams p{o.genus, l.first, l.second, w.first, w.second};
  p.validate();
  return p;
}

Rational tolerance_from(const Options& o) {
  Rational tol = parse_positive_rational(o.tol, "--tol");
  if (tol <= 0) throw ValidationError("--tol must be positive");
  return tol;
}

std::string verify_output(const JoinParams& p, const std::string& format, bool& all_passed) {
  const FunctionalBundle fb = build_bundle(p);
  const IdentityReport h = verify_h_derivative_identity(fb);
  const IdentityReport se = verify_se_derivative_identity(fb);
  const bool swap = verify_swap_symmetry(p);
  struct ScalingCase {
    int n;
    Rational a, S, V;
  };
  const std::vector<ScalingCase> cases{{2, 3, 5, 7}, {1, Rational(1, 2), -4, 9}, {5, 10, 1, 1}};
  std::vector<bool> scaling;
  for (const auto& c : cases) scaling.push_back(verify_scaling_laws(c.n, c.a, c.S, c.V));
  const bool scaling_ok = std::all_of(scaling.begin(), scaling.end(), [](bool b) { return b; });
  all_passed = h.passed && se.passed && swap;

  if (format == "csv") {
    std::ostringstream os;
    os << "check,passed\n";
    os << "h_derivative_identity," << (h.passed ? "true" : "false") << '\n';
    os << "se_derivative_identity," << (se.passed ? "true" : "false") << '\n';
    os << "swap_symmetry," << (swap ? "true" : "false") << '\n';
    os << "scaling_laws," << (scaling_ok ? "true" : "false") << '\n';
    return os.str();
  }
  nlohmann::ordered_json j;
  j["params"] = {{"genus", p.genus}, {"l", {p.l1, p.l2}}, {"w", {p.w1, p.w2}}};
  auto identity = [](const IdentityReport& r) {
    nlohmann::ordered_json res = nlohmann::ordered_json::array();
    for (const auto& c : r.residual.coefficients()) res.push_back(to_exact_string(c));
    return nlohmann::ordered_json{{"identity", r.name}, {"passed", r.passed}, {"residual", res}};
  };
  j["h_derivative_identity"] = identity(h);
  j["se_derivative_identity"] = identity(se);
  j["swap_symmetry"] = swap;
  nlohmann::ordered_json table = nlohmann::ordered_json::array();
  for (const auto& law : scaling_law_table()) {
    table.push_back({{"quantity", std::string(law.quantity)}, {"exponent_at_n2", law.exponent(2)}});
  }
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (size_t i = 0; i < cases.size(); ++i) {
    checks.push_back({{"n", cases[i].n},
                      {"a", to_exact_string(cases[i].a)},
                      {"S", to_exact_string(cases[i].S)},
                      {"V", to_exact_string(cases[i].V)},
                      {"passed", static_cast<bool>(scaling[i])}});
  }
  j["scaling_laws"] = {{"table", table}, {"checks", checks}, {"passed", scaling_ok}};
  return j.dump(2) + "\n";
}

}  // namespace

int exit_code_for(const AnalysisReport& rep) {
  return rep.identities_hold() ? kExitOk : kExitIdentityFailure;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact critical-ray analysis of H and SE on lens space bundles over Riemann surfaces",
               "sasaki-rays"};
  app.require_subcommand(1);
  Options o;

  auto add_params = [&](CLI::App* sub) {
    sub->add_option("--genus", o.genus, "Genus G of the base Riemann surface");
    sub->add_option("--l", o.l, "Join weights l1,l2");
    sub->add_option("--w", o.w, "Reeb weights w1,w2");
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  };

  CLI::App* analyze = app.add_subcommand("analyze", "Critical rays of H and SE with certificates");
  add_params(analyze);
  analyze->add_option("--tol", o.tol, "Refinement tolerance");
  add_format(analyze);

  CLI::App* sweep = app.add_subcommand("sweep", "Root-count table over a parameter range");
  add_params(sweep);
  sweep->add_option("--vary", o.vary, "Swept parameter")->check(CLI::IsMember({"genus", "l2"}));
  sweep->add_option("--range", o.range, "Inclusive integer range lo:hi")->required();
  add_format(sweep);

  CLI::App* sample = app.add_subcommand("sample", "Sampled curve values as CSV");
  add_params(sample);
  sample->add_option("--curves", o.curves, "Comma-separated subset of H,SE,F,g1,g2");
  sample->add_option("--range", o.range, "Sample interval b_lo:b_hi (default 0.01:100)");
  sample->add_option("--points", o.points, "Number of samples");
  sample->add_flag("--log", o.log_spacing, "Logarithmic spacing (default)");
  sample->add_flag("--linear", o.linear_spacing, "Linear spacing");

  CLI::App* verify = app.add_subcommand("verify", "Run only the exact identity, symmetry and scaling checks");
  add_params(verify);
  add_format(verify);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (analyze->parsed()) {
      const JoinParams p = params_from(o);
      const AnalysisReport rep = sasaki::analyze(p, tolerance_from(o));
      const ReportDocument doc = make_document(rep);
      out << (o.format == "csv" ? analysis_csv(doc) : serialize_json(doc));
      if (!rep.identities_hold()) err << "error: exact identity verification failed\n";
      return exit_code_for(rep);
    }
    if (sweep->parsed()) {
      const auto var = parse_sweep_variable(o.vary);
      auto [lo_s, hi_s] = parse_range(o.range);
      SweepSpec spec;
      spec.l = parse_pair(o.l, "--l");
      spec.w = parse_pair(o.w, "--w");
      spec.vary = *var;
      spec.lo = parse_int(lo_s, "--range");
      spec.hi = parse_int(hi_s, "--range");
      if (spec.lo > spec.hi) throw ValidationError("--range: lo must not exceed hi");
      if (spec.vary == SweepVariable::Genus) {
        if (spec.lo < 0) throw ValidationError("--range: genus must be nonnegative");
      } else {
        if (o.genus < 0) throw ValidationError("--genus is required when sweeping l2");
        if (spec.lo < 1) throw ValidationError("--range: l2 must be positive");
        spec.genus = o.genus;
      }
      JoinParams probe{spec.vary == SweepVariable::Genus ? spec.lo : spec.genus, spec.l.first,
                       spec.vary == SweepVariable::Genus ? spec.l.second : 1, spec.w.first, spec.w.second};
      probe.validate();
      const SweepResult res = run_sweep(spec);
      for (const auto& note : res.skipped) err << note << '\n';
      out << (o.format == "csv" ? sweep_csv(res.rows) : sweep_json_lines(res.rows));
      return kExitOk;
    }
    if (sample->parsed()) {
      const JoinParams p = params_from(o);
      SampleSpec spec;
      spec.curves = split(o.curves, ',');
      if (!o.range.empty()) {
        auto [lo_s, hi_s] = parse_range(o.range);
        spec.lo = parse_positive_rational(lo_s, "--range");
        spec.hi = parse_positive_rational(hi_s, "--range");
      }
      spec.points = o.points;
      if (o.log_spacing && o.linear_spacing) throw ValidationError("--log and --linear are mutually exclusive");
      spec.log_spacing = !o.linear_spacing;
      std::string csv;
      try {
        csv = sample_csv(build_bundle(p), spec);
      } catch (const std::invalid_argument& e) {
        throw ValidationError(e.what());
      }
      out << csv;
      return kExitOk;
    }
    if (verify->parsed()) {
      const JoinParams p = params_from(o);
      bool ok = false;
      out << verify_output(p, o.format, ok);
      if (!ok) err << "error: exact identity verification failed\n";
      return ok ? kExitOk : kExitIdentityFailure;
    }
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IdentityFailure& e) {
    err << "error: " << e.what() << '\n';
    return kExitIdentityFailure;
  }
  return kExitUsage;
}

}  // namespace sasaki
