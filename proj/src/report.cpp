#include "sasaki/report.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace sasaki {

using json = nlohmann::ordered_json;

namespace {

json poly_json(const Poly& p) {
  json arr = json::array();
  for (const auto& c : p.coefficients()) arr.push_back(to_exact_string(c));
  return arr;
}

Poly poly_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("coefficient list must be an array");
  std::vector<Rational> c;
  for (const auto& v : j) c.push_back(parse_rational(v.get<std::string>()));
  return Poly(std::move(c));
}

json ratfunc_json(const RatFunc& f) {
  return json{{"numerator", poly_json(f.numerator())}, {"denominator", poly_json(f.denominator())}};
}

RatFunc ratfunc_from_json(const json& j) {
  return RatFunc(poly_from_json(j.at("numerator")), poly_from_json(j.at("denominator")));
}

json ray_json(const CriticalRay& r) {
  json shared = json::array();
  for (auto s : r.shared_with) shared.push_back(std::string(to_string(s)));
  json tags = json::array();
  for (auto t : r.tags) tags.push_back(std::string(to_string(t)));
  return json{{"lo", to_exact_string(r.root.lo)},
              {"hi", to_exact_string(r.root.hi)},
              {"exact", r.root.is_exact()},
              {"approx", r.root.approx},
              {"multiplicity", r.root.multiplicity},
              {"source", std::string(to_string(r.source))},
              {"shared_with", shared},
              {"classification", std::string(to_string(r.classification))},
              {"tags", tags}};
}

template <typename T>
T require(std::optional<T> v, const std::string& what) {
  if (!v) throw std::invalid_argument("unknown " + what);
  return *v;
}

CriticalRay ray_from_json(const json& j, Functional fn) {
  CriticalRay r;
  r.functional = fn;
  r.root.lo = parse_rational(j.at("lo").get<std::string>());
  r.root.hi = parse_rational(j.at("hi").get<std::string>());
  r.root.approx = j.at("approx").get<std::string>();
  r.root.multiplicity = j.at("multiplicity").get<int>();
  const auto src = j.at("source").get<std::string>();
  r.source = require(parse_root_source(src), "root source '" + src + "'");
  for (const auto& s : j.at("shared_with")) {
    r.shared_with.push_back(require(parse_root_source(s.get<std::string>()), "root source"));
  }
  const auto cls = j.at("classification").get<std::string>();
  r.classification = require(parse_classification(cls), "classification '" + cls + "'");
  for (const auto& t : j.at("tags")) r.add_tag(require(parse_ray_tag(t.get<std::string>()), "tag"));
  return r;
}

json rays_json(const std::vector<CriticalRay>& rays) {
  json arr = json::array();
  for (const auto& r : rays) arr.push_back(ray_json(r));
  return arr;
}

std::vector<CriticalRay> rays_from_json(const json& j, Functional fn) {
  std::vector<CriticalRay> out;
  for (const auto& r : j) out.push_back(ray_from_json(r, fn));
  return out;
}

std::string join_names(const std::vector<RayTag>& tags) {
  std::string out;
  for (auto t : tags) {
    if (!out.empty()) out += ';';
    out += to_string(t);
  }
  return out;
}

json sweep_row_json(const SweepRow& r) {
  return json{{"genus", r.params.genus},
              {"l", {r.params.l1, r.params.l2}},
              {"w", {r.params.w1, r.params.w2}},
              {"q_pos_roots", r.q_pos_roots},
              {"f_pos_roots", r.f_pos_roots},
              {"g1_pos_roots", r.g1_pos_roots},
              {"g2_pos_roots", r.g2_pos_roots},
              {"excluded_points", r.excluded_points},
              {"h_critical_count", r.h_critical_count},
              {"se_critical_count", r.se_critical_count}};
}

}  // namespace

bool operator==(const ReportDocument& a, const ReportDocument& b) {
  return a.schema_version == b.schema_version && a.params == b.params && a.Q == b.Q && a.F == b.F &&
         a.g1 == b.g1 && a.g2 == b.g2 && a.H == b.H && a.SE == b.SE && a.h_critical == b.h_critical &&
         a.se_critical == b.se_critical && a.se_excluded == b.se_excluded && a.certificates == b.certificates &&
         a.annotations == b.annotations;
}

ReportDocument make_document(const AnalysisReport& rep) {
  ReportDocument doc;
  doc.params = rep.params();
  doc.Q = rep.bundle.Q;
  doc.F = rep.bundle.F;
  doc.g1 = rep.bundle.g1;
  doc.g2 = rep.bundle.g2;
  doc.H = rep.bundle.H;
  doc.SE = rep.bundle.SE;
  doc.h_critical = rep.h_critical;
  doc.se_critical = rep.se_critical;
  doc.se_excluded = rep.se_excluded;
  doc.certificates = {rep.h_identity.passed, rep.se_identity.passed, rep.swap_symmetry,
                      rep.isolation_certificate, rep.csc_ray_count, rep.problem2};
  doc.annotations = rep.bundle.annotations;
  return doc;
}

json to_json(const ReportDocument& doc) {
  json annotations = json::array();
  for (const auto& a : doc.annotations) annotations.push_back({{"label", a.label}, {"lo", a.lo}, {"hi", a.hi}});
  const auto& c = doc.certificates;
  return json{
      {"schema_version", doc.schema_version},
      {"params",
       {{"genus", doc.params.genus}, {"l", {doc.params.l1, doc.params.l2}}, {"w", {doc.params.w1, doc.params.w2}}}},
      {"functionals",
       {{"Q", poly_json(doc.Q)},
        {"F", poly_json(doc.F)},
        {"g1", poly_json(doc.g1)},
        {"g2", poly_json(doc.g2)},
        {"H", ratfunc_json(doc.H)},
        {"SE", ratfunc_json(doc.SE)}}},
      {"critical_rays", {{"H", rays_json(doc.h_critical)}, {"SE", rays_json(doc.se_critical)}}},
      {"excluded_rays", {{"SE", rays_json(doc.se_excluded)}}},
      {"certificates",
       {{"h_identity_residual_zero", c.h_identity_residual_zero},
        {"se_identity_residual_zero", c.se_identity_residual_zero},
        {"swap_symmetry", c.swap_symmetry},
        {"csc_isolated", c.csc_isolated},
        {"csc_count", c.csc_count},
        {"problem2_witness", c.problem2_witness}}},
      {"annotations", annotations}};
}

ReportDocument document_from_json(const json& j) {
  try {
    ReportDocument doc;
    doc.schema_version = j.at("schema_version").get<std::string>();
    const auto& p = j.at("params");
    doc.params = {p.at("genus").get<std::int64_t>(), p.at("l").at(0).get<std::int64_t>(),
                  p.at("l").at(1).get<std::int64_t>(), p.at("w").at(0).get<std::int64_t>(),
                  p.at("w").at(1).get<std::int64_t>()};
    const auto& f = j.at("functionals");
    doc.Q = poly_from_json(f.at("Q"));
    doc.F = poly_from_json(f.at("F"));
    doc.g1 = poly_from_json(f.at("g1"));
    doc.g2 = poly_from_json(f.at("g2"));
    doc.H = ratfunc_from_json(f.at("H"));
    doc.SE = ratfunc_from_json(f.at("SE"));
    doc.h_critical = rays_from_json(j.at("critical_rays").at("H"), Functional::H);
    doc.se_critical = rays_from_json(j.at("critical_rays").at("SE"), Functional::SE);
    doc.se_excluded = rays_from_json(j.at("excluded_rays").at("SE"), Functional::SE);
    const auto& c = j.at("certificates");
    doc.certificates = {c.at("h_identity_residual_zero").get<bool>(), c.at("se_identity_residual_zero").get<bool>(),
                        c.at("swap_symmetry").get<bool>(),          c.at("csc_isolated").get<bool>(),
                        c.at("csc_count").get<int>(),               c.at("problem2_witness").get<bool>()};
    for (const auto& a : j.at("annotations")) {
      doc.annotations.push_back(
          {a.at("label").get<std::string>(), a.at("lo").get<std::string>(), a.at("hi").get<std::string>()});
    }
    return doc;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed report: ") + e.what());
  }
}

std::string serialize_json(const ReportDocument& doc) { return to_json(doc).dump(2) + "\n"; }

ReportDocument parse_report(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed report: ") + e.what());
  }
  return document_from_json(j);
}

std::string analysis_csv(const ReportDocument& doc) {
  std::ostringstream os;
  os << "functional,source,classification,tags,lo,hi,approx,multiplicity\n";
  auto emit = [&](const std::vector<CriticalRay>& rays) {
    for (const auto& r : rays) {
      os << to_string(r.functional) << ',' << to_string(r.source) << ',' << to_string(r.classification) << ','
         << join_names(r.tags) << ',' << to_exact_string(r.root.lo) << ',' << to_exact_string(r.root.hi) << ','
         << r.root.approx << ',' << r.root.multiplicity << '\n';
    }
  };
  emit(doc.h_critical);
  emit(doc.se_critical);
  emit(doc.se_excluded);
  return os.str();
}

std::string sweep_json_lines(const std::vector<SweepRow>& rows) {
  std::string out;
  for (const auto& r : rows) out += sweep_row_json(r).dump() + "\n";
  return out;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  os << "genus,l1,l2,w1,w2,q_pos_roots,f_pos_roots,g1_pos_roots,g2_pos_roots,excluded_points,"
        "h_critical_count,se_critical_count\n";
  for (const auto& r : rows) {
    os << r.params.genus << ',' << r.params.l1 << ',' << r.params.l2 << ',' << r.params.w1 << ',' << r.params.w2
       << ',' << r.q_pos_roots << ',' << r.f_pos_roots << ',' << r.g1_pos_roots << ',' << r.g2_pos_roots << ','
       << r.excluded_points << ',' << r.h_critical_count << ',' << r.se_critical_count << '\n';
  }
  return os.str();
}

std::vector<Rational> sample_abscissae(const SampleSpec& spec) {
  if (spec.lo <= 0 || spec.hi < spec.lo) throw std::invalid_argument("sample range must satisfy 0 < lo <= hi");
  if (spec.points < 1) throw std::invalid_argument("at least one sample point is required");
  if (spec.points == 1) {
    if (spec.lo != spec.hi) throw std::invalid_argument("a single sample point needs lo == hi");
    return {spec.lo};
  }
  if (spec.lo == spec.hi) throw std::invalid_argument("sample range must satisfy lo < hi for several points");
  std::vector<Rational> xs;
  const int n = spec.points;
  xs.reserve(static_cast<size_t>(n));
  const double llo = std::log(spec.lo.get_d());
  const double lhi = std::log(spec.hi.get_d());
  for (int i = 0; i < n; ++i) {
    if (i == 0) {
      xs.push_back(spec.lo);
    } else if (i == n - 1) {
      xs.push_back(spec.hi);
    } else if (spec.log_spacing) {
      const double t = static_cast<double>(i) / (n - 1);
      xs.emplace_back(std::exp(llo + t * (lhi - llo)));
    } else {
      xs.push_back(spec.lo + (spec.hi - spec.lo) * Rational(i) / (n - 1));
    }
  }
  return xs;
}

std::string sample_csv(const FunctionalBundle& fb, const SampleSpec& spec) {
  for (const auto& c : spec.curves) {
    if (c != "H" && c != "SE" && c != "F" && c != "g1" && c != "g2") {
      throw std::invalid_argument("unknown curve '" + c + "'");
    }
  }
  if (spec.curves.empty()) throw std::invalid_argument("no curves requested");
  const std::vector<Rational> xs = sample_abscissae(spec);
  constexpr int kDigits = 12;
  std::ostringstream os;
  os << 'b';
  for (const auto& c : spec.curves) os << ',' << c;
  os << '\n';
  for (const auto& x : xs) {
    os << to_decimal(x, kDigits);
    for (const auto& c : spec.curves) {
      std::optional<Rational> v;
      if (c == "H") v = fb.H(x);
      else if (c == "SE") v = fb.SE(x);
      else if (c == "F") v = fb.F(x);
      else if (c == "g1") v = fb.g1(x);
      else v = fb.g2(x);
      os << ',' << (v ? to_decimal(*v, kDigits) : std::string("inf"));
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace sasaki
