#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "sasaki/critical.hpp"
#include "sasaki/sweep.hpp"

namespace sasaki {

inline constexpr std::string_view kSchemaVersion = "1.0";

struct Certificates {
  bool h_identity_residual_zero = false;
  bool se_identity_residual_zero = false;
  bool swap_symmetry = false;
  bool csc_isolated = false;
  int csc_count = 0;
  bool problem2_witness = false;

  friend bool operator==(const Certificates&, const Certificates&) = default;
};

/// Machine-readable analysis report. Exact values travel as "p/q" strings.
struct ReportDocument {
  std::string schema_version{kSchemaVersion};
  JoinParams params;
  Poly Q, F, g1, g2;
  RatFunc H, SE;
  std::vector<CriticalRay> h_critical;
  std::vector<CriticalRay> se_critical;
  std::vector<CriticalRay> se_excluded;
  Certificates certificates;
  std::vector<Annotation> annotations;
};

bool operator==(const ReportDocument& a, const ReportDocument& b);

ReportDocument make_document(const AnalysisReport& rep);

nlohmann::ordered_json to_json(const ReportDocument& doc);
/// Throws std::invalid_argument on a malformed document.
ReportDocument document_from_json(const nlohmann::ordered_json& j);

std::string serialize_json(const ReportDocument& doc);
ReportDocument parse_report(std::string_view text);

/// One row per critical ray.
std::string analysis_csv(const ReportDocument& doc);

std::string sweep_json_lines(const std::vector<SweepRow>& rows);
std::string sweep_csv(const std::vector<SweepRow>& rows);

struct SampleSpec {
  std::vector<std::string> curves{"H", "SE", "F", "g1", "g2"};
  Rational lo{1, 100};
  Rational hi{100};
  int points = 50;
  bool log_spacing = true;
};

/// Sample abscissae; linear spacing is exact, log spacing rounds interior
/// points through double precision. Both endpoints are always exact.
std::vector<Rational> sample_abscissae(const SampleSpec& spec);

/// CSV with header b,<curves>; values are exact evaluations rendered at 12
/// significant digits, "inf" at a pole. Throws std::invalid_argument on an
/// invalid range, point count or curve name.
std::string sample_csv(const FunctionalBundle& fb, const SampleSpec& spec);

}  // namespace sasaki
