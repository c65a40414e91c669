#pragma once

#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "sasaki/join.hpp"
#include "sasaki/roots.hpp"

namespace sasaki {

enum class Functional { H, SE };
enum class RootSource { F, Q, G1, G2 };
enum class Classification { LocalMin, LocalMax, Inflection };
enum class RayTag { Csc, SZero, SEZero, GlobalMin, ExcludedW2OverW1 };

std::string_view to_string(Functional f);
std::string_view to_string(RootSource s);
std::string_view to_string(Classification c);
std::string_view to_string(RayTag t);

std::optional<Functional> parse_functional(std::string_view s);
std::optional<RootSource> parse_root_source(std::string_view s);
std::optional<Classification> parse_classification(std::string_view s);
std::optional<RayTag> parse_ray_tag(std::string_view s);

/// A critical b-value of H or SE. `source` is the first factor of the
/// derivative numerator (in the order F, Q, g1, g2) that vanishes there;
/// `shared_with` lists any further factors vanishing at the same b.
struct CriticalRay {
  IsolatedRoot root;
  RootSource source = RootSource::F;
  std::vector<RootSource> shared_with;
  Classification classification = Classification::Inflection;
  std::vector<RayTag> tags;  // ascending enum order, no duplicates
  Functional functional = Functional::H;

  bool has(RayTag t) const;
  bool vanishes(RootSource s) const;
  void add_tag(RayTag t);

  friend bool operator==(const CriticalRay&, const CriticalRay&) = default;
};

class ImpureIntervalError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Certified local_min / local_max / inflection from the exact signs of rf'
/// on both sides of the root. Throws ImpureIntervalError ("interval not
/// pure") when the interval meets a pole or another root of the numerator
/// of rf'.
Classification classify(const RatFunc& rf, const IsolatedRoot& root);

/// Critical rays of H: positive roots of Q (tag S_zero) and of F (tag cscS).
std::vector<CriticalRay> analyze_h(const JoinParams& p, const Rational& tol = default_tolerance());

struct SeAnalysis {
  std::vector<CriticalRay> critical;
  /// Pure g2 roots at exactly b = w2/w1, removed from `critical`.
  std::vector<CriticalRay> excluded;
};

SeAnalysis analyze_se_detailed(const JoinParams& p, const Rational& tol = default_tolerance());
/// Critical rays of SE: positive roots of F, g1 and g2 minus any excluded point.
std::vector<CriticalRay> analyze_se(const JoinParams& p, const Rational& tol = default_tolerance());

struct IsolationCertificate {
  bool isolated = false;  // gcd(F, F') constant
  int csc_count = 0;      // distinct positive roots of F
};

IsolationCertificate csc_isolation_certificate(const JoinParams& p);

/// True iff F has a positive root. A false result is reported on stderr as
/// a counterexample candidate.
bool problem2_witness(const JoinParams& p);

struct AnalysisReport {
  FunctionalBundle bundle;
  std::vector<CriticalRay> h_critical;
  std::vector<CriticalRay> se_critical;
  std::vector<CriticalRay> se_excluded;
  int csc_ray_count = 0;
  bool isolation_certificate = false;
  IdentityReport h_identity;
  IdentityReport se_identity;
  bool swap_symmetry = false;
  bool problem2 = false;

  const JoinParams& params() const { return bundle.params; }
  bool identities_hold() const { return h_identity.passed && se_identity.passed && swap_symmetry; }
};

AnalysisReport analyze(const JoinParams& p, const Rational& tol = default_tolerance());

}  // namespace sasaki
