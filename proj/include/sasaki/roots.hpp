#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sasaki/poly.hpp"
#include "sasaki/rational.hpp"

namespace sasaki {

/// A positive real root pinned down by a rational interval.
///
/// For an irrational root 0 < lo < hi and the open interval (lo, hi) holds
/// exactly one distinct root of the target polynomial. A rational root that
/// was detected exactly is stored as the degenerate interval lo == hi.
struct IsolatedRoot {
  Rational lo;
  Rational hi;
  int multiplicity = 1;
  std::string approx;

  bool is_exact() const { return lo == hi; }
  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }

  friend bool operator==(const IsolatedRoot&, const IsolatedRoot&) = default;
};

/// Raised by sturm_count when an endpoint is itself a root.
class EndpointRootError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Number of sign changes in the coefficient sequence (zeros skipped).
int descartes_positive_bound(const Poly& p);

/// Canonical Sturm chain p, p', -rem(p, p'), ...
std::vector<Poly> sturm_chain(const Poly& p);

/// Distinct real roots of p in the open interval (lo, hi); hi = nullopt
/// means +infinity. Throws EndpointRootError when p vanishes at a finite
/// endpoint.
int sturm_count(const Poly& p, const Rational& lo, const std::optional<Rational>& hi);
int sturm_count(const std::vector<Poly>& chain, const Rational& lo, const std::optional<Rational>& hi);

/// Cauchy bound: every root has |root| < 1 + max |a_k / a_n|.
Rational cauchy_bound(const Poly& p);

/// Disjoint isolating intervals for the distinct positive roots of p,
/// ascending, with multiplicities from the square-free factorization.
/// Rational roots are detected exactly and returned as degenerate intervals.
std::vector<IsolatedRoot> isolate_positive_roots(const Poly& p);

/// Bisects r down to width <= tol (an exact root is returned unchanged).
/// Throws std::invalid_argument when tol <= 0.
IsolatedRoot refine_root(const Poly& p, const IsolatedRoot& r, const Rational& tol);

/// Decimal rendering of the interval midpoint with as many significant
/// digits as the width supports (at least 6).
std::string approx_string(const IsolatedRoot& r);

inline const Rational& default_tolerance() {
  static const Rational tol(1, 1000000000);
  return tol;
}

}  // namespace sasaki
