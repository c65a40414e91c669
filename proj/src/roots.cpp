#include "sasaki/roots.hpp"

#include <algorithm>
#include <memory>

namespace sasaki {

namespace {

// Positive rescaling to coprime integer coefficients; preserves signs.
Poly normalized(const Poly& p) {
  if (p.is_zero()) return p;
  Poly q = p.primitive();
  return p.leading() < 0 ? -q : q;
}

int sign_variations(const std::vector<Poly>& chain, const std::optional<Rational>& x) {
  int changes = 0;
  int last = 0;
  for (const auto& q : chain) {
    int s = x ? q.sign_at(*x) : sgn(q.leading());
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

Rational next_power_of_two_at_least(const Rational& x) {
  Rational p = 1;
  while (p < x) p *= 2;
  return p;
}

struct Bracket {
  std::shared_ptr<const Poly> poly;
  std::shared_ptr<const std::vector<Poly>> chain;
  Rational lo;
  Rational hi;
};

// Largest leading coefficient for which exact rational-root snapping is
// attempted (divisor enumeration by trial division).
constexpr unsigned long kSnapLeadLimit = 1000000000000UL;

std::vector<unsigned long> divisors(unsigned long n) {
  std::vector<unsigned long> out;
  for (unsigned long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    if (d != n / d) out.push_back(n / d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Rational ceil_rational(const Rational& x) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  return Rational(q);
}

// Narrows r (a sign-change bracket of the square-free s) by bisection
// until its width is <= tol or the root is hit exactly.
void bisect_to(const Poly& s, IsolatedRoot& r, const Rational& tol) {
  if (r.is_exact()) return;
  int s_lo = s.sign_at(r.lo);
  while (r.width() > tol) {
    Rational mid = r.midpoint();
    int s_mid = s.sign_at(mid);
    if (s_mid == 0) {
      r.lo = mid;
      r.hi = mid;
      return;
    }
    if (s_mid == s_lo) {
      r.lo = mid;
    } else {
      r.hi = mid;
    }
  }
}

// Tries to prove the root inside r rational: any rational root p/q of an
// integer polynomial has q dividing the leading coefficient.
void snap_rational(const Poly& s, IsolatedRoot& r) {
  if (r.is_exact()) return;
  Poly prim = s.primitive();
  Integer lead = abs(prim.leading().get_num());
  if (!lead.fits_ulong_p() || lead.get_ui() > kSnapLeadLimit) return;
  const unsigned long n = lead.get_ui();
  bisect_to(s, r, Rational(1, n + 1));
  if (r.is_exact()) return;
  for (unsigned long q : divisors(n)) {
    Rational first = ceil_rational(r.lo * q);
    for (Rational k = first; k / q < r.hi; k += 1) {
      Rational cand = k / q;
      if (cand <= r.lo) continue;
      if (s(cand) == 0) {
        r.lo = cand;
        r.hi = cand;
        return;
      }
    }
  }
}

}  // namespace

int descartes_positive_bound(const Poly& p) {
  if (p.is_zero()) throw std::domain_error("Descartes bound of the zero polynomial");
  int changes = 0;
  int last = 0;
  for (const auto& c : p.coefficients()) {
    int s = sgn(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

std::vector<Poly> sturm_chain(const Poly& p) {
  std::vector<Poly> chain;
  if (p.is_zero()) return chain;
  chain.push_back(normalized(p));
  Poly d = normalized(p.derivative());
  if (d.is_zero()) return chain;
  chain.push_back(d);
  while (true) {
    Poly r = divide(chain[chain.size() - 2], chain.back()).remainder;
    if (r.is_zero()) break;
    chain.push_back(normalized(-r));
  }
  return chain;
}

int sturm_count(const std::vector<Poly>& chain, const Rational& lo, const std::optional<Rational>& hi) {
  if (chain.empty()) throw std::domain_error("Sturm count of the zero polynomial");
  if (chain.front().sign_at(lo) == 0 || (hi && chain.front().sign_at(*hi) == 0)) {
    throw EndpointRootError("interval endpoint is a root; perturb the endpoint or deflate the polynomial");
  }
  if (hi && *hi <= lo) return 0;
  return sign_variations(chain, lo) - sign_variations(chain, hi);
}

int sturm_count(const Poly& p, const Rational& lo, const std::optional<Rational>& hi) {
  return sturm_count(sturm_chain(p), lo, hi);
}

Rational cauchy_bound(const Poly& p) {
  if (p.is_zero()) throw std::domain_error("root bound of the zero polynomial");
  Rational m = 0;
  const Rational& lead = p.leading();
  for (int k = 0; k < p.degree(); ++k) m = std::max(m, Rational(abs(p.coeff(k) / lead)));
  return m + 1;
}

std::string approx_string(const IsolatedRoot& r) {
  if (r.is_exact()) return to_decimal(r.lo, 12);
  Rational mid = r.midpoint();
  Rational ratio = abs(mid) / r.width();
  long digits = static_cast<long>(mpz_sizeinbase(ratio.get_num().get_mpz_t(), 10)) -
                static_cast<long>(mpz_sizeinbase(ratio.get_den().get_mpz_t(), 10));
  digits = std::clamp(digits, 6L, 40L);
  return to_decimal(mid, static_cast<int>(digits));
}

std::vector<IsolatedRoot> isolate_positive_roots(const Poly& p) {
  if (p.is_zero()) throw std::domain_error("cannot isolate roots of the zero polynomial");
  const std::vector<Poly> factors = squarefree_factorization(p);
  Poly s = normalized(gcd_and_squarefree(p).squarefree_part.strip_zero_roots().first);
  std::vector<IsolatedRoot> roots;
  if (s.degree() <= 0) return roots;
  std::vector<std::shared_ptr<const Poly>> owners;

  const Rational bound = next_power_of_two_at_least(cauchy_bound(s));
  // Positive roots exceed the reciprocal of the root bound of the reversed polynomial.
  const Rational floor = 1 / next_power_of_two_at_least(cauchy_bound(s.reciprocal(s.degree())));
  std::vector<Bracket> stack;
  stack.push_back({std::make_shared<const Poly>(s), std::make_shared<const std::vector<Poly>>(sturm_chain(s)),
                   floor, bound});
  while (!stack.empty()) {
    Bracket br = std::move(stack.back());
    stack.pop_back();
    int n = sturm_count(*br.chain, br.lo, br.hi);
    if (n == 0) continue;
    if (n == 1) {
      roots.push_back({br.lo, br.hi, 1, {}});
      owners.push_back(br.poly);
      continue;
    }
    Rational mid = (br.lo + br.hi) / 2;
    if (br.poly->sign_at(mid) == 0) {
      roots.push_back({mid, mid, 1, {}});
      owners.push_back(br.poly);
      auto deflated = std::make_shared<const Poly>(
          normalized(divide(*br.poly, Poly(std::vector<Rational>{-mid, 1})).quotient));
      auto chain = std::make_shared<const std::vector<Poly>>(sturm_chain(*deflated));
      stack.push_back({deflated, chain, br.lo, mid});
      stack.push_back({deflated, chain, mid, br.hi});
    } else {
      stack.push_back({br.poly, br.chain, br.lo, mid});
      stack.push_back({br.poly, br.chain, mid, br.hi});
    }
  }

  for (size_t k = 0; k < roots.size(); ++k) {
    IsolatedRoot& r = roots[k];
    // A bracket of a deflated polynomial may end on a root of s that was
    // removed by deflation; shrink it until both endpoints are clean.
    while (!r.is_exact() && (s.sign_at(r.lo) == 0 || s.sign_at(r.hi) == 0)) {
      const Poly& owner = *owners[k];
      Rational mid = r.midpoint();
      int m = owner.sign_at(mid);
      if (m == 0) {
        r.lo = r.hi = mid;
      } else if (m == owner.sign_at(r.lo)) {
        r.lo = mid;
      } else {
        r.hi = mid;
      }
    }
    snap_rational(s, r);
    r.multiplicity = 0;
    for (size_t i = 0; i < factors.size() && r.multiplicity == 0; ++i) {
      if (factors[i].degree() <= 0) continue;
      bool hit = r.is_exact() ? factors[i](r.lo) == 0 : sturm_count(factors[i], r.lo, r.hi) == 1;
      if (hit) r.multiplicity = static_cast<int>(i) + 1;
    }
    r.approx = approx_string(r);
  }
  std::sort(roots.begin(), roots.end(), [](const IsolatedRoot& a, const IsolatedRoot& b) { return a.lo < b.lo; });
  return roots;
}

IsolatedRoot refine_root(const Poly& p, const IsolatedRoot& r, const Rational& tol) {
  if (tol <= 0) throw std::invalid_argument("refinement tolerance must be positive");
  IsolatedRoot out = r;
  if (!out.is_exact()) {
    Poly s = gcd_and_squarefree(p).squarefree_part;
    int a = s.sign_at(out.lo);
    int b = s.sign_at(out.hi);
    if (a == 0 || b == 0 || a == b) throw std::domain_error("refine_root: interval does not bracket a simple root");
    bisect_to(s, out, tol);
  }
  out.approx = approx_string(out);
  return out;
}

}  // namespace sasaki
