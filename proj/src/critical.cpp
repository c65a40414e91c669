#include "sasaki/critical.hpp"

#include <algorithm>
#include <array>
#include <iostream>
#include <utility>

namespace sasaki {

namespace {

constexpr std::array<std::string_view, 2> kFunctionalNames{"H", "SE"};
constexpr std::array<std::string_view, 4> kSourceNames{"F", "Q", "g1", "g2"};
constexpr std::array<std::string_view, 3> kClassNames{"local_min", "local_max", "inflection"};
constexpr std::array<std::string_view, 5> kTagNames{"cscS", "S_zero", "SE_zero", "global_min",
                                                    "excluded_b_eq_w2_over_w1"};

template <typename Enum, size_t N>
std::optional<Enum> parse_enum(const std::array<std::string_view, N>& names, std::string_view s) {
  for (size_t i = 0; i < N; ++i) {
    if (names[i] == s) return static_cast<Enum>(i);
  }
  return std::nullopt;
}

Poly positive_squarefree(const Poly& p) { return gcd_and_squarefree(p).squarefree_part.strip_zero_roots().first; }

bool has_root_in(const Poly& sqf, const IsolatedRoot& r) {
  if (r.is_exact()) return sqf(r.lo) == 0;
  return sturm_count(sqf, r.lo, r.hi) >= 1;
}

// a and b each hold exactly one root of the square-free g; decides whether
// it is the same root.
bool same_root(const Poly& g, const IsolatedRoot& a, const IsolatedRoot& b) {
  Rational lo = std::max(a.lo, b.lo);
  Rational hi = std::min(a.hi, b.hi);
  if (lo > hi) return false;
  if (lo == hi) return g(lo) == 0 && (a.is_exact() || b.is_exact());
  return sturm_count(g, lo, hi) >= 1;
}

// Enclosure of p over [lo, hi] with lo >= 0: the positive and negative
// coefficient parts are each nondecreasing in b.
std::pair<Rational, Rational> enclose(const Poly& p, const Rational& lo, const Rational& hi) {
  std::vector<Rational> pos(p.coefficients().size()), neg(p.coefficients().size());
  for (size_t k = 0; k < pos.size(); ++k) {
    const Rational& c = p.coefficients()[k];
    if (c > 0) pos[k] = c;
    else neg[k] = -c;
  }
  Poly P(std::move(pos)), N(std::move(neg));
  return {P(lo) - N(hi), P(hi) - N(lo)};
}

// Enclosure of rf over [lo, hi]; nullopt when the denominator enclosure
// straddles zero.
std::optional<std::pair<Rational, Rational>> enclose(const RatFunc& rf, const Rational& lo, const Rational& hi) {
  auto [nlo, nhi] = enclose(rf.numerator(), lo, hi);
  auto [dlo, dhi] = enclose(rf.denominator(), lo, hi);
  if (dlo <= 0 && dhi >= 0) return std::nullopt;
  std::array<Rational, 4> q{nlo / dlo, nlo / dhi, nhi / dlo, nhi / dhi};
  return std::make_pair(*std::min_element(q.begin(), q.end()), *std::max_element(q.begin(), q.end()));
}

struct Candidate {
  CriticalRay ray;
  Poly owner;  // square-free polynomial whose sign changes bracket the root
};

void halve(Candidate& c) {
  if (c.ray.root.is_exact()) return;
  IsolatedRoot r = refine_root(c.owner, c.ray.root, c.ray.root.width() / 2);
  c.ray.root = std::move(r);
}

struct Factor {
  RootSource source;
  Poly poly;
};

// Distinct positive roots of the product of the factors, each carried by the
// first factor that vanishes there and refined to tol. Intervals are made
// pairwise disjoint.
std::vector<Candidate> collect_roots(const std::vector<Factor>& factors, const Rational& tol, Functional fn) {
  std::vector<Candidate> out;
  std::vector<size_t> owner_index;
  for (size_t k = 0; k < factors.size(); ++k) {
    const Poly sqf_k = positive_squarefree(factors[k].poly);
    if (sqf_k.degree() <= 0) continue;
    for (const IsolatedRoot& iso : isolate_positive_roots(factors[k].poly)) {
      IsolatedRoot r = refine_root(sqf_k, iso, tol);
      r.multiplicity = iso.multiplicity;
      bool merged = false;
      for (size_t c = 0; c < out.size() && !merged; ++c) {
        const Factor& fj = factors[owner_index[c]];
        Poly g = gcd(fj.poly, factors[k].poly).strip_zero_roots().first;
        if (g.degree() <= 0) continue;
        g = positive_squarefree(g);
        if (!has_root_in(g, r) || !has_root_in(g, out[c].ray.root)) continue;
        if (same_root(g, out[c].ray.root, r)) {
          out[c].ray.shared_with.push_back(factors[k].source);
          merged = true;
        }
      }
      if (merged) continue;
      Candidate cand;
      cand.ray.root = std::move(r);
      cand.ray.source = factors[k].source;
      cand.ray.functional = fn;
      cand.owner = sqf_k;
      out.push_back(std::move(cand));
      owner_index.push_back(k);
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Candidate& a, const Candidate& b) { return a.ray.root.lo < b.ray.root.lo; });
  for (bool overlap = true; overlap;) {
    overlap = false;
    for (size_t i = 0; i + 1 < out.size(); ++i) {
      if (out[i].ray.root.hi >= out[i + 1].ray.root.lo) {
        halve(out[i]);
        halve(out[i + 1]);
        overlap = true;
      }
    }
  }
  return out;
}

void classify_all(const RatFunc& rf, std::vector<Candidate>& cands) {
  for (auto& c : cands) {
    for (int attempt = 0;; ++attempt) {
      try {
        c.ray.classification = classify(rf, c.ray.root);
        break;
      } catch (const ImpureIntervalError&) {
        if (attempt >= 200 || c.ray.root.is_exact()) throw;
        halve(c);
      }
    }
  }
}

// Tags the local minimum (or minima, on an exact tie) with the smallest
// value of rf. Works on copies so reported intervals are untouched.
void mark_global_min(const RatFunc& rf, std::vector<Candidate>& cands) {
  std::vector<size_t> idx;
  for (size_t i = 0; i < cands.size(); ++i) {
    if (cands[i].ray.classification == Classification::LocalMin) idx.push_back(i);
  }
  if (idx.empty()) return;
  std::vector<Candidate> work;
  for (size_t i : idx) work.push_back(cands[i]);
  std::vector<bool> alive(work.size(), true);
  constexpr int kMaxRounds = 400;
  for (int round = 0; round <= kMaxRounds; ++round) {
    std::vector<std::optional<std::pair<Rational, Rational>>> enc(work.size());
    std::optional<Rational> best_upper;
    for (size_t i = 0; i < work.size(); ++i) {
      if (!alive[i]) continue;
      const IsolatedRoot& r = work[i].ray.root;
      enc[i] = enclose(rf, r.lo, r.hi);
      if (enc[i] && (!best_upper || enc[i]->second < *best_upper)) best_upper = enc[i]->second;
    }
    size_t n_alive = 0;
    bool all_exact = true;
    for (size_t i = 0; i < work.size(); ++i) {
      if (!alive[i]) continue;
      if (enc[i] && best_upper && enc[i]->first > *best_upper) {
        alive[i] = false;
        continue;
      }
      ++n_alive;
      all_exact = all_exact && work[i].ray.root.is_exact();
    }
    if (n_alive <= 1 || all_exact) break;
    for (size_t i = 0; i < work.size(); ++i) {
      if (alive[i]) halve(work[i]);
    }
  }
  for (size_t i = 0; i < work.size(); ++i) {
    if (alive[i]) cands[idx[i]].ray.add_tag(RayTag::GlobalMin);
  }
}

std::vector<CriticalRay> unwrap(std::vector<Candidate>&& cands) {
  std::vector<CriticalRay> rays;
  rays.reserve(cands.size());
  for (auto& c : cands) {
    c.ray.root.approx = approx_string(c.ray.root);
    rays.push_back(std::move(c.ray));
  }
  return rays;
}

}  // namespace

std::string_view to_string(Functional f) { return kFunctionalNames[static_cast<size_t>(f)]; }
std::string_view to_string(RootSource s) { return kSourceNames[static_cast<size_t>(s)]; }
std::string_view to_string(Classification c) { return kClassNames[static_cast<size_t>(c)]; }
std::string_view to_string(RayTag t) { return kTagNames[static_cast<size_t>(t)]; }

std::optional<Functional> parse_functional(std::string_view s) { return parse_enum<Functional>(kFunctionalNames, s); }
std::optional<RootSource> parse_root_source(std::string_view s) { return parse_enum<RootSource>(kSourceNames, s); }
std::optional<Classification> parse_classification(std::string_view s) {
  return parse_enum<Classification>(kClassNames, s);
}
std::optional<RayTag> parse_ray_tag(std::string_view s) { return parse_enum<RayTag>(kTagNames, s); }

bool CriticalRay::has(RayTag t) const { return std::find(tags.begin(), tags.end(), t) != tags.end(); }

bool CriticalRay::vanishes(RootSource s) const {
  return source == s || std::find(shared_with.begin(), shared_with.end(), s) != shared_with.end();
}

void CriticalRay::add_tag(RayTag t) {
  if (has(t)) return;
  tags.push_back(t);
  std::sort(tags.begin(), tags.end());
}

Classification classify(const RatFunc& rf, const IsolatedRoot& root) {
  const RatFunc d = rf.derivative();
  if (d.numerator().is_zero()) throw ImpureIntervalError("interval not pure: derivative vanishes identically");
  const Poly num = gcd_and_squarefree(d.numerator()).squarefree_part;
  const Poly den = gcd_and_squarefree(d.denominator()).squarefree_part;

  auto pure = [&](const Rational& lo, const Rational& hi) {
    if (lo <= 0) return false;
    if (num(lo) == 0 || num(hi) == 0 || den(lo) == 0 || den(hi) == 0) return false;
    if (den.degree() > 0 && sturm_count(den, lo, hi) != 0) return false;
    return sturm_count(num, lo, hi) == 1;
  };

  Rational lo = root.lo;
  Rational hi = root.hi;
  if (root.is_exact()) {
    if (num(lo) != 0) throw ImpureIntervalError("interval not pure: point is not a critical point");
    Rational delta = lo / 2;
    int tries = 0;
    while (!pure(root.lo - delta, root.hi + delta)) {
      delta /= 2;
      if (++tries > 400) throw ImpureIntervalError("interval not pure: no clean neighborhood found");
    }
    lo = root.lo - delta;
    hi = root.hi + delta;
  } else if (!pure(lo, hi)) {
    throw ImpureIntervalError("interval not pure; refine the root first");
  }

  const int left = sgn(*d(lo));
  const int right = sgn(*d(hi));
  if (left < 0 && right > 0) return Classification::LocalMin;
  if (left > 0 && right < 0) return Classification::LocalMax;
  return Classification::Inflection;
}

std::vector<CriticalRay> analyze_h(const JoinParams& p, const Rational& tol) {
  const FunctionalBundle fb = build_bundle(p);
  auto cands = collect_roots({{RootSource::F, fb.F}, {RootSource::Q, fb.Q}}, tol, Functional::H);
  classify_all(fb.H, cands);
  for (auto& c : cands) {
    if (c.ray.vanishes(RootSource::F)) c.ray.add_tag(RayTag::Csc);
    if (c.ray.vanishes(RootSource::Q)) c.ray.add_tag(RayTag::SZero);
  }
  mark_global_min(fb.H, cands);
  return unwrap(std::move(cands));
}

SeAnalysis analyze_se_detailed(const JoinParams& p, const Rational& tol) {
  const FunctionalBundle fb = build_bundle(p);
  auto cands = collect_roots({{RootSource::F, fb.F}, {RootSource::G1, fb.g1}, {RootSource::G2, fb.g2}}, tol,
                             Functional::SE);
  classify_all(fb.SE, cands);

  const Rational excluded_b(static_cast<long>(p.w2), static_cast<long>(p.w1));
  const bool g2_hits_excluded = fb.g2(excluded_b) == 0;
  SeAnalysis out;
  std::vector<Candidate> kept;
  std::vector<Candidate> dropped;
  for (auto& c : cands) {
    if (c.ray.vanishes(RootSource::F)) c.ray.add_tag(RayTag::Csc);
    if (c.ray.vanishes(RootSource::G1)) {
      c.ray.add_tag(RayTag::SEZero);
      if (p.genus <= 1) throw std::logic_error("SE vanishes at a ray with genus <= 1: " + to_string(p));
    }
    const bool pure_g2 = c.ray.source == RootSource::G2 && c.ray.shared_with.empty();
    if (pure_g2 && g2_hits_excluded && c.ray.root.lo <= excluded_b && excluded_b <= c.ray.root.hi) {
      c.ray.add_tag(RayTag::ExcludedW2OverW1);
      dropped.push_back(std::move(c));
    } else {
      kept.push_back(std::move(c));
    }
  }
  mark_global_min(fb.SE, kept);
  out.critical = unwrap(std::move(kept));
  out.excluded = unwrap(std::move(dropped));
  return out;
}

std::vector<CriticalRay> analyze_se(const JoinParams& p, const Rational& tol) {
  return analyze_se_detailed(p, tol).critical;
}

IsolationCertificate csc_isolation_certificate(const JoinParams& p) {
  p.validate();
  const Poly F = f_polynomial(p);
  const SquarefreeSplit split = gcd_and_squarefree(F);
  // F(0) = -l1 w2^2 != 0, so 0 is a legal Sturm endpoint.
  return {split.gcd_with_derivative.degree() == 0, sturm_count(split.squarefree_part, 0, std::nullopt)};
}

bool problem2_witness(const JoinParams& p) {
  p.validate();
  const bool found = sturm_count(f_polynomial(p), 0, std::nullopt) >= 1;
  if (!found) {
    std::cerr << "COUNTEREXAMPLE CANDIDATE: no cscS ray for " << to_string(p) << '\n';
  }
  return found;
}

AnalysisReport analyze(const JoinParams& p, const Rational& tol) {
  AnalysisReport rep;
  rep.bundle = build_bundle(p);
  rep.h_identity = verify_h_derivative_identity(rep.bundle);
  rep.se_identity = verify_se_derivative_identity(rep.bundle);
  rep.swap_symmetry = verify_swap_symmetry(p);
  rep.h_critical = analyze_h(p, tol);
  SeAnalysis se = analyze_se_detailed(p, tol);
  rep.se_critical = std::move(se.critical);
  rep.se_excluded = std::move(se.excluded);
  const IsolationCertificate cert = csc_isolation_certificate(p);
  rep.csc_ray_count = cert.csc_count;
  rep.isolation_certificate = cert.isolated;
  rep.problem2 = problem2_witness(p);
  return rep;
}

}  // namespace sasaki
