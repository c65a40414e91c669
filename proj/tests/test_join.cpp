#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sasaki/join.hpp"
#include "sasaki/roots.hpp"
#include "test_support.hpp"

using namespace sasaki;
using namespace sasaki::testing;

namespace {

// Independent route to H': quotient rule written out for
// H = Q^3 / (b^2 L^2), with L = w1 b + w2, returned as numerator/denominator.
std::pair<Poly, Poly> h_derivative_by_hand(const JoinParams& p) {
  const Poly Q = q_polynomial(p);
  const Poly L = weight_linear(p);
  const Poly b = Poly::identity();
  const Poly den = b * b * L * L;
  const Poly dden = Rational(2) * b * L * L + Rational(2) * b * b * L * L.derivative();
  const Poly num = Rational(3) * Q * Q * Q.derivative() * den - pow(Q, 3) * dden;
  return {num, den * den};
}

// Symmetric difference quotient evaluated exactly in rationals.
Rational central_difference(const RatFunc& f, const Rational& x, const Rational& h) {
  return (*f(x + h) - *f(x - h)) / (2 * h);
}

}  // namespace

TEST_CASE("JoinParams validation") {
  CHECK_NOTHROW(kGenus2L101.validate());
  CHECK_THROWS_WITH_AS((JoinParams{2, 2, 4, 3, 2}.validate()), doctest::Contains("l1 and l2"), ValidationError);
  CHECK_THROWS_WITH_AS((JoinParams{2, 1, 4, 4, 2}.validate()), doctest::Contains("w1 and w2"), ValidationError);
  CHECK_THROWS_WITH_AS((JoinParams{-1, 1, 1, 1, 1}.validate()), doctest::Contains("genus"), ValidationError);
  CHECK_THROWS_AS((JoinParams{0, 0, 1, 1, 1}.validate()), ValidationError);
  CHECK_THROWS_AS((JoinParams{0, 1, 1, 1, 0}.validate()), ValidationError);
  CHECK_THROWS_AS(build_bundle(JoinParams{2, 2, 4, 3, 2}), ValidationError);
}

TEST_CASE("build_bundle: closed-form H for G=2, l=(1,19), w=(3,2)") {
  const FunctionalBundle fb = build_bundle(kGenus2L19);
  const Poly expected_num = pow(Poly::from_ints({2, -38, 3}), 3);
  const Poly expected_den = Poly::monomial(1, 2) * pow(Poly::from_ints({2, 3}), 2);
  CHECK(fb.H.numerator() == expected_num);
  CHECK(fb.H.denominator() == expected_den);
  CHECK(fb.Q == Poly::from_ints({2, -38, 3}));
}

TEST_CASE("build_bundle: g1 matches the closed-form SE numerators") {
  CHECK(as_strings(build_bundle(kGenus2L101).g1) == std::vector<std::string>{"8", "36", "38356", "58746", "54", "27"});
  CHECK(as_strings(build_bundle(kGenus2L19).g1) == std::vector<std::string>{"8", "36", "964", "1674", "54", "27"});
  CHECK(as_strings(build_bundle(kGenusZero).g1) == std::vector<std::string>{"8", "36", "43204", "63594", "54", "27"});
}

TEST_CASE("build_bundle: closed-form SE for G=2, l=(1,101), w=(3,2)") {
  const FunctionalBundle fb = build_bundle(kGenus2L101);
  const Poly g1 = Poly::from_ints({8, 36, 38356, 58746, 54, 27});
  const Poly den = Poly::monomial(1, 4) * Poly::from_ints({2, 3}) * pow(Poly::from_ints({4, 24, 9}), 3);
  CHECK(fb.SE == RatFunc(pow(g1, 3), den));
  CHECK(fb.annotations.size() == 1);
  CHECK(fb.annotations[0].lo == "0.295");
}

TEST_CASE("build_bundle: G=1, l=(1,1), w=(1,1)") {
  const FunctionalBundle fb = build_bundle({1, 1, 1, 1, 1});
  CHECK(fb.F == Poly::from_ints({-1, -2, 2, 1}));
  CHECK(fb.Q == Poly::from_ints({1, 0, 1}));
  CHECK(fb.H == RatFunc(pow(Poly::from_ints({1, 0, 1}), 3), Poly::monomial(1, 2) * pow(Poly::from_ints({1, 1}), 2)));
  CHECK(fb.annotations.empty());
}

TEST_CASE("build_bundle: degrees") {
  for (const auto& p : random_tuples(20)) {
    const FunctionalBundle fb = build_bundle(p);
    CHECK(fb.F.degree() == 3);
    CHECK(fb.g1.degree() == 5);
    CHECK(fb.g2.degree() == 5);
    CHECK(fb.Q.degree() == 2);
  }
}

TEST_CASE("F and g2 for the arbitrary-genus family l=(1,1), w=(3,2)") {
  CHECK(build_bundle({4, 1, 1, 3, 2}).F == Poly::from_ints({-4, -18, 21, 9}));
  CHECK(build_bundle({2, 1, 101, 3, 2}).F == Poly::from_ints({-4, -214, 315, 9}));
  CHECK(build_bundle({18, 1, 1, 3, 2}).g2 == Poly::from_ints({16, 32, 24, -90, -81, 81}));
  CHECK(build_bundle({0, 1, 1, 1, 1}).g2 == Poly::from_ints({1, 8, 15, 15, 8, 1}));
}

TEST_CASE("H derivative identity: oracle fixes the constant 2") {
  for (const JoinParams& p : {kGenus2L101, JoinParams{4, 1, 1, 3, 2}, JoinParams{0, 1, 1, 1, 1}}) {
    const FunctionalBundle fb = build_bundle(p);
    // Leading coefficients: 3 (l1 w1)^2 (2 l1 w1) w1^2 - (l1 w1)^3 (4 w1^2) = 2 (l1 w1)^3 w1^2,
    // against 2 Q^2 F leading 2 (l1 w1)^2 (l1 w1^2).
    auto [num, den] = h_derivative_by_hand(p);
    const Poly L = weight_linear(p);
    const Poly closed = Rational(2) * fb.Q * fb.Q * fb.F;
    CHECK((num * Poly::monomial(1, 3) * pow(L, 3) - closed * den).is_zero());

    const IdentityReport r = verify_h_derivative_identity(fb);
    CHECK(r.passed);
    CHECK(r.residual.is_zero());
  }
}

TEST_CASE("H derivative identity: finite-difference cross-check") {
  const FunctionalBundle fb = build_bundle(kGenus2L101);
  const RatFunc closed(Rational(2) * fb.Q * fb.Q * fb.F,
                       Poly::monomial(1, 3) * pow(weight_linear(kGenus2L101), 3));
  for (const Rational x : {Rational(1, 3), Rational(7, 10), Rational(5), Rational(40)}) {
    const Rational h = x / 1000000;
    const Rational fd = central_difference(fb.H, x, h);
    const Rational exact = *closed(x);
    CHECK(abs(fd - exact) <= abs(exact) * Rational(1, 100000) + Rational(1, 1000000));
  }
}

TEST_CASE("SE derivative identity on worked examples and random tuples") {
  for (const JoinParams& p : {kGenus2L101, kGenus2L19}) CHECK(verify_se_derivative_identity(build_bundle(p)).passed);
  for (const auto& p : random_tuples(50)) {
    const IdentityReport r = verify_se_derivative_identity(build_bundle(p));
    CHECK_MESSAGE(r.residual.is_zero(), to_string(p));
  }
}

TEST_CASE("SE derivative closed form: finite-difference cross-check") {
  for (const JoinParams& p : {kGenus2L101, kGenus2L19, JoinParams{7, 2, 3, 5, 4}}) {
    const FunctionalBundle fb = build_bundle(p);
    const Poly L = weight_linear(p);
    const RatFunc closed(Rational(4) * fb.F * fb.g1 * fb.g1 * fb.g2,
                         Poly::monomial(1, 5) * L * L * pow(se_quadratic(p), 4));
    for (const Rational x : {Rational(1, 4), Rational(2), Rational(30)}) {
      const Rational fd = central_difference(fb.SE, x, x / 10000000);
      const Rational exact = *closed(x);
      CHECK(abs(fd - exact) <= abs(exact) * Rational(1, 100000));
    }
  }
}

TEST_CASE("identity verifier reports a tampered bundle") {
  FunctionalBundle fb = build_bundle(kGenus2L101);
  fb.F = fb.F + Poly::constant(1);
  const IdentityReport h = verify_h_derivative_identity(fb);
  CHECK_FALSE(h.passed);
  CHECK_FALSE(h.residual.is_zero());
  CHECK_FALSE(verify_se_derivative_identity(fb).passed);
  const IdentityFailure err(h);
  CHECK(err.residual() == h.residual);
}

TEST_CASE("scaling laws") {
  CHECK(verify_scaling_laws(2, 3, 5, 7));
  CHECK(verify_scaling_laws(1, Rational(1, 2), -4, 9));
  CHECK(verify_scaling_laws(5, 10, 1, 1));
  const auto& table = scaling_law_table();
  REQUIRE(table.size() == 8);
  const int n = 2;
  std::vector<int> exps;
  for (const auto& law : table) exps.push_back(law.exponent(n));
  CHECK(exps == std::vector<int>{-1, -1, n, n + 1, 0, n + 1, -2, n + 3});
}

TEST_CASE("swap symmetry") {
  CHECK(verify_swap_symmetry(kGenus2L101));
  CHECK(verify_swap_symmetry({0, 1, 1, 1, 1}));
  CHECK(verify_swap_symmetry({7, 2, 3, 5, 4}));
  // Oracle: b^2 Q(1/b; w2, w1) = Q(b; w1, w2), and pointwise evaluation.
  const JoinParams p = kGenus2L101;
  CHECK(q_polynomial(p.swapped_weights()).reciprocal(2) == q_polynomial(p));
  const FunctionalBundle fb = build_bundle(p), sw = build_bundle(p.swapped_weights());
  for (const Rational x : {Rational(1, 7), Rational(3, 2), Rational(11)}) {
    CHECK(*sw.H(1 / x) == *fb.H(x));
    CHECK(*sw.SE(1 / x) == *fb.SE(x));
  }
}

TEST_CASE("property: F(1) = 0 whenever w1 = w2") {
  for (std::int64_t G = 0; G <= 12; ++G) {
    for (std::int64_t l2 = 1; l2 <= 30; l2 += 7) {
      CHECK(f_polynomial({G, 1, l2, 1, 1})(Rational(1)) == 0);
    }
  }
  for (const auto& p : random_tuples(50)) {
    const Rational F1 = f_polynomial(p)(Rational(1));
    const Rational formula = Rational(p.l1 * (p.w1 * p.w1 - p.w2 * p.w2) + p.l2 * (p.genus - 1) * (p.w1 - p.w2));
    CHECK(F1 == formula);
  }
}

TEST_CASE("property: g1 has no odd-multiplicity positive root and SE >= 0") {
  for (const auto& p : acceptance_tuples()) {
    const FunctionalBundle fb = build_bundle(p);
    for (const auto& r : isolate_positive_roots(fb.g1)) CHECK(r.multiplicity % 2 == 0);
    for (long k = 1; k <= 40; ++k) {
      const Rational x = Rational(k * k) / 16;
      CHECK(*fb.SE(x) >= 0);
    }
  }
}

TEST_CASE("property: g2 coefficients are positive when G <= 1") {
  for (auto p : random_tuples(50)) {
    p.genus %= 2;
    for (const auto& c : g2_polynomial(p).coefficients()) CHECK(c > 0);
  }
}

TEST_CASE("property: SE blows up at both ends") {
  for (const auto& p : acceptance_tuples()) {
    const FunctionalBundle fb = build_bundle(p);
    // Degree 15 over degree 11 with positive leading coefficients.
    CHECK(pow(fb.g1, 3).degree() - fb.SE.denominator().degree() >= 0);
    CHECK(fb.SE.numerator().degree() - fb.SE.denominator().degree() == 4);
    CHECK(fb.SE.numerator().leading() > 0);
    CHECK(fb.SE.denominator().strip_zero_roots().second == 4);
    CHECK(fb.SE.numerator().coeff(0) > 0);
  }
}

TEST_CASE("property: H construction and evaluation commute") {
  for (const auto& p : random_tuples(20)) {
    const FunctionalBundle fb = build_bundle(p);
    const Poly L = weight_linear(p);
    for (const Rational x : {Rational(1, 9), Rational(2, 3), Rational(17, 5)}) {
      const Rational q = fb.Q(x), l = L(x);
      CHECK(*fb.H(x) == q * q * q / (x * x * l * l));
    }
  }
}
