#pragma once

#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sasaki/rational.hpp"

namespace sasaki {

/// Dense univariate polynomial in b with exact rational coefficients,
/// stored lowest degree first. The coefficient vector never carries
/// trailing zeros, so the zero polynomial has an empty vector and degree -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> ascending);
  /// Convenience for integer literals, lowest degree first.
  static Poly from_ints(std::initializer_list<long> ascending);
  static Poly constant(const Rational& c);
  static Poly monomial(const Rational& c, int degree);
  /// The indeterminate b.
  static Poly identity();

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }

  std::span<const Rational> coefficients() const { return coeffs_; }
  /// Coefficient of b^k; zero past the degree.
  Rational coeff(int k) const;
  const Rational& leading() const;

  Rational operator()(const Rational& b) const;
  int sign_at(const Rational& b) const { return sgn((*this)(b)); }

  Poly derivative() const;
  /// Scaled to leading coefficient 1. Zero stays zero.
  Poly monic() const;
  /// Scaled to coprime integer coefficients with positive leading coefficient.
  Poly primitive() const;
  /// b^n p(1/b); requires n >= degree().
  Poly reciprocal(int n) const;
  /// Divides out the largest power of b; returns the quotient and the power.
  std::pair<Poly, int> strip_zero_roots() const;

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend Poly operator-(Poly a) { return a *= Rational(-1); }
  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

Poly pow(const Poly& p, unsigned exponent);

struct DivMod {
  Poly quotient;
  Poly remainder;
};

/// Euclidean division; throws std::domain_error on a zero divisor.
DivMod divide(const Poly& dividend, const Poly& divisor);

/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(Poly a, Poly b);

struct SquarefreeSplit {
  Poly gcd_with_derivative;  // monic gcd(p, p')
  Poly squarefree_part;      // p / gcd(p, p'), same distinct roots as p
};

/// Throws std::domain_error("zero polynomial has no gcd decomposition").
SquarefreeSplit gcd_and_squarefree(const Poly& p);

/// Yun's square-free factorization: result[i] is the (monic, possibly
/// constant) product of the irreducible factors of multiplicity i + 1.
std::vector<Poly> squarefree_factorization(const Poly& p);

/// Human-readable form such as "9*b^3 + 315*b^2 - 214*b - 4".
std::string to_string(const Poly& p);

/// Quotient of two polynomials kept in canonical form: no common
/// non-constant factor, and a denominator that is a primitive integer
/// polynomial with positive leading coefficient. The representation is
/// therefore unique.
class RatFunc {
 public:
  RatFunc() : RatFunc(Poly(), Poly::constant(1)) {}
  /// Throws std::domain_error if the denominator is zero.
  RatFunc(Poly numerator, Poly denominator);
  explicit RatFunc(Poly p) : RatFunc(std::move(p), Poly::constant(1)) {}

  const Poly& numerator() const { return num_; }
  const Poly& denominator() const { return den_; }

  /// Value at b, or nullopt at a pole.
  std::optional<Rational> operator()(const Rational& b) const;

  /// Quotient rule followed by gcd reduction.
  RatFunc derivative() const;
  /// f(1/b) as a canonical rational function of b.
  RatFunc reciprocal_argument() const;

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  Poly num_;
  Poly den_;
};

inline RatFunc ratfunc_derivative(const RatFunc& f) { return f.derivative(); }

}  // namespace sasaki
