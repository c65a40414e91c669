#include "sasaki/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sasaki {

Poly::Poly(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

Poly Poly::from_ints(std::initializer_list<long> ascending) {
  std::vector<Rational> c;
  c.reserve(ascending.size());
  for (long v : ascending) c.emplace_back(v);
  return Poly(std::move(c));
}

Poly Poly::constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

Poly Poly::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(static_cast<size_t>(degree) + 1);
  v.back() = c;
  return Poly(std::move(v));
}

Poly Poly::identity() { return monomial(1, 1); }

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Poly::coeff(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[static_cast<size_t>(k)];
}

const Rational& Poly::leading() const {
  if (coeffs_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

Rational Poly::operator()(const Rational& b) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= b;
    acc += *it;
  }
  return acc;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return Poly();
  std::vector<Rational> d(coeffs_.size() - 1);
  for (size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<long>(k);
  return Poly(std::move(d));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return *this * Rational(1 / leading());
}

Poly Poly::primitive() const {
  if (is_zero()) return *this;
  Integer den_lcm = 1;
  for (const auto& c : coeffs_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  Integer num_gcd = 0;
  for (const auto& c : coeffs_) {
    Integer n = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (leading() < 0) scale = -scale;
  return *this * scale;
}

Poly Poly::reciprocal(int n) const {
  if (n < degree()) throw std::domain_error("reciprocal: n below degree");
  std::vector<Rational> r(static_cast<size_t>(n) + 1);
  for (int k = 0; k <= degree(); ++k) r[static_cast<size_t>(n - k)] = coeffs_[static_cast<size_t>(k)];
  return Poly(std::move(r));
}

std::pair<Poly, int> Poly::strip_zero_roots() const {
  if (is_zero()) return {*this, 0};
  size_t k = 0;
  while (coeffs_[k] == 0) ++k;
  return {Poly(std::vector<Rational>(coeffs_.begin() + static_cast<long>(k), coeffs_.end())),
          static_cast<int>(k)};
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Poly pow(const Poly& p, unsigned exponent) {
  Poly result = Poly::constant(1);
  Poly base = p;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1u;
    if (exponent > 0) base *= base;
  }
  return result;
}

DivMod divide(const Poly& dividend, const Poly& divisor) {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  if (dividend.degree() < divisor.degree()) return {Poly(), dividend};
  std::vector<Rational> rem(dividend.coefficients().begin(), dividend.coefficients().end());
  const int dd = divisor.degree();
  const Rational inv_lead = 1 / divisor.leading();
  std::vector<Rational> quot(static_cast<size_t>(dividend.degree() - dd) + 1);
  for (int k = dividend.degree() - dd; k >= 0; --k) {
    Rational q = rem[static_cast<size_t>(k + dd)] * inv_lead;
    quot[static_cast<size_t>(k)] = q;
    if (q == 0) continue;
    for (int j = 0; j <= dd; ++j) rem[static_cast<size_t>(k + j)] -= q * divisor.coeff(j);
  }
  rem.resize(static_cast<size_t>(dd));
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly gcd(Poly a, Poly b) {
  // Primitive remainders keep coefficient growth in check.
  a = a.primitive();
  b = b.primitive();
  while (!b.is_zero()) {
    Poly r = divide(a, b).remainder;
    a = std::move(b);
    b = r.primitive();
  }
  return a.monic();
}

SquarefreeSplit gcd_and_squarefree(const Poly& p) {
  if (p.is_zero()) throw std::domain_error("zero polynomial has no gcd decomposition");
  Poly g = gcd(p, p.derivative());
  if (g.is_zero()) g = Poly::constant(1);
  return {g, divide(p, g).quotient};
}

std::vector<Poly> squarefree_factorization(const Poly& p) {
  if (p.is_zero()) throw std::domain_error("zero polynomial has no gcd decomposition");
  std::vector<Poly> factors;
  Poly f = p.monic();
  if (f.degree() <= 0) return factors;
  Poly fp = f.derivative();
  Poly a = gcd(f, fp);
  Poly b = divide(f, a).quotient;
  Poly c = divide(fp, a).quotient;
  Poly d = c - b.derivative();
  while (b.degree() > 0) {
    Poly a_i = gcd(b, d);
    factors.push_back(a_i);
    b = divide(b, a_i).quotient;
    c = divide(d, a_i).quotient;
    d = c - b.derivative();
  }
  while (!factors.empty() && factors.back().degree() == 0) factors.pop_back();
  return factors;
}

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    Rational c = p.coeff(k);
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = mag == 1 && k > 0;
    if (!unit) os << mag.get_str() << (k > 0 ? "*" : "");
    if (k >= 1) os << "b";
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

RatFunc::RatFunc(Poly numerator, Poly denominator) {
  if (denominator.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (numerator.is_zero()) {
    num_ = Poly();
    den_ = Poly::constant(1);
    return;
  }
  Poly g = gcd(numerator, denominator);
  if (g.degree() > 0) {
    numerator = divide(numerator, g).quotient;
    denominator = divide(denominator, g).quotient;
  }
  Poly prim = denominator.primitive();
  Rational scale = prim.leading() / denominator.leading();
  num_ = numerator * scale;
  den_ = std::move(prim);
}

std::optional<Rational> RatFunc::operator()(const Rational& b) const {
  Rational d = den_(b);
  if (d == 0) return std::nullopt;
  return num_(b) / d;
}

RatFunc RatFunc::derivative() const {
  return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RatFunc RatFunc::reciprocal_argument() const {
  const int dn = std::max(num_.degree(), 0);
  const int dd = den_.degree();
  Poly n = num_.is_zero() ? Poly() : num_.reciprocal(dn);
  Poly d = den_.reciprocal(dd);
  // f(1/b) = b^(dd-dn) * n(b) / d(b)
  if (dd >= dn) return RatFunc(n * Poly::monomial(1, dd - dn), d);
  return RatFunc(n, d * Poly::monomial(1, dn - dd));
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.num_.is_zero()) throw std::domain_error("rational function division by zero");
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

}  // namespace sasaki
