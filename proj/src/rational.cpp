#include "sasaki/rational.hpp"

#include <cctype>
#include <cstdlib>
#include <stdexcept>

namespace sasaki {

std::string to_exact_string(const Rational& x) {
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw std::invalid_argument("malformed integer '" + std::string(s) + "'");
  Integer v(std::string(s), 10);
  return negative ? Integer(-v) : v;
}

}  // namespace

Rational pow10(long k) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(k < 0 ? -k : k));
  if (k >= 0) return Rational(p);
  Rational r(Integer(1), p);
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty rational literal");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(text.substr(0, slash));
    Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    Rational r(num, den);
    r.canonicalize();
    return r;
  }

  std::string_view mantissa = text;
  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = text.substr(0, e);
    std::string_view exp_text = text.substr(e + 1);
    Integer ev = parse_integer(exp_text);
    if (!ev.fits_slong_p() || abs(ev) > 100000) {
      throw std::invalid_argument("exponent out of range in '" + std::string(text) + "'");
    }
    exponent = ev.get_si();
  }

  bool negative = false;
  if (!mantissa.empty() && (mantissa.front() == '-' || mantissa.front() == '+')) {
    negative = mantissa.front() == '-';
    mantissa.remove_prefix(1);
  }
  std::string digits;
  long fraction_digits = 0;
  if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
    std::string_view whole = mantissa.substr(0, dot);
    std::string_view frac = mantissa.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac))) {
      throw std::invalid_argument("malformed decimal '" + std::string(text) + "'");
    }
    digits = std::string(whole) + std::string(frac);
    fraction_digits = static_cast<long>(frac.size());
  } else {
    if (!all_digits(mantissa)) throw std::invalid_argument("malformed number '" + std::string(text) + "'");
    digits = std::string(mantissa);
  }
  Rational r(Integer(digits, 10));
  r *= pow10(exponent - fraction_digits);
  if (negative) r = -r;
  return r;
}

int sign(const Rational& x) { return sgn(x); }

std::string to_decimal(const Rational& x, int significant) {
  if (significant < 1) significant = 1;
  if (x == 0) return "0";
  Rational ax = abs(x);

  // Decimal exponent e with 10^e <= ax < 10^(e+1).
  long e = static_cast<long>(mpz_sizeinbase(ax.get_num().get_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(ax.get_den().get_mpz_t(), 10));
  while (ax < pow10(e)) --e;
  while (ax >= pow10(e + 1)) ++e;

  // Round ax * 10^(significant-1-e) half away from zero.
  Rational scaled = ax * pow10(significant - 1 - e);
  Integer q = scaled.get_num() / scaled.get_den();
  Rational frac = scaled - Rational(q);
  if (frac * 2 >= 1) q += 1;
  Integer limit;
  mpz_ui_pow_ui(limit.get_mpz_t(), 10, static_cast<unsigned long>(significant));
  if (q >= limit) {
    q /= 10;
    ++e;
  }
  std::string d = q.get_str();
  while (static_cast<int>(d.size()) < significant) d.insert(d.begin(), '0');

  std::string out;
  if (e < -5 || e >= significant + 3) {
    std::string mant = d.substr(0, 1);
    std::string rest = d.substr(1);
    while (!rest.empty() && rest.back() == '0') rest.pop_back();
    if (!rest.empty()) mant += "." + rest;
    std::string es = std::to_string(e < 0 ? -e : e);
    if (es.size() < 2) es.insert(es.begin(), '0');
    out = mant + (e < 0 ? "e-" : "e+") + es;
  } else if (e < 0) {
    std::string frac_digits = std::string(static_cast<size_t>(-e - 1), '0') + d;
    while (!frac_digits.empty() && frac_digits.back() == '0') frac_digits.pop_back();
    out = "0." + frac_digits;
  } else {
    auto int_len = static_cast<size_t>(e + 1);
    if (d.size() <= int_len) {
      out = d + std::string(int_len - d.size(), '0');
    } else {
      std::string frac_digits = d.substr(int_len);
      while (!frac_digits.empty() && frac_digits.back() == '0') frac_digits.pop_back();
      out = d.substr(0, int_len);
      if (!frac_digits.empty()) out += "." + frac_digits;
    }
  }
  return x < 0 ? "-" + out : out;
}

}  // namespace sasaki
