#include "hdc/numeric.hpp"

#include "hdc/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

namespace hdc {

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return BigInt(0);
  k = std::min(k, n - k);
  BigInt c = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    c *= (n - i);
    c /= (i + 1);
  }
  return c;
}

BigInt pow2(unsigned e) {
  BigInt v = 1;
  v <<= e;
  return v;
}

BigInt floor(const Rational& q) {
  BigInt num = numerator(q);
  const BigInt den = denominator(q);
  BigInt quot = num / den;  // truncates toward zero
  if (num < 0 && quot * den != num) quot -= 1;
  return quot;
}

BigInt ceil(const Rational& q) { return -floor(-q); }

double log2(const BigInt& v) {
  require(v > 0, ErrorKind::OutOfRange, "log2 of a non-positive integer");
  const unsigned msb = boost::multiprecision::msb(v);
  if (msb < 60) return std::log2(v.convert_to<double>());
  const unsigned shift = msb - 60;
  const BigInt top = v >> shift;
  return std::log2(top.convert_to<double>()) + shift;
}

double log2(const Rational& v) {
  require(v > 0, ErrorKind::OutOfRange, "log2 of a non-positive rational");
  return log2(numerator(v)) - log2(denominator(v));
}

double to_double(const Rational& q) {
  const BigInt num = numerator(q);
  const BigInt den = denominator(q);
  if (num == 0) return 0.0;
  const double sign = num < 0 ? -1.0 : 1.0;
  return sign * std::exp2(log2(BigInt(abs(num))) - log2(den));
}

std::string to_string(const BigInt& v) { return v.str(); }

std::string format_real(double x, int significant) {
  if (x == 0.0) x = 0.0;  // drop the sign of negative zero
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", significant, x);
  return buf;
}

Rational round_to_rational(double x, int digits) {
  require(std::isfinite(x), ErrorKind::OutOfRange, "cannot round a non-finite value");
  if (x == 0.0) return Rational(0);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*e", digits - 1, x);
  // buf = [-]d.ddddde[+-]xx
  std::string s(buf);
  const auto epos = s.find('e');
  const int exponent = std::stoi(s.substr(epos + 1));
  std::string mantissa = s.substr(0, epos);
  std::erase(mantissa, '.');
  BigInt m(mantissa);
  const int scale = exponent - (digits - 1);
  Rational q(m);
  if (scale >= 0) {
    BigInt p = 1;
    for (int i = 0; i < scale; ++i) p *= 10;
    q *= Rational(p);
  } else {
    BigInt p = 1;
    for (int i = 0; i < -scale; ++i) p *= 10;
    q /= Rational(p);
  }
  return q;
}

}  // namespace hdc
