#pragma once

// Exact scalar types shared by the spectral, bound and Fourier code.

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <cstdint>
#include <string>

namespace hdc {

using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

BigInt binomial(std::int64_t n, std::int64_t k);
BigInt pow2(unsigned e);

/// floor(q) for a rational q.
BigInt floor(const Rational& q);
/// ceil(q) for a rational q.
BigInt ceil(const Rational& q);

/// log2 of a positive integer, accurate to ~1e-15 relative regardless of size.
double log2(const BigInt& v);
/// log2 of a positive rational.
double log2(const Rational& v);

double to_double(const Rational& q);

std::string to_string(const BigInt& v);

/// Fixed 12-significant-digit rendering used by every textual output.
std::string format_real(double x, int significant = 12);

/// Rounds x to a rational with `digits` significant decimal digits.
Rational round_to_rational(double x, int digits);

}  // namespace hdc
