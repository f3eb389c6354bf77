#pragma once

// GF(2)[x] polynomials and GF(2^m) arithmetic, 2 <= m <= 16.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hdc {

/// Polynomial over GF(2). Bit i of the packed words is the coefficient of x^i;
/// trailing zero words are always trimmed so equal polynomials compare equal.
class BitPolynomial {
 public:
  BitPolynomial() = default;

  static BitPolynomial from_mask(std::uint64_t mask);
  /// Parses the hex coefficient mask, e.g. "0x13" = x^4 + x + 1.
  static BitPolynomial from_hex(std::string_view hex);
  static BitPolynomial monomial(std::size_t degree);
  static BitPolynomial one() { return from_mask(1); }

  /// Degree, or -1 for the zero polynomial.
  long degree() const;
  bool is_zero() const { return words_.empty(); }
  bool coeff(std::size_t i) const;
  void set_coeff(std::size_t i, bool value);
  std::size_t weight() const;

  std::uint64_t to_mask() const;  // requires degree < 64
  std::string to_hex() const;
  std::span<const std::uint64_t> words() const { return words_; }

  BitPolynomial& operator+=(const BitPolynomial& rhs);
  /// Adds rhs * x^shift in place.
  void add_shifted(const BitPolynomial& rhs, std::size_t shift);

  friend BitPolynomial operator+(BitPolynomial lhs, const BitPolynomial& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend BitPolynomial operator*(const BitPolynomial& lhs, const BitPolynomial& rhs);
  friend bool operator==(const BitPolynomial&, const BitPolynomial&) = default;

 private:
  void trim();

  std::vector<std::uint64_t> words_;
};

struct PolyDivision {
  BitPolynomial quotient;
  BitPolynomial remainder;
};

/// Long division over GF(2): a = q*b + r with deg r < deg b.
PolyDivision divrem(const BitPolynomial& a, const BitPolynomial& b);

/// a mod m for a modulus of degree < 63, returned as a coefficient mask.
std::uint64_t remainder_mask(const BitPolynomial& a, std::uint64_t modulus);

/// x^n - 1 (= x^n + 1 over GF(2)).
BitPolynomial x_pow_minus_one(std::size_t n);

struct FieldElement {
  std::uint32_t bits = 0;  // polynomial basis, bit 0 = constant term
  friend bool operator==(FieldElement, FieldElement) = default;
};

/// Built-in primitive modulus for GF(2^m), m in [2, 16].
BitPolynomial default_modulus(int m);

/// GF(2^m) with alpha = x mod modulus. Immutable after construction; the
/// modulus is checked to be irreducible and primitive.
class FieldContext {
 public:
  static FieldContext create(int m);
  static FieldContext create(int m, const BitPolynomial& modulus);

  int m() const { return m_; }
  std::uint32_t size() const { return 1u << m_; }
  /// Order of the multiplicative group, 2^m - 1.
  std::uint32_t group_order() const { return size() - 1; }
  const BitPolynomial& modulus() const { return modulus_; }

  FieldElement zero() const { return {0}; }
  FieldElement one() const { return {1}; }
  FieldElement alpha() const { return {2}; }
  bool contains(FieldElement a) const { return a.bits < size(); }

  FieldElement add(FieldElement a, FieldElement b) const { return {a.bits ^ b.bits}; }
  FieldElement mul(FieldElement a, FieldElement b) const;
  FieldElement inv(FieldElement a) const;
  FieldElement pow(FieldElement a, std::uint64_t e) const;
  /// alpha^e for any integer e (negative exponents allowed).
  FieldElement alpha_pow(std::int64_t e) const;
  /// Discrete log base alpha of a nonzero element.
  std::uint32_t log(FieldElement a) const;

 private:
  FieldContext(int m, BitPolynomial modulus);

  int m_ = 0;
  BitPolynomial modulus_;
  std::vector<std::uint32_t> antilog_;  // antilog_[i] = alpha^i, i < 2^m - 1
  std::vector<std::uint32_t> log_;      // log_[a] for a != 0
};

/// Schoolbook product reduced mod the modulus; does not touch the log tables.
FieldElement mul_by_reduction(const BitPolynomial& modulus, FieldElement a, FieldElement b);

bool is_irreducible(const BitPolynomial& p);

/// {e * 2^j mod (2^m - 1)} in order of generation, starting with e.
std::vector<std::uint32_t> cyclotomic_coset(std::uint32_t exponent, int m);

/// Minimal polynomial of alpha^exponent over GF(2), expanded from its conjugates.
BitPolynomial minimal_polynomial(const FieldContext& field, std::uint32_t exponent);

/// Evaluates a binary polynomial at a field element (Horner).
FieldElement evaluate(const FieldContext& field, const BitPolynomial& p, FieldElement x);

}  // namespace hdc
