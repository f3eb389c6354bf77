#pragma once

// BCH-like cyclic codes of length 2^m - 1 with designed distance
// 2^(m-1) - 2^(m/2+c-1) and dimension c*m.

#include "hdc/finite_field.hpp"

#include <cstdint>
#include <set>
#include <vector>

namespace hdc {

struct CyclotomicCoset {
  std::uint32_t representative = 0;
  std::set<std::uint32_t> members;
};

/// P_i = {2^j + 2^(m/2+i+j) mod 2^m-1 : j < m}; m even >= 4, 1 <= i <= m/2-1.
CyclotomicCoset coset_exponents(int m, int i);

struct ConstructionSpec {
  int m = 0;
  int c = 0;
  std::uint32_t n = 0;
  std::uint32_t k = 0;
  BitPolynomial generator;
  /// Product of the c minimal polynomials; generator * check = x^n - 1.
  BitPolynomial check;
  std::uint32_t designed_distance = 0;
  std::vector<CyclotomicCoset> cosets;
  FieldContext field;
};

/// Builds the code with g(x) = (x^n - 1) / prod_i M_{alpha^{p_i}}(x).
ConstructionSpec build_code(int m, int c);

/// Distance guaranteed by the construction, 2^(m-1) - 2^(m/2+c-1).
std::uint32_t guaranteed_distance(int m, int c);

struct BchCertificate {
  /// t = 2^(m-1) + 2^(m/2+c-1) + 1; every alpha^j with t <= j <= 2^m-1 is a root of g.
  std::uint32_t window_start = 0;
  /// 2^m - t + 1, certified by the root window.
  std::uint32_t designed_distance = 0;
  /// Longest cyclic run of consecutive root exponents + 1 (>= designed_distance).
  std::uint32_t best_bound = 0;
  std::uint32_t best_run_start = 0;
};

/// Evaluates g(alpha^j) for every exponent and certifies the BCH bound.
BchCertificate bch_certificate(const ConstructionSpec& spec);

/// Length-n binary word with its weight cached.
class Codeword {
 public:
  explicit Codeword(std::size_t n, BitPolynomial poly = {});

  std::size_t length() const { return n_; }
  std::size_t weight() const { return weight_; }
  bool bit(std::size_t i) const { return poly_.coeff(i); }
  const BitPolynomial& polynomial() const { return poly_; }

  friend bool operator==(const Codeword&, const Codeword&) = default;

 private:
  std::size_t n_;
  BitPolynomial poly_;
  std::size_t weight_;
};

/// Non-systematic encoder: c(x) = u(x) g(x). message.size() must equal k.
Codeword encode(const ConstructionSpec& spec, const std::vector<bool>& message);

/// Cyclic shift by one position (multiplication by x mod x^n - 1).
Codeword cyclic_shift(const Codeword& word);

bool is_codeword(const ConstructionSpec& spec, const Codeword& word);

/// Every codeword as an n-bit mask (bit i = coefficient of x^i), in message
/// order. Needs n <= 32 and k <= 20.
std::vector<std::uint32_t> codeword_masks(const ConstructionSpec& spec);

}  // namespace hdc
