#include "hdc/finite_field.hpp"

#include "hdc/error.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>
#include <string>

namespace hdc {

namespace {

constexpr std::size_t kWordBits = 64;

// Primitive polynomials, one per degree, as hex coefficient masks.
constexpr std::array<std::uint32_t, 17> kDefaultModuli = {
    0,       0,
    0x7,      // x^2 + x + 1
    0xB,      // x^3 + x + 1
    0x13,     // x^4 + x + 1
    0x25,     // x^5 + x^2 + 1
    0x43,     // x^6 + x + 1
    0x83,     // x^7 + x + 1
    0x11D,    // x^8 + x^4 + x^3 + x^2 + 1
    0x211,    // x^9 + x^4 + 1
    0x409,    // x^10 + x^3 + 1
    0x805,    // x^11 + x^2 + 1
    0x1053,   // x^12 + x^6 + x^4 + x + 1
    0x201B,   // x^13 + x^4 + x^3 + x + 1
    0x4443,   // x^14 + x^10 + x^6 + x + 1
    0x8003,   // x^15 + x + 1
    0x1100B,  // x^16 + x^12 + x^3 + x + 1
};

// Remainder of a mod b for small masks (deg < 64).
std::uint64_t mask_mod(std::uint64_t a, std::uint64_t b) {
  const int db = 63 - std::countl_zero(b);
  while (a != 0) {
    const int da = 63 - std::countl_zero(a);
    if (da < db) break;
    a ^= b << (da - db);
  }
  return a;
}

}  // namespace

BitPolynomial BitPolynomial::from_mask(std::uint64_t mask) {
  BitPolynomial p;
  if (mask != 0) p.words_.push_back(mask);
  return p;
}

BitPolynomial BitPolynomial::from_hex(std::string_view hex) {
  if (hex.starts_with("0x") || hex.starts_with("0X")) hex.remove_prefix(2);
  require(!hex.empty(), ErrorKind::InvalidParameters, "empty polynomial hex string");
  BitPolynomial p;
  std::size_t bit = 0;
  for (auto it = hex.rbegin(); it != hex.rend(); ++it, bit += 4) {
    unsigned nibble = 0;
    auto [ptr, ec] = std::from_chars(&*it, &*it + 1, nibble, 16);
    require(ec == std::errc{}, ErrorKind::InvalidParameters,
            "invalid hex digit in polynomial '" + std::string(hex) + "'");
    (void)ptr;
    for (unsigned b = 0; b < 4; ++b)
      if (nibble >> b & 1u) p.set_coeff(bit + b, true);
  }
  return p;
}

BitPolynomial BitPolynomial::monomial(std::size_t degree) {
  BitPolynomial p;
  p.set_coeff(degree, true);
  return p;
}

long BitPolynomial::degree() const {
  if (words_.empty()) return -1;
  return static_cast<long>((words_.size() - 1) * kWordBits) + 63 -
         std::countl_zero(words_.back());
}

bool BitPolynomial::coeff(std::size_t i) const {
  const std::size_t w = i / kWordBits;
  return w < words_.size() && (words_[w] >> (i % kWordBits) & 1u);
}

void BitPolynomial::set_coeff(std::size_t i, bool value) {
  const std::size_t w = i / kWordBits;
  const std::uint64_t bit = std::uint64_t{1} << (i % kWordBits);
  if (value) {
    if (w >= words_.size()) words_.resize(w + 1, 0);
    words_[w] |= bit;
  } else if (w < words_.size()) {
    words_[w] &= ~bit;
    trim();
  }
}

std::size_t BitPolynomial::weight() const {
  std::size_t total = 0;
  for (auto w : words_) total += std::popcount(w);
  return total;
}

std::uint64_t BitPolynomial::to_mask() const {
  require(words_.size() <= 1, ErrorKind::InvalidParameters,
          "polynomial does not fit a 64-bit mask");
  return words_.empty() ? 0 : words_[0];
}

std::string BitPolynomial::to_hex() const {
  if (is_zero()) return "0x0";
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  const long deg = degree();
  for (long nib = deg / 4; nib >= 0; --nib) {
    unsigned v = 0;
    for (unsigned b = 0; b < 4; ++b)
      if (coeff(static_cast<std::size_t>(nib) * 4 + b)) v |= 1u << b;
    out.push_back(kDigits[v]);
  }
  return "0x" + out;
}

void BitPolynomial::trim() {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

BitPolynomial& BitPolynomial::operator+=(const BitPolynomial& rhs) {
  if (rhs.words_.size() > words_.size()) words_.resize(rhs.words_.size(), 0);
  for (std::size_t i = 0; i < rhs.words_.size(); ++i) words_[i] ^= rhs.words_[i];
  trim();
  return *this;
}

void BitPolynomial::add_shifted(const BitPolynomial& rhs, std::size_t shift) {
  if (rhs.is_zero()) return;
  const std::size_t word_shift = shift / kWordBits;
  const unsigned bit_shift = shift % kWordBits;
  const std::size_t needed = rhs.words_.size() + word_shift + 1;
  if (words_.size() < needed) words_.resize(needed, 0);
  for (std::size_t i = 0; i < rhs.words_.size(); ++i) {
    const std::uint64_t w = rhs.words_[i];
    words_[i + word_shift] ^= w << bit_shift;
    if (bit_shift != 0) words_[i + word_shift + 1] ^= w >> (kWordBits - bit_shift);
  }
  trim();
}

BitPolynomial operator*(const BitPolynomial& lhs, const BitPolynomial& rhs) {
  const BitPolynomial& sparse = lhs.weight() <= rhs.weight() ? lhs : rhs;
  const BitPolynomial& dense = &sparse == &lhs ? rhs : lhs;
  BitPolynomial product;
  const long deg = sparse.degree();
  for (long i = 0; i <= deg; ++i)
    if (sparse.coeff(static_cast<std::size_t>(i))) product.add_shifted(dense, i);
  return product;
}

PolyDivision divrem(const BitPolynomial& a, const BitPolynomial& b) {
  require(!b.is_zero(), ErrorKind::DivisionByZeroPolynomial, "division by the zero polynomial");
  PolyDivision out{BitPolynomial{}, a};
  const long db = b.degree();
  for (long dr = out.remainder.degree(); dr >= db; dr = out.remainder.degree()) {
    const auto shift = static_cast<std::size_t>(dr - db);
    out.quotient.set_coeff(shift, true);
    out.remainder.add_shifted(b, shift);
  }
  return out;
}

std::uint64_t remainder_mask(const BitPolynomial& a, std::uint64_t modulus) {
  require(modulus != 0, ErrorKind::DivisionByZeroPolynomial, "division by the zero polynomial");
  const int dm = 63 - std::countl_zero(modulus);
  require(dm < 63, ErrorKind::OutOfRange, "modulus degree must be below 63");
  const std::uint64_t top = std::uint64_t{1} << dm;
  std::uint64_t rem = 0;
  for (long i = a.degree(); i >= 0; --i) {
    rem = (rem << 1) | (a.coeff(static_cast<std::size_t>(i)) ? 1u : 0u);
    if (rem & top) rem ^= modulus;
  }
  return rem;
}

BitPolynomial x_pow_minus_one(std::size_t n) {
  BitPolynomial p = BitPolynomial::monomial(n);
  p.set_coeff(0, true);
  return p;
}

BitPolynomial default_modulus(int m) {
  require(m >= 2 && m <= 16, ErrorKind::UnsupportedDegree,
          "field degree must lie in [2, 16], got " + std::to_string(m));
  return BitPolynomial::from_mask(kDefaultModuli[static_cast<std::size_t>(m)]);
}

bool is_irreducible(const BitPolynomial& p) {
  const long deg = p.degree();
  if (deg < 1) return false;
  if (deg > 63) fail(ErrorKind::UnsupportedDegree, "irreducibility test limited to degree < 64");
  const std::uint64_t mask = p.to_mask();
  // Trial division by every polynomial of degree 1..deg/2.
  for (long d = 1; 2 * d <= deg; ++d)
    for (std::uint64_t q = std::uint64_t{1} << d; q < (std::uint64_t{2} << d); ++q)
      if (mask_mod(mask, q) == 0) return false;
  return true;
}

FieldElement mul_by_reduction(const BitPolynomial& modulus, FieldElement a, FieldElement b) {
  const std::uint64_t mod = modulus.to_mask();
  std::uint64_t product = 0;
  for (unsigned i = 0; i < 32; ++i)
    if (b.bits >> i & 1u) product ^= std::uint64_t{a.bits} << i;
  return {static_cast<std::uint32_t>(mask_mod(product, mod))};
}

FieldContext FieldContext::create(int m) { return create(m, default_modulus(m)); }

FieldContext FieldContext::create(int m, const BitPolynomial& modulus) {
  require(m >= 2 && m <= 16, ErrorKind::UnsupportedDegree,
          "field degree must lie in [2, 16], got " + std::to_string(m));
  require(modulus.degree() == m, ErrorKind::UnsupportedDegree,
          "modulus " + modulus.to_hex() + " does not have degree " + std::to_string(m));
  require(is_irreducible(modulus), ErrorKind::NonIrreducibleModulus,
          "modulus " + modulus.to_hex() + " is reducible over GF(2)");
  return FieldContext(m, modulus);
}

FieldContext::FieldContext(int m, BitPolynomial modulus)
    : m_(m), modulus_(std::move(modulus)) {
  const std::uint32_t order = group_order();
  antilog_.assign(order, 0);
  log_.assign(size(), 0);
  const std::uint32_t mod = static_cast<std::uint32_t>(modulus_.to_mask());
  std::uint32_t x = 1;
  for (std::uint32_t i = 0; i < order; ++i) {
    if (i > 0 && x == 1)
      fail(ErrorKind::NonPrimitiveModulus, "modulus " + modulus_.to_hex() + " is not primitive: ord(alpha) = " +
                                               std::to_string(i));
    antilog_[i] = x;
    log_[x] = i;
    x <<= 1;
    if (x & size()) x ^= mod;
  }
  require(x == 1, ErrorKind::NonPrimitiveModulus, "alpha^(2^m-1) != 1");
}

FieldElement FieldContext::mul(FieldElement a, FieldElement b) const {
  if (a.bits == 0 || b.bits == 0) return zero();
  const std::uint32_t e = (log_[a.bits] + log_[b.bits]) % group_order();
  return {antilog_[e]};
}

FieldElement FieldContext::inv(FieldElement a) const {
  require(a.bits != 0, ErrorKind::InvalidParameters, "zero has no inverse");
  return {antilog_[(group_order() - log_[a.bits]) % group_order()]};
}

FieldElement FieldContext::pow(FieldElement a, std::uint64_t e) const {
  if (e == 0) return one();
  if (a.bits == 0) return zero();
  const std::uint64_t l = (std::uint64_t{log_[a.bits]} * (e % group_order())) % group_order();
  return {antilog_[l]};
}

FieldElement FieldContext::alpha_pow(std::int64_t e) const {
  const std::int64_t order = group_order();
  return {antilog_[static_cast<std::size_t>(((e % order) + order) % order)]};
}

std::uint32_t FieldContext::log(FieldElement a) const {
  require(a.bits != 0 && contains(a), ErrorKind::InvalidParameters, "log of zero or foreign element");
  return log_[a.bits];
}

std::vector<std::uint32_t> cyclotomic_coset(std::uint32_t exponent, int m) {
  const std::uint32_t order = (1u << m) - 1;
  std::vector<std::uint32_t> members;
  std::uint32_t e = exponent % order;
  do {
    members.push_back(e);
    e = static_cast<std::uint32_t>((std::uint64_t{e} * 2) % order);
  } while (e != members.front());
  return members;
}

BitPolynomial minimal_polynomial(const FieldContext& field, std::uint32_t exponent) {
  require(exponent < field.group_order(), ErrorKind::InvalidParameters,
          "exponent must lie in [0, 2^m - 1)");
  // coeffs[i] = coefficient of x^i, starting from the constant polynomial 1.
  std::vector<FieldElement> coeffs{field.one()};
  for (std::uint32_t e : cyclotomic_coset(exponent, field.m())) {
    const FieldElement root = field.alpha_pow(e);
    std::vector<FieldElement> next(coeffs.size() + 1, field.zero());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      next[i + 1] = field.add(next[i + 1], coeffs[i]);
      next[i] = field.add(next[i], field.mul(coeffs[i], root));
    }
    coeffs = std::move(next);
  }
  BitPolynomial out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    require(coeffs[i].bits <= 1, ErrorKind::CoefficientNotInBaseField,
            "minimal polynomial coefficient outside GF(2) for exponent " + std::to_string(exponent));
    out.set_coeff(i, coeffs[i].bits == 1);
  }
  return out;
}

FieldElement evaluate(const FieldContext& field, const BitPolynomial& p, FieldElement x) {
  FieldElement acc = field.zero();
  for (long i = p.degree(); i >= 0; --i) {
    acc = field.mul(acc, x);
    if (p.coeff(static_cast<std::size_t>(i))) acc = field.add(acc, field.one());
  }
  return acc;
}

}  // namespace hdc
