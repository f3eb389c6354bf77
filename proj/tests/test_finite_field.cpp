#include "hdc/error.hpp"
#include "hdc/finite_field.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace hdc;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an hdc::Error");
  return ErrorKind::InvalidParameters;
}

BitPolynomial random_poly(std::mt19937_64& rng, int max_degree) {
  BitPolynomial p;
  for (int i = 0; i <= max_degree; ++i)
    if (rng() & 1) p.set_coeff(i, true);
  return p;
}

}  // namespace

TEST_CASE("hex round trip and degree") {
  const auto p = BitPolynomial::from_hex("0x13");
  CHECK(p.degree() == 4);
  CHECK(p.weight() == 3);
  CHECK(p.to_hex() == "0x13");
  CHECK(BitPolynomial().degree() == -1);
  CHECK(BitPolynomial::monomial(70).degree() == 70);
  CHECK(BitPolynomial::from_hex(BitPolynomial::monomial(70).to_hex()) == BitPolynomial::monomial(70));
}

TEST_CASE("divrem reconstructs the dividend") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_poly(rng, 150);
    auto b = random_poly(rng, 40);
    if (b.is_zero()) b = BitPolynomial::one();
    const auto [q, r] = divrem(a, b);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());
    CHECK(remainder_mask(a, b.to_mask()) == r.to_mask());
  }
  CHECK(kind_of([] { divrem(BitPolynomial::one(), BitPolynomial()); }) == ErrorKind::DivisionByZeroPolynomial);
}

TEST_CASE("GF(16) with x^4 + x + 1") {
  const auto f = FieldContext::create(4);
  CHECK(f.modulus() == BitPolynomial::from_hex("0x13"));
  CHECK(f.alpha_pow(4).bits == 0b0011);
  CHECK(f.alpha_pow(15) == f.one());
  CHECK(f.alpha_pow(-1) == f.inv(f.alpha()));
  std::set<std::uint32_t> seen;
  for (int i = 0; i < 15; ++i) seen.insert(f.alpha_pow(i).bits);
  CHECK(seen.size() == 15);
}

TEST_CASE("table arithmetic agrees with schoolbook reduction") {
  for (int m = 2; m <= 8; ++m) {
    const auto f = FieldContext::create(m);
    for (std::uint32_t a = 0; a < f.size(); ++a) {
      for (std::uint32_t b = 0; b < f.size(); ++b)
        REQUIRE(f.mul({a}, {b}) == mul_by_reduction(f.modulus(), {a}, {b}));
      if (a != 0) {
        CHECK(f.mul({a}, f.inv({a})) == f.one());
        CHECK(f.alpha_pow(f.log({a})) == FieldElement{a});
      }
    }
  }
  const auto big = FieldContext::create(16);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 2000; ++i) {
    const FieldElement a{static_cast<std::uint32_t>(rng() & 0xFFFF)}, b{static_cast<std::uint32_t>(rng() & 0xFFFF)};
    CHECK(big.mul(a, b) == mul_by_reduction(big.modulus(), a, b));
  }
}

TEST_CASE("every built-in modulus is irreducible") {
  for (int m = 2; m <= 16; ++m) {
    CHECK(is_irreducible(default_modulus(m)));
    CHECK(default_modulus(m).degree() == m);
  }
}

TEST_CASE("modulus validation") {
  CHECK(kind_of([] { FieldContext::create(1); }) == ErrorKind::UnsupportedDegree);
  CHECK(kind_of([] { FieldContext::create(17); }) == ErrorKind::UnsupportedDegree);
  // (x^2 + x + 1)^2
  CHECK(kind_of([] { FieldContext::create(4, BitPolynomial::from_hex("0x15")); }) ==
        ErrorKind::NonIrreducibleModulus);
  // x^4 + x^3 + x^2 + x + 1 is irreducible but x has order 5.
  CHECK(kind_of([] { FieldContext::create(4, BitPolynomial::from_hex("0x1f")); }) ==
        ErrorKind::NonPrimitiveModulus);
  CHECK_NOTHROW(FieldContext::create(4, BitPolynomial::from_hex("0x19")));
}

TEST_CASE("cyclotomic cosets mod 15") {
  CHECK(cyclotomic_coset(1, 4) == std::vector<std::uint32_t>{1, 2, 4, 8});
  CHECK(cyclotomic_coset(5, 4) == std::vector<std::uint32_t>{5, 10});
  CHECK(cyclotomic_coset(0, 4) == std::vector<std::uint32_t>{0});
}

TEST_CASE("minimal polynomials in GF(16)") {
  const auto f = FieldContext::create(4);
  CHECK(minimal_polynomial(f, 1).to_hex() == "0x13");
  CHECK(minimal_polynomial(f, 3).to_hex() == "0x1f");
  CHECK(minimal_polynomial(f, 5).to_hex() == "0x7");
  CHECK(minimal_polynomial(f, 7).to_hex() == "0x19");
  CHECK(minimal_polynomial(f, 0).to_hex() == "0x3");
}

TEST_CASE("minimal polynomials vanish on their conjugates and factor x^n - 1") {
  for (int m : {4, 6, 8}) {
    const auto f = FieldContext::create(m);
    BitPolynomial product = BitPolynomial::one();
    std::set<std::uint32_t> covered;
    for (std::uint32_t e = 0; e < f.group_order(); ++e) {
      if (covered.count(e)) continue;
      const auto coset = cyclotomic_coset(e, m);
      covered.insert(coset.begin(), coset.end());
      const auto mp = minimal_polynomial(f, e);
      CHECK(mp.degree() == static_cast<long>(coset.size()));
      CHECK(is_irreducible(mp));
      for (auto c : coset) CHECK(evaluate(f, mp, f.alpha_pow(c)) == f.zero());
      product = product * mp;
    }
    CHECK(product == x_pow_minus_one(f.group_order()));
  }
}
