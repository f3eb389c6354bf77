#include "hdc/cyclic_code.hpp"

#include "hdc/error.hpp"

#include <cmath>
#include <string>

namespace hdc {

namespace {

void check_parameters(int m, int c) {
  require(m >= 4 && m % 2 == 0 && m <= 16, ErrorKind::InvalidParameters,
          "m must be even with 4 <= m <= 16, got " + std::to_string(m));
  require(c >= 1 && c <= m / 2 - 1, ErrorKind::InvalidParameters,
          "c must satisfy 1 <= c <= m/2 - 1, got c=" + std::to_string(c) + " for m=" + std::to_string(m));
}

}  // namespace

std::uint32_t guaranteed_distance(int m, int c) {
  return (1u << (m - 1)) - (1u << (m / 2 + c - 1));
}

CyclotomicCoset coset_exponents(int m, int i) {
  require(m >= 4 && m % 2 == 0 && m <= 16, ErrorKind::InvalidParameters,
          "m must be even with 4 <= m <= 16");
  require(i >= 1 && i <= m / 2 - 1, ErrorKind::InvalidParameters, "coset index out of range");
  const std::uint32_t order = (1u << m) - 1;
  CyclotomicCoset coset;
  coset.representative = 1u + (1u << (m / 2 + i));
  for (int j = 0; j < m; ++j) {
    const std::uint32_t low = 1u << j;
    const std::uint32_t high = 1u << ((m / 2 + i + j) % m);
    coset.members.insert((low + high) % order);
  }
  require(coset.members.size() == static_cast<std::size_t>(m), ErrorKind::CosetCollision,
          "coset P_" + std::to_string(i) + " has size " + std::to_string(coset.members.size()));
  return coset;
}

ConstructionSpec build_code(int m, int c) {
  check_parameters(m, c);
  FieldContext field = FieldContext::create(m);
  const std::uint32_t n = field.group_order();

  std::vector<CyclotomicCoset> cosets;
  BitPolynomial check = BitPolynomial::one();
  for (int i = 1; i <= c; ++i) {
    CyclotomicCoset coset = coset_exponents(m, i);
    for (const auto& prior : cosets)
      for (auto e : coset.members)
        require(!prior.members.contains(e), ErrorKind::CosetCollision,
                "cosets P_" + std::to_string(i) + " and an earlier coset share exponent " + std::to_string(e));
    const BitPolynomial minimal = minimal_polynomial(field, coset.representative);
    require(minimal.degree() == m, ErrorKind::CosetCollision, "minimal polynomial degree differs from m");
    check = check * minimal;
    cosets.push_back(std::move(coset));
  }

  auto [generator, remainder] = divrem(x_pow_minus_one(n), check);
  require(remainder.is_zero(), ErrorKind::InexactDivision, "check polynomial does not divide x^n - 1");
  require(generator.degree() == static_cast<long>(n) - c * m, ErrorKind::InexactDivision,
          "generator degree differs from n - cm");

  ConstructionSpec spec{m, c, n, static_cast<std::uint32_t>(c * m), std::move(generator), std::move(check),
                        0, std::move(cosets), std::move(field)};
  spec.designed_distance = bch_certificate(spec).designed_distance;
  return spec;
}

BchCertificate bch_certificate(const ConstructionSpec& spec) {
  const FieldContext& field = spec.field;
  const std::uint32_t n = spec.n;
  const std::uint32_t t = (1u << (spec.m - 1)) + (1u << (spec.m / 2 + spec.c - 1)) + 1;

  // root[j] <=> g(alpha^j) == 0. Evaluate through r = g mod M_{alpha^j}, since
  // g(beta) = r(beta) whenever M_beta(beta) = 0.
  std::vector<char> root(n, 0);
  std::vector<char> seen(n, 0);
  for (std::uint32_t e = 0; e < n; ++e) {
    if (seen[e]) continue;
    const BitPolynomial reduced =
        BitPolynomial::from_mask(remainder_mask(spec.generator, minimal_polynomial(field, e).to_mask()));
    for (std::uint32_t member : cyclotomic_coset(e, spec.m)) {
      seen[member] = 1;
      root[member] = evaluate(field, reduced, field.alpha_pow(member)) == field.zero();
    }
  }

  for (const auto& coset : spec.cosets)
    for (auto e : coset.members) {
      require(e < t, ErrorKind::CertificateFailure,
              "coset exponent " + std::to_string(e) + " falls inside the root window");
      require(!root[e], ErrorKind::CertificateFailure,
              "alpha^" + std::to_string(e) + " is a root of g but belongs to a removed coset");
    }
  for (std::uint32_t j = t; j <= n; ++j)
    require(root[j % n], ErrorKind::CertificateFailure,
            "alpha^" + std::to_string(j) + " is not a root of g");

  BchCertificate cert;
  cert.window_start = t;
  cert.designed_distance = (1u << spec.m) - t + 1;

  // Longest cyclic run of roots.
  std::uint32_t best = 0, best_start = 0;
  for (std::uint32_t start = 0; start < n; ++start) {
    if (!root[start] || root[(start + n - 1) % n]) continue;
    std::uint32_t len = 0;
    while (len < n && root[(start + len) % n]) ++len;
    if (len > best) {
      best = len;
      best_start = start;
    }
  }
  cert.best_bound = best + 1;
  cert.best_run_start = best_start;
  require(cert.best_bound >= cert.designed_distance, ErrorKind::CertificateFailure,
          "longest root run shorter than the certified window");
  return cert;
}

Codeword::Codeword(std::size_t n, BitPolynomial poly)
    : n_(n), poly_(std::move(poly)), weight_(poly_.weight()) {
  require(poly_.degree() < static_cast<long>(n_), ErrorKind::LengthMismatch,
          "codeword polynomial degree exceeds length");
}

Codeword encode(const ConstructionSpec& spec, const std::vector<bool>& message) {
  require(message.size() == spec.k, ErrorKind::LengthMismatch,
          "message length " + std::to_string(message.size()) + " != k = " + std::to_string(spec.k));
  BitPolynomial u;
  for (std::size_t i = 0; i < message.size(); ++i)
    if (message[i]) u.set_coeff(i, true);
  return Codeword(spec.n, u * spec.generator);
}

Codeword cyclic_shift(const Codeword& word) {
  const std::size_t n = word.length();
  BitPolynomial shifted;
  for (std::size_t i = 0; i < n; ++i)
    if (word.bit(i)) shifted.set_coeff((i + 1) % n, true);
  return Codeword(n, std::move(shifted));
}

bool is_codeword(const ConstructionSpec& spec, const Codeword& word) {
  return word.length() == spec.n && divrem(word.polynomial(), spec.generator).remainder.is_zero();
}

std::vector<std::uint32_t> codeword_masks(const ConstructionSpec& spec) {
  require(spec.n <= 32 && spec.k <= 20, ErrorKind::BudgetExceeded, "codeword listing needs n <= 32 and k <= 20");
  std::vector<std::uint32_t> out;
  out.reserve(std::size_t{1} << spec.k);
  std::vector<bool> message(spec.k);
  for (std::uint32_t u = 0; u < (1u << spec.k); ++u) {
    for (std::uint32_t i = 0; i < spec.k; ++i) message[i] = (u >> i) & 1u;
    out.push_back(static_cast<std::uint32_t>(encode(spec, message).polynomial().to_mask()));
  }
  return out;
}

}  // namespace hdc
