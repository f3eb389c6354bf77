#include "hdc/cube_fourier.hpp"
#include "hdc/cyclic_code.hpp"
#include "hdc/distance.hpp"

#include <doctest.h>

#include <bit>

using namespace hdc;

namespace {

using Fn = BooleanFunction<Rational>;

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an hdc::Error");
  return ErrorKind::InvalidParameters;
}

int sign(std::uint32_t x, std::uint32_t z) { return std::popcount(x & z) % 2 == 0 ? 1 : -1; }

// Definitions evaluated term by term, O(4^n).
Fn direct_transform(const Fn& f) {
  Fn out(f.dimension());
  for (std::uint32_t z = 0; z < f.size(); ++z) {
    Rational s(0);
    for (std::uint32_t x = 0; x < f.size(); ++x) s += f[x] * sign(x, z);
    out[z] = s / Rational(static_cast<std::int64_t>(f.size()));
  }
  return out;
}

Fn direct_convolution(const Fn& f, const Fn& g) {
  Fn out(f.dimension());
  for (std::uint32_t x = 0; x < f.size(); ++x) {
    Rational s(0);
    for (std::uint32_t y = 0; y < f.size(); ++y) s += f[y] * g[x ^ y];
    out[x] = s / Rational(static_cast<std::int64_t>(f.size()));
  }
  return out;
}

}  // namespace

TEST_CASE("fast transform matches the definition") {
  std::mt19937_64 rng(5);
  for (int n = 0; n <= 6; ++n) {
    const Fn f = random_rational_function(n, rng), g = random_rational_function(n, rng);
    CHECK(wht(f) == direct_transform(f));
    CHECK(convolve(f, g) == direct_convolution(f, g));
    CHECK(inverse_wht(wht(f)) == f);
  }
}

TEST_CASE("transform of simple functions") {
  const std::vector<std::uint32_t> origin{0};
  const Fn delta = Fn::indicator(2, origin);
  for (std::uint32_t z = 0; z < 4; ++z) CHECK(wht(delta)[z] == Rational(1, 4));
  const Fn chi = Fn::character(3, 5);
  const Fn chi_hat = wht(chi);
  for (std::uint32_t z = 0; z < 8; ++z) CHECK(chi_hat[z] == Rational(z == 5 ? 1 : 0));
  CHECK(mean(Fn::character(3, 0)) == 1);
  CHECK(walsh_hadamard(walsh_hadamard(chi)).values() == (chi.values() * Rational(8)).eval());
}

TEST_CASE("identity suite") {
  std::mt19937_64 rng(17);
  for (int n = 1; n <= 7; ++n) {
    for (int s = 0; s < 5; ++s) {
      const auto result =
          check_identities(random_rational_function(n, rng), random_rational_function(n, rng),
                           random_rational_function(n, rng));
      CHECK(result.raw_involution);
      CHECK(result.normalized_involution);
      CHECK(result.parseval);
      CHECK(result.convolution_adjoint);
      CHECK(result.kernel_spectrum);
      CHECK(result.adjacency_convolution);
    }
  }
}

TEST_CASE("adjacency against neighbour sums in double") {
  BooleanFunction<double> f(4);
  for (std::uint32_t x = 0; x < 16; ++x) f[x] = 0.5 * x - 1.0;
  const auto af = adjacency(f);
  const auto via_kernel = convolve(f, edge_kernel<double>(4));
  for (std::uint32_t x = 0; x < 16; ++x) CHECK(af[x] == doctest::Approx(via_kernel[x]));
  CHECK(kind_of([] { BooleanFunction<double>(17); }) == ErrorKind::DimensionMismatch);
  CHECK(kind_of([] { inner(BooleanFunction<double>(2), BooleanFunction<double>(3)); }) ==
        ErrorKind::DimensionMismatch);
}

TEST_CASE("distance from the self-convolution of a code") {
  const std::vector<std::uint32_t> rep{0, 7};
  CHECK(distance_check(3, rep, 3));
  CHECK_FALSE(distance_check(3, rep, 4));
  CHECK(pair_counts(3, rep)[7] == 2);
  CHECK(pair_counts(3, rep)[0] == 2);

  const auto spec = build_code(4, 1);
  const auto words = codeword_masks(spec);
  CHECK(static_cast<std::size_t>(fourier_min_distance(15, words)) == min_distance(spec));
  CHECK(distance_check(15, words, 6));
  CHECK_FALSE(distance_check(15, words, 7));
}

TEST_CASE("covering replay") {
  const auto words = codeword_masks(build_code(4, 1));
  const auto report = covering_replay(15, words, 3);
  CHECK(report.pass());
  CHECK(report.d == 6);
  CHECK(report.code_size == 16);
  CHECK(report.ball_size == 576);
  CHECK(report.bound == doctest::Approx(15.0 * 576 / (report.lambda - 3)));
  CHECK(16 <= report.bound);
  for (const auto& s : report.steps) CHECK(s.relative_slack() >= -kReplayTolerance);

  const std::vector<std::uint32_t> rep{0, 7};
  CHECK(covering_replay(3, rep, 1).pass());

  const std::vector<std::uint32_t> single{0};
  const auto lone = covering_replay(6, single, 2);
  for (const auto& s : lone.steps)
    if (s.name == "phi_ratio") CHECK(s.lhs == doctest::Approx(1.0));

  const std::vector<std::uint32_t> close{0, 3};
  CHECK(kind_of([&] { covering_replay(10, close, 1); }) == ErrorKind::NotApplicable);
  const std::vector<std::uint32_t> no_zero{1, 2};
  CHECK(kind_of([&] { covering_replay(4, no_zero, 1); }) == ErrorKind::InvalidParameters);
  CHECK(kind_of([&] { covering_replay(15, words, 3, 7); }) == ErrorKind::InvalidParameters);
}
