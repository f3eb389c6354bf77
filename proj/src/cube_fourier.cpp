#include "hdc/cube_fourier.hpp"

#include "hdc/ball_spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hdc {

namespace {

void check_code(int n, std::span<const std::uint32_t> code) {
  require(n >= 1 && n <= kMaxCubeDimension, ErrorKind::DimensionMismatch, "n must lie in [1, 16]");
  require(!code.empty(), ErrorKind::InvalidParameters, "code must be nonempty");
  for (auto x : code) require(x < (1u << n), ErrorKind::DimensionMismatch, "codeword outside the cube");
}

}  // namespace

std::vector<std::int64_t> pair_counts(int n, std::span<const std::uint32_t> code) {
  check_code(n, code);
  BooleanFunction<std::int64_t> indicator(n);
  for (auto x : code) indicator[x] = 1;
  auto spectrum = walsh_hadamard(indicator);
  for (std::uint32_t z = 0; z < spectrum.size(); ++z) spectrum[z] *= spectrum[z];
  auto counts = walsh_hadamard(spectrum);
  std::vector<std::int64_t> out(counts.size());
  for (std::uint32_t x = 0; x < counts.size(); ++x) out[x] = counts[x] >> n;
  return out;
}

bool distance_check(int n, std::span<const std::uint32_t> code, int d) {
  const auto counts = pair_counts(n, code);
  for (std::uint32_t x = 1; x < counts.size(); ++x)
    if (std::popcount(x) < d && counts[x] != 0) return false;
  return true;
}

int fourier_min_distance(int n, std::span<const std::uint32_t> code) {
  const auto counts = pair_counts(n, code);
  int best = n;
  for (std::uint32_t x = 1; x < counts.size(); ++x)
    if (counts[x] != 0) best = std::min(best, std::popcount(x));
  return best;
}

IdentityCheck check_identities(const BooleanFunction<Rational>& f, const BooleanFunction<Rational>& g,
                               const BooleanFunction<Rational>& h) {
  check_same_dimension(f, g);
  check_same_dimension(f, h);
  using Fn = BooleanFunction<Rational>;
  const int n = f.dimension();
  const Rational cube(static_cast<std::int64_t>(f.size()));
  IdentityCheck out;

  Fn scaled = f;
  for (Eigen::Index i = 0; i < scaled.values().size(); ++i) scaled.values()(i) *= cube;
  out.raw_involution = walsh_hadamard(walsh_hadamard(f)) == scaled;

  const Fn f_hat = wht(f);
  Fn shrunk = f;
  for (Eigen::Index i = 0; i < shrunk.values().size(); ++i) shrunk.values()(i) /= cube;
  out.normalized_involution = wht(f_hat) == shrunk;

  out.parseval = inner(f, g) == f_hat.values().cwiseProduct(wht(g).values()).sum();
  out.convolution_adjoint = inner(convolve(f, g), h) == inner(f, convolve(g, h));

  const Fn L = edge_kernel<Rational>(n);
  const Fn L_hat = wht(L);
  out.kernel_spectrum = true;
  for (std::uint32_t z = 0; z < L_hat.size(); ++z)
    out.kernel_spectrum = out.kernel_spectrum && L_hat[z] == Rational(n - 2 * std::popcount(z));
  out.adjacency_convolution = adjacency(f) == convolve(f, L);
  return out;
}

BooleanFunction<Rational> random_rational_function(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> numerator(-20, 20);
  std::uniform_int_distribution<int> denominator(1, 12);
  BooleanFunction<Rational> f(n);
  for (std::uint32_t x = 0; x < f.size(); ++x) {
    const int p = numerator(rng);
    f[x] = Rational(p, denominator(rng));
  }
  return f;
}

double ReplayStep::relative_slack() const {
  const double denom = std::max({std::abs(lhs), std::abs(rhs), scale, std::numeric_limits<double>::min()});
  if (equality) return -std::abs(rhs - lhs) / denom;
  return (rhs - lhs) / denom;
}

bool ReplayReport::pass() const {
  return std::all_of(steps.begin(), steps.end(), [](const ReplayStep& s) { return s.pass; });
}

ReplayReport covering_replay(int n, std::span<const std::uint32_t> code, int r, std::optional<int> d) {
  check_code(n, code);
  require(n <= 15, ErrorKind::DimensionMismatch, "replay limited to n <= 15");
  require(std::find(code.begin(), code.end(), 0u) != code.end(), ErrorKind::InvalidParameters,
          "code must contain the zero word");
  std::vector<std::uint32_t> words(code.begin(), code.end());
  std::sort(words.begin(), words.end());
  require(std::adjacent_find(words.begin(), words.end()) == words.end(), ErrorKind::InvalidParameters,
          "code contains repeated words");

  const int measured = fourier_min_distance(n, words);
  const int dist = d.value_or(measured);
  require(dist >= 1 && dist <= measured, ErrorKind::InvalidParameters,
          "d exceeds the code's minimum distance");

  const TridiagonalOperator op = ball_operator(n, r);
  const double lambda = top_eigenvalue(op);
  const double j = n - 2.0 * dist;
  if (lambda <= j)
    fail(ErrorKind::NotApplicable, "lambda_B = " + format_real(lambda) + " does not exceed n - 2d = " +
                                       format_real(j));

  using Fn = BooleanFunction<double>;
  const double cube = std::ldexp(1.0, n);

  // Radial Perron function of the ball, zero outside it.
  const Vector<double> profile = perron_profile(op);
  Fn f(n);
  std::size_t ball = 0;
  for (std::uint32_t x = 0; x < f.size(); ++x) {
    const int w = std::popcount(x);
    if (w <= r) {
      f[x] = profile(w);
      ++ball;
    }
  }
  const Fn Af = adjacency(f);

  // phi^ = sqrt(1_C * 1_C), so phi^2^ = 1_C * 1_C vanishes on 0 < |z| < d.
  const Fn indicator = Fn::indicator(n, words);
  const Fn code_conv = convolve(indicator, indicator);
  Fn phi_hat(n);
  for (std::uint32_t z = 0; z < phi_hat.size(); ++z) phi_hat[z] = std::sqrt(std::max(0.0, code_conv[z]));
  const Fn phi = inverse_wht(phi_hat);
  const Fn phi_phi = convolve(phi, phi);
  const Fn F = convolve(phi, f);
  const Fn F_hat = wht(F);
  const Fn AF = adjacency(F);

  const double Ef = mean(f), Ef2 = inner(f, f);
  const double Ephi = mean(phi), Ephi2 = inner(phi, phi);
  const double EF = mean(F), EF2 = inner(F, F);
  const double AFF = inner(AF, F);
  const double size = static_cast<double>(words.size());

  double perron_violation = -std::numeric_limits<double>::infinity();
  double f_max = 0.0;
  for (std::uint32_t x = 0; x < f.size(); ++x) {
    perron_violation = std::max(perron_violation, lambda * f[x] - Af[x]);
    f_max = std::max(f_max, f[x]);
  }
  double phi_phi_min = std::numeric_limits<double>::infinity(), phi_phi_max = 0.0;
  for (std::uint32_t x = 0; x < phi_phi.size(); ++x) {
    phi_phi_min = std::min(phi_phi_min, phi_phi[x]);
    phi_phi_max = std::max(phi_phi_max, std::abs(phi_phi[x]));
  }
  double gap_leak = 0.0, F_hat_max = 0.0;
  for (std::uint32_t z = 0; z < F_hat.size(); ++z) {
    F_hat_max = std::max(F_hat_max, std::abs(F_hat[z]));
    const int w = std::popcount(z);
    if (w > 0 && w < dist) gap_leak = std::max(gap_leak, std::abs(F_hat[z]));
  }

  const double margin = lambda - j;
  const double covering = n / margin * cube * Ef * Ef / Ef2;

  ReplayReport report;
  report.n = n;
  report.r = r;
  report.d = dist;
  report.code_size = words.size();
  report.ball_size = ball;
  report.lambda = lambda;
  report.bound = n / margin * static_cast<double>(ball);

  auto step = [&](std::string name, double lhs, double rhs, bool equality, double scale = 0.0) {
    ReplayStep s{std::move(name), lhs, rhs, equality, false, scale};
    s.pass = s.relative_slack() >= -kReplayTolerance;
    report.steps.push_back(std::move(s));
  };

  step("perron_pointwise", perron_violation, 0.0, false, lambda * f_max);
  step("support_cauchy", Ef * Ef, Ef2 * static_cast<double>(ball) / cube, false);
  step("phi_conv_nonnegative", -phi_phi_min, 0.0, false, phi_phi_max);
  step("phi_ratio", Ephi2 / (Ephi * Ephi), size, true);
  step("spectral_gap", gap_leak, 0.0, false, F_hat_max);
  step("estimate_lower", lambda * EF2, AFF, false);
  // Spectral form sum_z (n - 2|z|) F^(z)^2 with F^ = 0 on 0 < |z| < d. Keeping
  // the -E^2 F term makes it hold for d > n/2 as well.
  step("estimate_upper", AFF, n * EF * EF + j * (EF2 - EF * EF), false, n * EF * EF + std::abs(j) * EF2);
  step("mean_factorization", EF * EF, Ephi * Ephi * Ef * Ef, true);
  step("energy_lower", Ephi2 * Ef2 / cube, EF2, false);
  step("two_estimates", margin * Ephi2 * Ef2 / cube, n * Ephi * Ephi * Ef * Ef, false);
  step("final_bound", size, covering, false);
  step("ball_bound", covering, report.bound, false);

  for (const auto& s : report.steps)
    require(s.pass, ErrorKind::ChainViolation,
            "covering replay step '" + s.name + "' failed: lhs=" + format_real(s.lhs) + " rhs=" + format_real(s.rhs));
  return report;
}

}  // namespace hdc
