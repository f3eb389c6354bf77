#pragma once

// Lower and upper bounds on A(n, d). Finite-n rigorous bounds use exact
// integer/rational arithmetic; rate-level and sqrt(n)-regime formulas are
// evaluated in double with their o()/O() terms dropped and are flagged as
// heuristic.

#include "hdc/ball_spectrum.hpp"
#include "hdc/numeric.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hdc {

enum class BoundKind { Lower, Upper };
enum class Rigor { Rigorous, AsymptoticHeuristic };

std::string_view to_string(BoundKind kind);
std::string_view to_string(Rigor rigor);

struct CodeParameters {
  std::int64_t n = 0;
  std::int64_t d = 0;

  /// Validates 1 <= d <= n.
  static CodeParameters make(std::int64_t n, std::int64_t d);

  std::int64_t j() const { return n - 2 * d; }
  double delta() const { return static_cast<double>(d) / static_cast<double>(n); }
  /// a with d = n/2 - a sqrt(n), i.e. j / (2 sqrt n).
  double sqrt_regime() const;
};

struct BoundValue {
  BoundKind kind = BoundKind::Upper;
  std::optional<BigInt> value_exact;
  double value_log2 = 0.0;
  Rigor rigor = Rigor::Rigorous;
  std::string label;
  std::string condition;
};

/// One row of a bound table: a bound evaluated at a concrete (n, d).
struct BoundRow {
  std::int64_t n = 0;
  std::int64_t d = 0;
  BoundValue bound;

  std::int64_t j() const { return n - 2 * d; }
};

// Scalar helpers.
double binary_entropy(double p);
/// Standard normal tail P(Z > x).
double normal_tail(double x);
/// Johnson radius (1 - sqrt(1 - 2 delta)) / 2.
double johnson_radius(double delta);
/// H2((1 - sqrt(1 - x)) / 2), the composite used by the second LP bound.
double lp_composite(double x);

/// |B_r(0, n)| = sum_{i <= r} C(n, i).
BigInt vol(std::int64_t r, std::int64_t n);

BoundValue gv_lower(std::int64_t n, std::int64_t d);
BoundValue hamming_upper(std::int64_t n, std::int64_t d);
BoundValue singleton_upper(std::int64_t n, std::int64_t d);
BoundValue plotkin_upper(std::int64_t n, std::int64_t d);
/// n (j + 2); only meaningful for j = o(sqrt n), so flagged heuristic.
BoundValue mceliece_upper(std::int64_t n, std::int64_t d);

struct RateBounds {
  double eb = 0.0;     // 1 - H2(J2(delta))
  double mrrw1 = 0.0;  // H2(1/2 - sqrt(delta (1 - delta)))
  double mrrw2 = 0.0;  // min_u 1 + g(u^2) - g(u^2 + 2 delta u + 2 delta)
  double mrrw2_argmin = 0.0;
};

RateBounds rate_bounds(double delta);

/// floor(n |B_r| / (lambda_hat - (n - 2d))) for an exact lower bound
/// lambda_hat <= lambda_{B_r}(n); n becomes 2d when d > n/2.
/// Throws NotApplicable if lambda_hat <= n - 2d.
BoundValue new_upper(std::int64_t n, std::int64_t d, int r, const Rational& lambda_hat);
BoundValue new_upper(std::int64_t n, std::int64_t d, const EigenCertificate& cert);
BoundValue new_upper(std::int64_t n, std::int64_t d, int r);

struct BestNewUpper {
  BoundValue bound;
  int r = 0;
};

/// Minimum of new_upper over r = 1..min(r_max, n/2) where applicable; ties go to smaller r.
BestNewUpper best_new_upper(std::int64_t n, std::int64_t d, int r_max);

/// 2^(cm) at (n, d) = (2^m - 1, 2^(m-1) - 2^(m/2+c-1)), backed by build_code.
BoundRow cyclic_lower(int m, int c);

/// Every rigorous and heuristic bound at (n, d), sorted by label.
std::vector<BoundRow> bound_table(std::int64_t n, std::int64_t d, int r_max = 8);

/// sqrt(n)-regime display formulas at d = n/2 - a sqrt(n), for each n.
std::vector<BoundRow> regime_table(double a, const std::vector<std::int64_t>& n_list);

struct RmReference {
  std::string label;
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::int64_t d = 0;
};

/// First- and second-order Reed-Muller parameters at length 2^m.
std::vector<RmReference> rm_reference(int m);

}  // namespace hdc
