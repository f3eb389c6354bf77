#pragma once

// Fourier analysis on F_2^n with the uniform-measure conventions
//   <f, g>    = 2^-n sum_x f(x) g(x)
//   f^(z)     = <f, chi_z>,   chi_z(x) = (-1)^<x, z>
//   (f * g)(x) = E_y f(y) g(x + y)
// so that f = sum_z f^(z) chi_z, (f * g)^ = f^ g^ and <f, g> = sum_z f^(z) g^(z).
// Under this scaling the transform applied twice gives 2^-n f, while the raw
// +-1 Walsh-Hadamard butterfly applied twice gives 2^n f.
//
// Everything is templated on the scalar so the identity checks can run in
// exact rationals and the covering replay in double.

#include "hdc/error.hpp"
#include "hdc/numeric.hpp"

#include <bit>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace hdc {

inline constexpr int kMaxCubeDimension = 16;

template <typename Scalar>
class BooleanFunction {
 public:
  explicit BooleanFunction(int n) : n_(check_dimension(n)), values_(Vector<Scalar>::Zero(Eigen::Index{1} << n)) {}

  BooleanFunction(int n, Vector<Scalar> values) : n_(check_dimension(n)), values_(std::move(values)) {
    require(values_.size() == (Eigen::Index{1} << n), ErrorKind::DimensionMismatch,
            "table length must be 2^n");
  }

  static BooleanFunction indicator(int n, std::span<const std::uint32_t> points) {
    BooleanFunction f(n);
    for (auto x : points) {
      require(x < (1u << n), ErrorKind::DimensionMismatch, "point outside the cube");
      f[x] = Scalar(1);
    }
    return f;
  }

  /// chi_z(x) = (-1)^<x, z>.
  static BooleanFunction character(int n, std::uint32_t z) {
    BooleanFunction f(n);
    for (std::uint32_t x = 0; x < f.size(); ++x) f[x] = Scalar(std::popcount(x & z) % 2 == 0 ? 1 : -1);
    return f;
  }

  int dimension() const { return n_; }
  std::uint32_t size() const { return static_cast<std::uint32_t>(values_.size()); }
  const Vector<Scalar>& values() const { return values_; }
  Vector<Scalar>& values() { return values_; }

  Scalar& operator[](std::uint32_t x) { return values_(static_cast<Eigen::Index>(x)); }
  const Scalar& operator[](std::uint32_t x) const { return values_(static_cast<Eigen::Index>(x)); }

  friend bool operator==(const BooleanFunction& a, const BooleanFunction& b) {
    return a.n_ == b.n_ && a.values_ == b.values_;
  }

 private:
  static int check_dimension(int n) {
    require(n >= 0 && n <= kMaxCubeDimension, ErrorKind::DimensionMismatch,
            "cube dimension must lie in [0, 16], got " + std::to_string(n));
    return n;
  }

  int n_;
  Vector<Scalar> values_;
};

template <typename Scalar>
void check_same_dimension(const BooleanFunction<Scalar>& f, const BooleanFunction<Scalar>& g) {
  require(f.dimension() == g.dimension(), ErrorKind::DimensionMismatch, "functions live on different cubes");
}

/// Raw butterfly: (Hf)(z) = sum_x f(x) chi_z(x).
template <typename Scalar>
BooleanFunction<Scalar> walsh_hadamard(BooleanFunction<Scalar> f) {
  Vector<Scalar>& v = f.values();
  const Eigen::Index size = v.size();
  for (Eigen::Index h = 1; h < size; h <<= 1)
    for (Eigen::Index i = 0; i < size; i += h << 1)
      for (Eigen::Index j = i; j < i + h; ++j) {
        Scalar a = v(j);
        Scalar b = v(j + h);
        v(j) = a + b;
        v(j + h) = a - b;
      }
  return f;
}

/// f^(z) = 2^-n (Hf)(z).
template <typename Scalar>
BooleanFunction<Scalar> wht(const BooleanFunction<Scalar>& f) {
  BooleanFunction<Scalar> out = walsh_hadamard(f);
  const Scalar scale = Scalar(1) / Scalar(static_cast<std::int64_t>(f.size()));
  for (Eigen::Index i = 0; i < out.values().size(); ++i) out.values()(i) *= scale;
  return out;
}

/// Reconstructs f = sum_z f^(z) chi_z from its transform.
template <typename Scalar>
BooleanFunction<Scalar> inverse_wht(const BooleanFunction<Scalar>& transform) {
  return walsh_hadamard(transform);
}

template <typename Scalar>
Scalar mean(const BooleanFunction<Scalar>& f) {
  return f.values().sum() / Scalar(static_cast<std::int64_t>(f.size()));
}

template <typename Scalar>
Scalar inner(const BooleanFunction<Scalar>& f, const BooleanFunction<Scalar>& g) {
  check_same_dimension(f, g);
  return f.values().cwiseProduct(g.values()).sum() / Scalar(static_cast<std::int64_t>(f.size()));
}

template <typename Scalar>
BooleanFunction<Scalar> pointwise(const BooleanFunction<Scalar>& f, const BooleanFunction<Scalar>& g) {
  check_same_dimension(f, g);
  return BooleanFunction<Scalar>(f.dimension(), f.values().cwiseProduct(g.values()));
}

/// f * g through f^ g^ and the inverse transform.
template <typename Scalar>
BooleanFunction<Scalar> convolve(const BooleanFunction<Scalar>& f, const BooleanFunction<Scalar>& g) {
  check_same_dimension(f, g);
  return inverse_wht(pointwise(wht(f), wht(g)));
}

/// L(x) = 2^n on weight-one points, 0 elsewhere; A f = f * L.
template <typename Scalar>
BooleanFunction<Scalar> edge_kernel(int n) {
  BooleanFunction<Scalar> L(n);
  for (int i = 0; i < n; ++i) L[1u << i] = Scalar(static_cast<std::int64_t>(L.size()));
  return L;
}

/// (Af)(x) = sum of f over the Hamming neighbours of x.
template <typename Scalar>
BooleanFunction<Scalar> adjacency(const BooleanFunction<Scalar>& f) {
  BooleanFunction<Scalar> out(f.dimension());
  for (std::uint32_t x = 0; x < f.size(); ++x) {
    Scalar sum(0);
    for (int i = 0; i < f.dimension(); ++i) sum += f[x ^ (1u << i)];
    out[x] = sum;
  }
  return out;
}

/// Exact outcome of the transform identities on one triple of functions.
struct IdentityCheck {
  bool raw_involution = false;         // H(Hf) = 2^n f
  bool normalized_involution = false;  // (f^)^ = 2^-n f
  bool parseval = false;               // <f, g> = sum_z f^(z) g^(z)
  bool convolution_adjoint = false;    // <f * g, h> = <f, g * h>
  bool kernel_spectrum = false;        // L^(z) = n - 2 |z|
  bool adjacency_convolution = false;  // A f = f * L

  bool all() const {
    return raw_involution && normalized_involution && parseval && convolution_adjoint && kernel_spectrum &&
           adjacency_convolution;
  }
};

IdentityCheck check_identities(const BooleanFunction<Rational>& f, const BooleanFunction<Rational>& g,
                               const BooleanFunction<Rational>& h);

/// Values p/q with |p| <= 20 and 1 <= q <= 12.
BooleanFunction<Rational> random_rational_function(int n, std::mt19937_64& rng);

/// counts[x] = #{(a, b) in C^2 : a + b = x} = 2^n (1_C * 1_C)(x), exact.
std::vector<std::int64_t> pair_counts(int n, std::span<const std::uint32_t> code);

/// True iff (1_C * 1_C)(x) = 0 for every 0 < |x| < d.
bool distance_check(int n, std::span<const std::uint32_t> code, int d);

/// Minimum distance read off the support of 1_C * 1_C (n if |C| = 1).
int fourier_min_distance(int n, std::span<const std::uint32_t> code);

struct ReplayStep {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  bool equality = false;  // lhs == rhs claimed, otherwise lhs <= rhs
  bool pass = false;
  /// Magnitude the gap is measured against; matters when both sides are ~0.
  double scale = 0.0;

  /// (rhs - lhs) / max(|lhs|, |rhs|, scale); equalities report -|gap| on that scale.
  double relative_slack() const;
};

struct ReplayReport {
  int n = 0;
  int r = 0;
  int d = 0;
  std::size_t code_size = 0;
  std::size_t ball_size = 0;
  double lambda = 0.0;
  double bound = 0.0;  // n / (lambda - (n - 2d)) |B|
  std::vector<ReplayStep> steps;

  bool pass() const;
};

inline constexpr double kReplayTolerance = 1e-9;

/// Numerically replays the covering argument that bounds |C| by
/// n / (lambda_B - (n - 2d)) |B| for B = B_r(0, n). The code must contain 0;
/// d defaults to the code's measured minimum distance. Throws NotApplicable
/// when lambda_B <= n - 2d and ChainViolation if any step fails.
ReplayReport covering_replay(int n, std::span<const std::uint32_t> code, int r, std::optional<int> d = {});

}  // namespace hdc
