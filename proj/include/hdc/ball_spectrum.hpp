#pragma once

// Maximal eigenvalue of the hypercube subgraph induced by a Hamming ball
// B_r(0, n), via its radial (weight-class) tridiagonal reduction.
//
// For a radial f on the cube (f(x) = g(|x|)), the adjacency operator acts as
//   (Af)(i) = i g(i-1) + (n-i) g(i+1),
// and the symmetrised operator on v_i = sqrt(C(n,i)) g(i) is tridiagonal with
// zero diagonal and squared off-diagonals (i+1)(n-i). Dividing by n gives the
// normalised operator with squared off-diagonals i+1, whose top eigenvalue is
// lim lambda_B / sqrt(n).

#include "hdc/numeric.hpp"

#include <cstdint>
#include <vector>

namespace hdc {

struct TridiagonalOperator {
  enum class Mode { Finite, Asymptotic };

  Mode mode = Mode::Finite;
  std::int64_t n = 0;  // 0 in asymptotic mode
  int r = 0;
  std::vector<std::int64_t> offdiag_sq;

  std::size_t size() const { return offdiag_sq.size() + 1; }
  bool finite() const { return mode == Mode::Finite; }
};

/// Radial reduction of B_r(0, n); requires 1 <= r <= n/2.
TridiagonalOperator ball_operator(std::int64_t n, int r);
/// Normalised n -> infinity limit with squared off-diagonals 1..r.
TridiagonalOperator asymptotic_operator(int r);

/// Number of eigenvalues strictly below x (Sturm sequence sign count).
std::size_t sturm_count(const TridiagonalOperator& op, double x);

inline constexpr double kDefaultEigenTolerance = 1e-12;

/// Largest eigenvalue by Sturm bisection on [0, max row sum].
double top_eigenvalue(const TridiagonalOperator& op, double tol = kDefaultEigenTolerance);

/// Unit-norm, positive top eigenvector of the symmetric tridiagonal form.
Vector<double> top_eigenvector(const TridiagonalOperator& op);

/// Radial profile g(i) = v_i / sqrt(C(n, i)) normalised to g(0) = 1.
Vector<double> perron_profile(const TridiagonalOperator& op);

/// <Af, f> / <f, f> for the radial function with weight-class values
/// profile(0..r) on the n-cube (zero outside weight r).
template <typename Scalar>
Scalar radial_rayleigh_quotient(std::int64_t n, const Vector<Scalar>& profile) {
  Scalar binom(1);
  Scalar numerator(0);
  Scalar denominator(0);
  const Eigen::Index size = profile.size();
  for (Eigen::Index i = 0; i < size; ++i) {
    denominator += binom * profile(i) * profile(i);
    if (i + 1 < size)
      numerator += Scalar(2) * binom * Scalar(n - i) * profile(i) * profile(i + 1);
    binom = binom * Scalar(n - i) / Scalar(i + 1);
  }
  return numerator / denominator;
}

struct EigenCertificate {
  std::int64_t n = 0;
  int r = 0;
  double lambda_float = 0.0;
  /// Exact Rayleigh quotient of `witness`; a rigorous lower bound on lambda_B.
  Rational lambda_certified;
  Vector<Rational> witness;
};

inline constexpr int kDefaultCertificateDigits = 12;

/// Rounds the Perron profile to rationals and evaluates its Rayleigh quotient exactly.
/// For the limiting operator the result has n = 0 and the witness holds
/// u_i = w_i sqrt(i!) so that the quotient stays rational.
EigenCertificate certify(const TridiagonalOperator& op, int digits = kDefaultCertificateDigits);
EigenCertificate certify(std::int64_t n, int r, int digits = kDefaultCertificateDigits);

/// Rayleigh quotient of the explicit radius-3 test function
///   f(0) = 1, f(1) = t/sqrt(n), f(2) = (t^2-1)/(n-1),
///   f(3) = (f(2) t sqrt(n) - 2 f(1)) / (n-2).
double radius3_test_function(std::int64_t n, double t);

/// Largest root of p_{r+1}, where p_0 = 1, p_1 = x, p_{j+1} = x p_j - j p_{j-1}
/// (the characteristic polynomial of the normalised radius-r operator), by
/// Newton iteration from above.
double recurrence_largest_root(int r);

/// t_r = lim lambda_{B_r}(n) / sqrt(n), cross-checked against recurrence_largest_root.
double asymptotic_constant(int r);

}  // namespace hdc
