#include "hdc/ball_spectrum.hpp"

#include "hdc/error.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace hdc {

TridiagonalOperator ball_operator(std::int64_t n, int r) {
  require(r >= 1, ErrorKind::InvalidRadius, "radius must be at least 1");
  require(2 * static_cast<std::int64_t>(r) <= n, ErrorKind::InvalidRadius,
          "radius " + std::to_string(r) + " exceeds n/2 for n = " + std::to_string(n));
  require(n <= (std::int64_t{1} << 56) / (r + 1), ErrorKind::OutOfRange, "n too large for exact off-diagonals");
  TridiagonalOperator op{TridiagonalOperator::Mode::Finite, n, r, {}};
  op.offdiag_sq.reserve(static_cast<std::size_t>(r));
  for (std::int64_t i = 0; i < r; ++i) op.offdiag_sq.push_back((i + 1) * (n - i));
  return op;
}

TridiagonalOperator asymptotic_operator(int r) {
  require(r >= 1, ErrorKind::InvalidRadius, "radius must be at least 1");
  TridiagonalOperator op{TridiagonalOperator::Mode::Asymptotic, 0, r, {}};
  for (std::int64_t i = 0; i < r; ++i) op.offdiag_sq.push_back(i + 1);
  return op;
}

std::size_t sturm_count(const TridiagonalOperator& op, double x) {
  // LDL^T pivots of (T - x I); negative pivots count eigenvalues below x.
  const double tiny = std::numeric_limits<double>::min();
  std::size_t count = 0;
  double pivot = -x;
  if (pivot == 0.0) pivot = -tiny;
  if (pivot < 0) ++count;
  for (auto e : op.offdiag_sq) {
    pivot = -x - static_cast<double>(e) / pivot;
    if (pivot == 0.0) pivot = -tiny;
    if (pivot < 0) ++count;
  }
  return count;
}

double top_eigenvalue(const TridiagonalOperator& op, double tol) {
  require(tol > 0, ErrorKind::InvalidParameters, "tolerance must be positive");
  std::vector<double> b(op.offdiag_sq.size());
  std::transform(op.offdiag_sq.begin(), op.offdiag_sq.end(), b.begin(),
                 [](std::int64_t e) { return std::sqrt(static_cast<double>(e)); });
  double hi = 0.0;
  for (std::size_t i = 0; i < op.size(); ++i) {
    double row = 0.0;
    if (i > 0) row += b[i - 1];
    if (i < b.size()) row += b[i];
    hi = std::max(hi, row);
  }
  hi = std::nextafter(hi, std::numeric_limits<double>::infinity());
  double lo = 0.0;
  const std::size_t all = op.size();
  while (hi - lo > tol) {
    const double mid = lo + (hi - lo) / 2;
    if (mid <= lo || mid >= hi) break;
    if (sturm_count(op, mid) < all)
      lo = mid;  // some eigenvalue >= mid
    else
      hi = mid;
  }
  return lo + (hi - lo) / 2;
}

Vector<double> top_eigenvector(const TridiagonalOperator& op) {
  const auto size = static_cast<Eigen::Index>(op.size());
  if (size == 1) return Vector<double>::Ones(1);
  Vector<double> diag = Vector<double>::Zero(size);
  Vector<double> sub(size - 1);
  for (Eigen::Index i = 0; i + 1 < size; ++i) sub(i) = std::sqrt(static_cast<double>(op.offdiag_sq[i]));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  require(solver.info() == Eigen::Success, ErrorKind::CertificateFailure, "tridiagonal eigensolver failed");
  Vector<double> v = solver.eigenvectors().col(size - 1);
  if (v.sum() < 0) v = -v;
  return v.cwiseMax(0.0);
}

Vector<double> perron_profile(const TridiagonalOperator& op) {
  const Vector<double> v = top_eigenvector(op);
  Vector<double> g(v.size());
  // v_i = sqrt(C(n,i)) g(i); C(n,i+1)/C(n,i) = (n-i)/(i+1) = offdiag_sq[i] / (i+1)^2.
  double log_binom = 0.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    g(i) = v(i) * std::exp(-0.5 * log_binom);
    if (i + 1 < v.size()) {
      const double ratio = static_cast<double>(op.offdiag_sq[i]) / static_cast<double>((i + 1) * (i + 1));
      log_binom += std::log(ratio);
    }
  }
  return g / g(0);
}

namespace {

// Off-diagonals sqrt(i+1) are irrational, so write the witness as
// w_i = u_i / sqrt(i!); the quotient becomes 2 sum u_i u_{i+1} / i! over sum u_i^2 / i!.
EigenCertificate certify_asymptotic(const TridiagonalOperator& op, int digits) {
  EigenCertificate cert;
  cert.n = 0;
  cert.r = op.r;
  cert.lambda_float = top_eigenvalue(op);
  const Vector<double> w = top_eigenvector(op);
  const double sign = w.sum() < 0 ? -1.0 : 1.0;
  cert.witness.resize(w.size());
  double scale = 1.0;
  bool any = false;
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    if (i > 0) scale *= std::sqrt(static_cast<double>(i));
    const double u = sign * w(i) * scale;
    cert.witness(i) = u > 0 ? round_to_rational(u, digits) : Rational(0);
    any = any || cert.witness(i) != 0;
  }
  require(any, ErrorKind::DegenerateWitness, "rounded witness vanished; retry with more digits");
  Rational numerator(0), denominator(0), factorial(1);
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    if (i > 0) factorial *= Rational(static_cast<std::int64_t>(i));
    denominator += cert.witness(i) * cert.witness(i) / factorial;
    if (i + 1 < w.size()) numerator += Rational(2) * cert.witness(i) * cert.witness(i + 1) / factorial;
  }
  cert.lambda_certified = numerator / denominator;
  return cert;
}

}  // namespace

EigenCertificate certify(const TridiagonalOperator& op, int digits) {
  require(digits >= 1 && digits <= 17, ErrorKind::InvalidParameters, "digits must lie in [1, 17]");
  if (!op.finite()) return certify_asymptotic(op, digits);
  EigenCertificate cert;
  cert.n = op.n;
  cert.r = op.r;
  cert.lambda_float = top_eigenvalue(op);
  const Vector<double> profile = perron_profile(op);
  cert.witness.resize(profile.size());
  bool any = false;
  for (Eigen::Index i = 0; i < profile.size(); ++i) {
    cert.witness(i) = profile(i) > 0 ? round_to_rational(profile(i), digits) : Rational(0);
    any = any || cert.witness(i) != 0;
  }
  require(any, ErrorKind::DegenerateWitness, "rounded witness vanished; retry with more digits");
  cert.lambda_certified = radial_rayleigh_quotient<Rational>(op.n, cert.witness);
  return cert;
}

EigenCertificate certify(std::int64_t n, int r, int digits) { return certify(ball_operator(n, r), digits); }

double radius3_test_function(std::int64_t n, double t) {
  require(n >= 16, ErrorKind::InvalidParameters, "test function needs n >= 16");
  require(t > 0, ErrorKind::InvalidParameters, "t must be positive");
  using Real = long double;
  const Real rn = static_cast<Real>(n);
  const Real sn = std::sqrt(rn);
  const Real tt = t;
  Vector<Real> f(4);
  f(0) = 1;
  f(1) = tt / sn;
  f(2) = (tt * tt - 1) / (rn - 1);
  f(3) = (f(2) * tt * sn - 2 * f(1)) / (rn - 2);
  return static_cast<double>(radial_rayleigh_quotient<Real>(n, f));
}

double recurrence_largest_root(int r) {
  require(r >= 1, ErrorKind::InvalidRadius, "radius must be at least 1");
  const int degree = r + 1;
  auto eval = [degree](double x, double& dp) {
    double p_prev = 1.0, p = x;
    double d_prev = 0.0, d = 1.0;
    for (int j = 1; j < degree; ++j) {
      const double p_next = x * p - j * p_prev;
      const double d_next = p + x * d - j * d_prev;
      p_prev = p;
      p = p_next;
      d_prev = d;
      d = d_next;
    }
    dp = d;
    return p;
  };
  // All roots are real and below 2 sqrt(degree); Newton from the right decreases monotonically.
  double x = 2.0 * std::sqrt(static_cast<double>(degree)) + 1.0;
  for (int iter = 0; iter < 500; ++iter) {
    double dp = 0.0;
    const double p = eval(x, dp);
    const double next = x - p / dp;
    if (!(next < x)) break;
    x = next;
  }
  return x;
}

double asymptotic_constant(int r) {
  require(r >= 1 && r <= 64, ErrorKind::InvalidRadius, "radius must lie in [1, 64]");
  const double t = top_eigenvalue(asymptotic_operator(r));
  const double oracle = recurrence_largest_root(r);
  require(std::abs(t - oracle) <= 1e-9 * std::max(1.0, t), ErrorKind::CertificateFailure,
          "bisection and recurrence roots disagree for r = " + std::to_string(r));
  return t;
}

}  // namespace hdc
