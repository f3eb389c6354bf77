#include "hdc/bounds.hpp"

#include "hdc/cyclic_code.hpp"
#include "hdc/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace hdc {

namespace {

BoundValue exact_bound(BoundKind kind, std::string label, BigInt value, std::string condition = {}) {
  BoundValue b;
  b.kind = kind;
  b.value_log2 = log2(value);
  b.value_exact = std::move(value);
  b.rigor = Rigor::Rigorous;
  b.label = std::move(label);
  b.condition = std::move(condition);
  return b;
}

BoundValue heuristic_bound(BoundKind kind, std::string label, double log2_value, std::string condition) {
  BoundValue b;
  b.kind = kind;
  b.value_log2 = log2_value;
  b.rigor = Rigor::AsymptoticHeuristic;
  b.label = std::move(label);
  b.condition = std::move(condition);
  return b;
}

void check_pair(std::int64_t n, std::int64_t d) {
  require(n >= 1 && d >= 1 && d <= n, ErrorKind::OutOfRange,
          "need 1 <= d <= n, got n=" + std::to_string(n) + " d=" + std::to_string(d));
}

}  // namespace

std::string_view to_string(BoundKind kind) { return kind == BoundKind::Lower ? "lower" : "upper"; }

std::string_view to_string(Rigor rigor) {
  return rigor == Rigor::Rigorous ? "rigorous" : "asymptotic-heuristic";
}

CodeParameters CodeParameters::make(std::int64_t n, std::int64_t d) {
  check_pair(n, d);
  return {n, d};
}

double CodeParameters::sqrt_regime() const {
  return static_cast<double>(j()) / (2.0 * std::sqrt(static_cast<double>(n)));
}

double binary_entropy(double p) {
  if (p <= 0.0 || p >= 1.0) return 0.0;
  return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

double normal_tail(double x) { return 0.5 * std::erfc(x / std::numbers::sqrt2); }

double johnson_radius(double delta) { return 0.5 * (1.0 - std::sqrt(std::max(0.0, 1.0 - 2.0 * delta))); }

double lp_composite(double x) {
  x = std::clamp(x, 0.0, 1.0);
  return binary_entropy(0.5 * (1.0 - std::sqrt(1.0 - x)));
}

BigInt vol(std::int64_t r, std::int64_t n) {
  require(n >= 0 && r >= 0 && r <= n, ErrorKind::InvalidRadius,
          "need 0 <= r <= n, got r=" + std::to_string(r) + " n=" + std::to_string(n));
  BigInt total = 0;
  BigInt term = 1;
  for (std::int64_t i = 0; i <= r; ++i) {
    total += term;
    term = term * (n - i) / (i + 1);
  }
  if (r > 0 && 2 * r <= n) {
    const double cap = binary_entropy(static_cast<double>(r) / static_cast<double>(n)) * static_cast<double>(n);
    require(log2(total) <= cap + 1e-9 * std::max(1.0, cap), ErrorKind::CertificateFailure,
            "ball volume exceeds its entropy bound");
  }
  return total;
}

BoundValue gv_lower(std::int64_t n, std::int64_t d) {
  check_pair(n, d);
  require(2 * d <= n, ErrorKind::OutOfRange, "Gilbert-Varshamov needs d <= n/2");
  const BigInt space = pow2(static_cast<unsigned>(n));
  const BigInt ball = vol(d - 1, n);
  BigInt value = space / ball;
  if (value * ball != space) value += 1;
  return exact_bound(BoundKind::Lower, "gv", std::move(value), "ceil(2^n / Vol(d-1, n))");
}

BoundValue hamming_upper(std::int64_t n, std::int64_t d) {
  check_pair(n, d);
  const std::int64_t e = (d - 1) / 2;
  return exact_bound(BoundKind::Upper, "hamming", pow2(static_cast<unsigned>(n)) / vol(e, n),
                     "floor(2^n / Vol(" + std::to_string(e) + ", n))");
}

BoundValue singleton_upper(std::int64_t n, std::int64_t d) {
  check_pair(n, d);
  return exact_bound(BoundKind::Upper, "singleton", pow2(static_cast<unsigned>(n - d + 1)), "2^(n-d+1)");
}

BoundValue plotkin_upper(std::int64_t n, std::int64_t d) {
  check_pair(n, d);
  if (2 * d == n) return exact_bound(BoundKind::Upper, "plotkin", BigInt(2 * n), "d = n/2: 2n");
  if (2 * d > n) {
    // Odd d reduces to the even case through A(n, d) = A(n+1, d+1).
    if (d % 2 == 0)
      return exact_bound(BoundKind::Upper, "plotkin", BigInt(2 * (d / (2 * d - n))),
                         "d > n/2, d even: 2 floor(d / (2d - n))");
    return exact_bound(BoundKind::Upper, "plotkin", BigInt(2 * ((d + 1) / (2 * d + 1 - n))),
                       "d > n/2, d odd: 2 floor((d+1) / (2d+1-n))");
  }
  BigInt value = BigInt(d) * pow2(static_cast<unsigned>(n - 2 * d + 2));
  return exact_bound(BoundKind::Upper, "plotkin", std::move(value), "d < n/2: d 2^(n-2d+2)");
}

BoundValue mceliece_upper(std::int64_t n, std::int64_t d) {
  check_pair(n, d);
  const std::int64_t j = n - 2 * d;
  require(j >= 0, ErrorKind::OutOfRange, "McEliece bound needs d <= n/2");
  const double ratio = static_cast<double>(j) / std::sqrt(static_cast<double>(n));
  BoundValue b = exact_bound(BoundKind::Upper, "mceliece", BigInt(n * (j + 2)),
                             "valid for j = o(sqrt n); j/sqrt(n)=" + format_real(ratio));
  b.rigor = Rigor::AsymptoticHeuristic;
  return b;
}

RateBounds rate_bounds(double delta) {
  require(delta > 0.0 && delta <= 0.5, ErrorKind::OutOfRange, "delta must lie in (0, 1/2]");
  RateBounds out;
  out.eb = 1.0 - binary_entropy(johnson_radius(delta));
  out.mrrw1 = binary_entropy(0.5 - std::sqrt(delta * (1.0 - delta)));

  const double upper = 1.0 - 2.0 * delta;
  auto objective = [delta](double u) {
    return 1.0 + lp_composite(u * u) - lp_composite(u * u + 2.0 * delta * u + 2.0 * delta);
  };
  constexpr int kGrid = 1001;
  int best_i = 0;
  double best = objective(0.0);
  for (int i = 1; i < kGrid; ++i) {
    const double v = objective(upper * i / (kGrid - 1));
    if (v < best) {
      best = v;
      best_i = i;
    }
  }
  double lo = upper * std::max(0, best_i - 1) / (kGrid - 1);
  double hi = upper * std::min(kGrid - 1, best_i + 1) / (kGrid - 1);
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = objective(x1), f2 = objective(x2);
  while (hi - lo > 1e-10) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = objective(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = objective(x2);
    }
  }
  const double u = 0.5 * (lo + hi);
  const double refined = objective(u);
  if (refined < best) {
    out.mrrw2 = refined;
    out.mrrw2_argmin = u;
  } else {
    out.mrrw2 = best;
    out.mrrw2_argmin = upper * best_i / (kGrid - 1);
  }
  return out;
}

BoundValue new_upper(std::int64_t n, std::int64_t d, int r, const Rational& lambda_hat) {
  check_pair(n, d);
  require(r >= 1 && 2 * static_cast<std::int64_t>(r) <= n, ErrorKind::InvalidRadius, "radius must lie in [1, n/2]");
  const std::int64_t j = n - 2 * d;
  const Rational gap = lambda_hat - Rational(j);
  if (gap <= 0)
    fail(ErrorKind::NotApplicable, "lambda_hat(B_" + std::to_string(r) + ") = " + format_real(to_double(lambda_hat)) +
                                       " does not exceed n - 2d = " + std::to_string(j));
  // For d > n/2 the second spectral estimate only yields 2d in place of n.
  const std::int64_t factor = std::max(n, 2 * d);
  const Rational value = Rational(BigInt(factor) * vol(r, n)) / gap;
  return exact_bound(BoundKind::Upper, "new_r" + std::to_string(r), floor(value),
                     std::string(factor == n ? "n" : "2d") + "/(lambda-(n-2d)) Vol(" + std::to_string(r) +
                         ",n); lambda>=" + format_real(to_double(lambda_hat)));
}

BoundValue new_upper(std::int64_t n, std::int64_t d, const EigenCertificate& cert) {
  require(cert.n == n, ErrorKind::InvalidParameters, "certificate was issued for a different n");
  return new_upper(n, d, cert.r, cert.lambda_certified);
}

BoundValue new_upper(std::int64_t n, std::int64_t d, int r) {
  check_pair(n, d);
  require(r >= 1 && 2 * static_cast<std::int64_t>(r) <= n, ErrorKind::InvalidRadius, "radius must lie in [1, n/2]");
  return new_upper(n, d, certify(n, r));
}

BestNewUpper best_new_upper(std::int64_t n, std::int64_t d, int r_max) {
  check_pair(n, d);
  std::optional<BestNewUpper> best;
  const std::int64_t limit = std::min<std::int64_t>(r_max, n / 2);
  for (int r = 1; r <= limit; ++r) {
    try {
      BoundValue b = new_upper(n, d, r);
      if (!best || *b.value_exact < *best->bound.value_exact) best = BestNewUpper{std::move(b), r};
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotApplicable) throw;
    }
  }
  if (!best)
    fail(ErrorKind::NotApplicable, "no ball radius r <= " + std::to_string(limit) +
                                       " has lambda_B > n - 2d for n=" + std::to_string(n) + " d=" + std::to_string(d));
  best->bound.label = "new_best";
  best->bound.condition = "r=" + std::to_string(best->r) + "; " + best->bound.condition;
  return *best;
}

BoundRow cyclic_lower(int m, int c) {
  const ConstructionSpec spec = build_code(m, c);
  const std::int64_t n = spec.n;
  BigInt size = pow2(static_cast<unsigned>(spec.k));
  BigInt n_pow = 1;
  for (int i = 0; i < c; ++i) n_pow *= n;
  require(size > n_pow, ErrorKind::CertificateFailure, "2^(cm) <= n^c");
  BoundRow row{n, spec.designed_distance,
               exact_bound(BoundKind::Lower, "cyclic", std::move(size),
                           "m=" + std::to_string(m) + " c=" + std::to_string(c) + "; 2^(cm) > n^c")};
  return row;
}

std::vector<BoundRow> bound_table(std::int64_t n, std::int64_t d, int r_max) {
  check_pair(n, d);
  std::vector<BoundRow> rows;
  auto push = [&](BoundValue b) { rows.push_back(BoundRow{n, d, std::move(b)}); };
  if (2 * d <= n) {
    push(gv_lower(n, d));
    push(mceliece_upper(n, d));
  }
  push(hamming_upper(n, d));
  push(singleton_upper(n, d));
  push(plotkin_upper(n, d));
  const std::int64_t limit = std::min<std::int64_t>(r_max, n / 2);
  std::optional<BestNewUpper> best;
  for (int r = 1; r <= limit; ++r) {
    try {
      BoundValue b = new_upper(n, d, r);
      if (!best || *b.value_exact < *best->bound.value_exact) best = BestNewUpper{b, r};
      push(std::move(b));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotApplicable) throw;
    }
  }
  if (best) {
    best->bound.label = "new_best";
    best->bound.condition = "r=" + std::to_string(best->r) + "; " + best->bound.condition;
    push(std::move(best->bound));
  }
  std::sort(rows.begin(), rows.end(),
            [](const BoundRow& a, const BoundRow& b) { return a.bound.label < b.bound.label; });
  return rows;
}

std::vector<BoundRow> regime_table(double a, const std::vector<std::int64_t>& n_list) {
  require(a > 0, ErrorKind::OutOfRange, "a must be positive");
  std::vector<BoundRow> rows;
  for (std::int64_t n : n_list) {
    require(n >= 2, ErrorKind::OutOfRange, "n must be at least 2");
    const double rn = static_cast<double>(n);
    const double sn = std::sqrt(rn);
    const double d_real = rn / 2.0 - a * sn;
    require(d_real >= 1.0, ErrorKind::OutOfRange, "d = n/2 - a sqrt(n) must be at least 1");
    const auto d = static_cast<std::int64_t>(std::ceil(d_real));
    const double delta = d_real / rn;
    const std::string tag = "a=" + format_real(a) + "; o()/O() terms dropped";
    std::vector<BoundValue> values;
    values.push_back(heuristic_bound(BoundKind::Lower, "gv_sqrt", -std::log2(normal_tail(2.0 * a)),
                                     tag + "; 1/Q(2a)"));
    values.push_back(heuristic_bound(BoundKind::Upper, "hamming_sqrt", (1.0 - binary_entropy(0.25)) * rn,
                                     tag + "; 2^((1-H2(1/4))n)"));
    values.push_back(heuristic_bound(BoundKind::Upper, "singleton_sqrt", rn / 2.0, tag + "; 2^(n/2)"));
    values.push_back(heuristic_bound(BoundKind::Upper, "plotkin_sqrt", std::log2(2.0 * rn) + 2.0 * a * sn,
                                     tag + "; 2n 2^(2a sqrt n)"));
    values.push_back(heuristic_bound(BoundKind::Upper, "eb_sqrt", 3.0 * std::log2(rn) + a * sn / std::numbers::ln2,
                                     tag + "; n^3 2^(a sqrt(n)/ln 2)"));
    values.push_back(heuristic_bound(BoundKind::Upper, "mrrw_sqrt",
                                     rn * binary_entropy(0.5 - std::sqrt(delta * (1.0 - delta))),
                                     tag + "; 2^(n H2(1/2 - sqrt(delta(1-delta))))"));
    if (2 * d < n) {
      BoundValue corollary = plotkin_upper(n, d);
      corollary.label = "plotkin_corollary";
      values.push_back(std::move(corollary));
    }
    std::sort(values.begin(), values.end(), [](const BoundValue& x, const BoundValue& y) { return x.label < y.label; });
    for (auto& v : values) rows.push_back(BoundRow{n, d, std::move(v)});
  }
  return rows;
}

std::vector<RmReference> rm_reference(int m) {
  require(m >= 2 && m <= 30, ErrorKind::InvalidParameters, "m must lie in [2, 30]");
  const std::int64_t n = std::int64_t{1} << m;
  return {
      {"RM(m,1)", n, m + 1, n / 2},
      {"RM(m,2)", n, 1 + m + m * (m - 1) / 2, n / 4},
  };
}

}  // namespace hdc
