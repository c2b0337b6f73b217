#include "lilrates/special_functions.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace lilrates {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr double kInvSqrt2Pi = 0.39894228040143267794;
constexpr double kLogSqrt2Pi = 0.91893853320467274178;

// Past this point erfc is deep in the subnormal range; switch log Q to
// the Laplace asymptotic expansion.
constexpr double kLogTailSwitch = 36.0;

[[noreturn]] void domain_fail(const char* fn, double x) {
  throw std::domain_error(std::string(fn) + ": argument " + std::to_string(x) +
                          " outside domain");
}

}  // namespace

double log_e(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) domain_fail("log_e", x);
  return std::log(std::max(x, std::numbers::e));
}

double loglog(double x) { return log_e(log_e(x)); }

double phi(double n) {
  if (!(n > 0.0) || !std::isfinite(n)) domain_fail("phi", n);
  return std::sqrt(2.0 * n * loglog(n));
}

double normal_pdf(double x) {
  return kInvSqrt2Pi * std::exp(-0.5 * x * x);
}

double normal_upper_tail(double x) {
  if (!std::isfinite(x)) domain_fail("normal_upper_tail", x);
  return 0.5 * std::erfc(x * kInvSqrt2);
}

double log_normal_upper_tail(double x) {
  if (!(x >= 0.0)) domain_fail("log_normal_upper_tail", x);
  if (x < kLogTailSwitch) return std::log(normal_upper_tail(x));
  // Q(x) = pdf(x)/x * (1 - 1/x^2 + 3/x^4 - 15/x^6 + 105/x^8 - ...);
  // at x = 36 the first omitted term is below 1e-15 relative.
  const double r = 1.0 / (x * x);
  const double series = 1.0 + r * (-1.0 + r * (3.0 + r * (-15.0 + r * 105.0)));
  return -0.5 * x * x - std::log(x) - kLogSqrt2Pi + std::log(series);
}

double abs_normal_tail(double x) {
  if (!(x >= 0.0)) domain_fail("abs_normal_tail", x);
  return 2.0 * normal_upper_tail(x);
}

namespace {

constexpr std::int64_t kSupWienerTermCap = 1'000'000;

double sup_wiener_series(double x, double tol, std::int64_t* terms_used) {
  double sum = 0.0;
  std::int64_t k = 0;
  for (; k < kSupWienerTermCap; ++k) {
    const double term = 4.0 * normal_upper_tail(static_cast<double>(2 * k + 1) * x);
    sum += (k % 2 == 0) ? term : -term;
    const double next = 4.0 * normal_upper_tail(static_cast<double>(2 * k + 3) * x);
    if (next < tol * std::abs(sum) || next < 1e-300) {
      ++k;
      break;
    }
  }
  if (terms_used != nullptr) *terms_used = k;
  // Cancellation can push the partial sum a hair outside [0, 1].
  return std::min(1.0, std::max(0.0, sum));
}

}  // namespace

double sup_wiener_tail(double x, double tol) {
  if (!(x >= 0.0) || !std::isfinite(x)) domain_fail("sup_wiener_tail", x);
  if (!(tol > 0.0)) domain_fail("sup_wiener_tail(tol)", tol);
  if (x == 0.0) return 1.0;
  return sup_wiener_series(x, tol, nullptr);
}

std::int64_t sup_wiener_tail_terms(double x, double tol) {
  if (!(x > 0.0) || !std::isfinite(x)) domain_fail("sup_wiener_tail_terms", x);
  std::int64_t n = 0;
  sup_wiener_series(x, tol, &n);
  return n;
}

double log_sup_wiener_tail(double x) {
  if (!(x >= 0.0)) domain_fail("log_sup_wiener_tail", x);
  if (x == 0.0) return 0.0;
  if (x < kLogTailSwitch) {
    const double t = sup_wiener_tail(x, 1e-14);
    if (t > 0.0) return std::log(t);
  }
  // 4Q(x) - 4Q(3x) + ... = 4Q(x)(1 - Q(3x)/Q(x) + ...); the correction is
  // exp(-4x^2)-sized and invisible in double for x >= 36.
  return std::numbers::ln2 * 2.0 + log_normal_upper_tail(x);
}

double gamma_fn(double z) {
  if (!(z > 0.0) || !std::isfinite(z)) domain_fail("gamma_fn", z);
  return std::tgamma(z);
}

namespace {

// Cohen-Rodriguez Villegas-Zagier acceleration (Exp. Math. 9 (2000)) for
// sum (-1)^k a_k with a_k a Hausdorff moment sequence; relative error is
// about 2 * (3 + sqrt 8)^-n.
double cvz_alternating(double s, int n) {
  double d = std::pow(3.0 + std::sqrt(8.0), n);
  d = (d + 1.0 / d) / 2.0;
  double b = -1.0, c = -d, sum = 0.0;
  for (int k = 0; k < n; ++k) {
    c = b - c;
    sum += c * std::pow(static_cast<double>(2 * k + 1), -s);
    b = (k + n) * (k - n) * b / ((k + 0.5) * (k + 1.0));
  }
  return sum / d;
}

}  // namespace

double alt_power_series(double b, double tol) {
  if (!(b > -1.0) || !std::isfinite(b)) domain_fail("alt_power_series", b);
  if (!(tol > 0.0)) domain_fail("alt_power_series(tol)", tol);
  const double s = 2.0 * b + 2.0;
  // Terms decay like (2k+1)^-s; direct summation certifies tol once the
  // next term is below it.  Only worth it when that happens within the cap.
  constexpr std::int64_t kDirectCap = 2'000'000;
  const double needed = 0.5 * (std::pow(tol, -1.0 / s) - 1.0);
  if (needed < static_cast<double>(kDirectCap)) {
    double sum = 0.0;
    for (std::int64_t k = 0;; ++k) {
      const double term = std::pow(static_cast<double>(2 * k + 1), -s);
      sum += (k % 2 == 0) ? term : -term;
      if (std::pow(static_cast<double>(2 * k + 3), -s) < tol) return sum;
    }
  }
  const int n = static_cast<int>(std::ceil(std::log(4.0 / tol) * 0.5672963285532555)) + 4;
  return cvz_alternating(s, n);
}

}  // namespace lilrates
