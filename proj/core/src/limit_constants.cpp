#include "lilrates/limit_constants.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "lilrates/special_functions.hpp"

namespace lilrates {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::domain_error(msg);
}

}  // namespace

double thm1_constant(double a, double b, double tau, Statistic statistic) {
  require(std::isfinite(a) && a > -1.0, "thm1_constant: requires a > -1");
  require(std::isfinite(b) && b > -0.5, "thm1_constant: requires b > -1/2");
  require(std::isfinite(tau), "thm1_constant: tau must be finite");
  const double abs_value = std::sqrt(1.0 / (std::numbers::pi * (a + 1.0))) *
                           std::exp(-2.0 * tau * std::sqrt(1.0 + a)) *
                           gamma_fn(b + 0.5);
  return statistic == Statistic::Max ? 2.0 * abs_value : abs_value;
}

double thm2_constant(double b, Statistic statistic, double series_tol) {
  require(std::isfinite(b) && b > -1.0, "thm2_constant: requires b > -1");
  const double abs_value =
      gamma_fn(b + 1.5) / ((b + 1.0) * std::sqrt(std::numbers::pi));
  if (statistic == Statistic::Abs) return abs_value;
  return 2.0 * abs_value * alt_power_series(b, series_tol);
}

double classical_b_epsilon(double eps_b, double sigma) {
  require(sigma > 0.0 && std::isfinite(sigma), "classical_b_epsilon: sigma > 0");
  return eps_b / (sigma * std::numbers::sqrt2);
}

double classical_b_limit(double sigma) {
  require(sigma > 0.0 && std::isfinite(sigma), "classical_b_limit: sigma > 0");
  return 2.0 * sigma * sigma * thm2_constant(0.0, Statistic::Abs);
}

}  // namespace lilrates
