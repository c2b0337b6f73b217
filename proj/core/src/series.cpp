#include "lilrates/series.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "lilrates/errors.hpp"
#include "lilrates/quadrature.hpp"
#include "lilrates/special_functions.hpp"

namespace lilrates {

std::string to_string(DriftSchedule::Kind k) {
  switch (k) {
    case DriftSchedule::Kind::Zero: return "zero";
    case DriftSchedule::Kind::Canonical: return "canonical";
    case DriftSchedule::Kind::Bounded: return "bounded";
  }
  return "?";
}

std::string to_string(Regime r) { return r == Regime::Thm1 ? "thm1" : "thm2"; }

double SeriesSpec::critical_epsilon() const {
  return regime == Regime::Thm1 ? std::sqrt(1.0 + weights.a) : 0.0;
}

void SeriesSpec::validate() const {
  if (regime == Regime::Thm1) {
    if (!(weights.a > -1.0) || !std::isfinite(weights.a))
      throw std::domain_error("SeriesSpec: first regime requires a > -1");
    if (!(weights.b > -0.5) || !std::isfinite(weights.b))
      throw std::domain_error("SeriesSpec: first regime requires b > -1/2");
  } else {
    if (!(weights.b > -1.0) || !std::isfinite(weights.b))
      throw std::domain_error("SeriesSpec: second regime requires b > -1");
  }
  if (!(sigma > 0.0) || !std::isfinite(sigma))
    throw std::domain_error("SeriesSpec: sigma must be positive and finite");
  if (!std::isfinite(drift.coefficient()))
    throw std::domain_error("SeriesSpec: drift coefficient must be finite");
}

namespace {

// log n and loglog n for an integer index, paper convention.
inline void paper_logs(std::int64_t n, double& l, double& u) {
  if (n < 3) {
    l = 1.0;
    u = 1.0;
    return;
  }
  l = std::log(static_cast<double>(n));
  u = l < std::numbers::e ? 1.0 : std::log(l);
}

inline double pow_or_skip(double x, double e) {
  if (e == 0.0) return 1.0;
  if (e == 1.0) return x;
  return std::pow(x, e);
}

struct TermEvaluator {
  const SeriesSpec& spec;
  double epsilon;
  double model_tol;

  double weight_lu(std::int64_t n, double l, double u) const {
    if (spec.regime == Regime::Thm1)
      return pow_or_skip(l, spec.weights.a) * pow_or_skip(u, spec.weights.b) /
             static_cast<double>(n);
    return pow_or_skip(u, spec.weights.b) / (static_cast<double>(n) * l);
  }

  // Threshold handed to an analytic model; sigma cancels.
  double threshold_analytic(double u) const {
    return std::sqrt(2.0 * u) * (epsilon + spec.drift.value(u));
  }

  // Threshold handed to an empirical table, in the walk's own units.
  double threshold_raw(std::int64_t n, double u) const {
    return spec.sigma * std::sqrt(2.0 * static_cast<double>(n) * u) *
           (epsilon + spec.drift.value(u));
  }

  double tail_at(std::int64_t n, double u) const {
    if (spec.model.kind() == TailKind::EmpiricalMC)
      return spec.model.tail(threshold_raw(n, u));
    const double x = threshold_analytic(u);
    if (x <= 0.0) return 1.0;
    if (spec.model.kind() == TailKind::AbsNormal) return abs_normal_tail(x);
    return sup_wiener_tail(x, model_tol);
  }

  double term(std::int64_t n) const {
    double l, u;
    paper_logs(n, l, u);
    return weight_lu(n, l, u) * tail_at(n, u);
  }

  // log of the continuous-x integrand in u = loglog x coordinates:
  //   first regime:  exp((a+1) u) u^b T(theta(u))
  //   second regime: u^b T(theta(u))
  // Analytic models only; safe far past double underflow of T.
  double log_integrand_u(double u) const {
    double lg = spec.regime == Regime::Thm1
                    ? (spec.weights.a + 1.0) * u + spec.weights.b * std::log(u)
                    : spec.weights.b * std::log(u);
    const double x = threshold_analytic(u);
    if (x > 0.0) lg += spec.model.log_tail(x);
    return lg;
  }

  double integrand_u(double u) const {
    const double lg = log_integrand_u(u);
    if (lg < -745.0) return 0.0;
    return std::exp(std::min(lg, 709.0));
  }

  // Continuous-n series term f(x) at x = exp(exp(u)); used to sample the
  // total variation behind the sum-vs-integral bound.
  double continuous_term(double u) const {
    double lg = spec.regime == Regime::Thm1
                    ? spec.weights.a * u + spec.weights.b * std::log(u) - std::exp(u)
                    : spec.weights.b * std::log(u) - std::exp(u) - u;
    const double x = threshold_analytic(u);
    if (x > 0.0) lg += spec.model.log_tail(x);
    if (lg < -745.0) return 0.0;
    return std::exp(std::min(lg, 709.0));
  }
};

struct DecayBound {
  double c = 0.0;       // constant in  c * u^s * exp(-lambda u)
  double s = 0.0;       // b - 1/2
  double lambda = 0.0;  // eps^2 - (1+a)  or  eps^2
  double u_min = 1.0;   // region where the bound is valid

  // integral over [U, inf), valid for U >= max(u_min, 2s/lambda)
  double tail_integral(double U) const {
    return c * (2.0 / lambda) * std::pow(U, s) * std::exp(-lambda * U);
  }
  double valid_from() const {
    return std::max(u_min, s > 0.0 ? 2.0 * s / lambda : 0.0);
  }
};

// T(theta(u)) <= 4 Q(theta) <= 4 pdf(theta)/theta together with
// theta(u)^2/2 = eps^2 u + 2 eps c + c^2/u >= eps^2 u + 2 eps c gives a
// pure-exponential majorant of the u-space integrand.
DecayBound integrand_bound(const SeriesSpec& spec, double epsilon, double u0) {
  DecayBound bd;
  const double c = spec.drift.coefficient();
  bd.lambda = epsilon * epsilon -
              (spec.regime == Regime::Thm1 ? spec.weights.a + 1.0 : 0.0);
  bd.s = spec.weights.b - 0.5;
  bd.u_min = u0;
  double kappa = epsilon;
  if (c < 0.0) {
    // keep eps + c/u >= eps/2 on the bounded region
    bd.u_min = std::max(bd.u_min, 2.0 * std::abs(c) / epsilon);
    kappa = 0.5 * epsilon;
  }
  bd.c = 2.0 / (kappa * std::sqrt(std::numbers::pi)) *
         std::exp(-2.0 * epsilon * c);
  return bd;
}

}  // namespace

double weight(std::int64_t n, const SeriesSpec& spec) {
  if (n < 1) throw std::domain_error("weight: n >= 1 required");
  double l, u;
  paper_logs(n, l, u);
  TermEvaluator ev{spec, 0.0, 0.0};
  return ev.weight_lu(n, l, u);
}

double series_term(std::int64_t n, const SeriesSpec& spec, double epsilon) {
  if (n < 1) throw std::domain_error("series_term: n >= 1 required");
  TermEvaluator ev{spec, epsilon, 1e-13};
  return ev.term(n);
}

SeriesResult evaluate_series(const SeriesSpec& spec, double epsilon, double tol,
                             const EngineOptions& options) {
  spec.validate();
  if (!(tol > 0.0)) throw std::domain_error("evaluate_series: tol > 0 required");
  if (!(epsilon > 0.0) || !std::isfinite(epsilon))
    throw std::domain_error("evaluate_series: epsilon > 0 required");
  if (spec.regime == Regime::Thm1 &&
      !(epsilon * epsilon > 1.0 + spec.weights.a)) {
    throw std::domain_error(
        "evaluate_series: divergent parameters, first regime needs "
        "epsilon^2 > 1 + a (epsilon=" + std::to_string(epsilon) + ", a=" +
        std::to_string(spec.weights.a) + ")");
  }
  const std::int64_t n0 = options.splice;
  if (n0 < 16) throw std::domain_error("evaluate_series: splice too small");

  TermEvaluator ev{spec, epsilon, options.model_tol};
  SeriesResult out;
  out.head_terms = n0;

  // Exact head: Kahan-compensated direct summation.
  {
    double sum = 0.0, carry = 0.0;
    for (std::int64_t n = 1; n <= n0; ++n) {
      const double y = ev.term(n) - carry;
      const double t = sum + y;
      carry = (t - sum) - y;
      sum = t;
    }
    out.head_sum = sum;
  }

  const double u0 = loglog(static_cast<double>(n0) + 0.5);

  if (spec.model.kind() == TailKind::EmpiricalMC) {
    // Only the zero-tail-beyond-support case is evaluable here; anything
    // else belongs to assemble_empirical_series.
    double l, u;
    paper_logs(n0 + 1, l, u);
    const double support = spec.model.table()->support_end();
    if (ev.threshold_raw(n0 + 1, u) >= support) {
      out.value = out.head_sum;
      out.error_bound = options.model_tol * std::abs(out.head_sum);
      return out;
    }
    throw std::invalid_argument(
        "evaluate_series: EmpiricalMC tail extends beyond the splice; use "
        "assemble_empirical_series");
  }

  const DecayBound bound = integrand_bound(spec, epsilon, u0);

  // Sum-vs-integral certificate: the integer-term at the splice plus twice
  // any sampled rise of the continuous term (which is expected to fall
  // monotonically in n; the drift can carve a shallow bump at small u).
  double splice_err = ev.term(n0);
  {
    const double u_hi = 6.5;  // x = exp(exp(6.5)) ~ 1e288; terms below are 0
    const int samples = 256;
    double prev = ev.continuous_term(u0);
    double rise = 0.0;
    for (int i = 1; i <= samples; ++i) {
      const double u = u0 + (u_hi - u0) * i / samples;
      const double cur = ev.continuous_term(u);
      if (cur > prev) rise += cur - prev;
      prev = cur;
    }
    splice_err += 2.0 * rise;
  }

  const double head_scale = std::abs(out.head_sum);
  auto integrand = [&ev](double u) { return ev.integrand_u(u); };

  for (int attempt = 0;; ++attempt) {
    const double shrink = std::pow(10.0, -attempt);
    const double rel_target = 0.25 * tol * shrink;

    // Cutoff: extend until the analytic bound on the omitted mass is far
    // below the requested relative tolerance of whatever has been seen.
    double u_max = std::max(bound.valid_from(), u0) + 1.0;
    const double cut_scale = std::max(head_scale, 1e-300);
    while (bound.tail_integral(u_max) >
               0.1 * rel_target * std::max(cut_scale, out.tail_estimate) &&
           u_max < 1e7) {
      u_max *= 1.5;
    }
    const double cutoff_err = bound.tail_integral(u_max);

    std::vector<double> seeds;
    for (double d = 1.0; u0 + d < u_max; d *= 2.0) seeds.push_back(u0 + d);
    if (bound.s > 0.0) {
      const double peak = bound.s / bound.lambda;
      if (peak > u0 && peak < u_max) {
        seeds.push_back(peak);
        seeds.push_back(0.5 * peak);
      }
    }

    const QuadResult quad = integrate_adaptive(
        integrand, u0, u_max, rel_target * cut_scale, rel_target,
        options.max_panels << attempt, seeds);

    out.tail_estimate = quad.value;
    out.value = out.head_sum + out.tail_estimate;
    const double eval_slop = options.model_tol * std::abs(out.value);
    out.breakdown.quadrature = quad.error + eval_slop;
    out.breakdown.cutoff = cutoff_err;
    out.breakdown.sum_vs_integral = splice_err;
    out.error_bound = out.breakdown.quadrature + out.breakdown.cutoff +
                      out.breakdown.sum_vs_integral;

    if (out.error_bound <= tol * std::max(std::abs(out.value), 1e-300)) break;
    if (attempt >= 2) {
      throw tolerance_error(
          "evaluate_series: certified error bound " +
          std::to_string(out.error_bound) + " exceeds tol*value " +
          std::to_string(tol * std::abs(out.value)) +
          " after refinement limits");
    }
  }
  return out;
}

double normalized_prefactor(const SeriesSpec& spec, double epsilon) {
  if (spec.regime == Regime::Thm1) {
    const double gap = epsilon * epsilon - spec.weights.a - 1.0;
    return std::pow(gap, spec.weights.b + 0.5);
  }
  return std::pow(epsilon, 2.0 * (spec.weights.b + 1.0));
}

double normalized_value(const SeriesSpec& spec, double epsilon, double tol,
                        const EngineOptions& options) {
  return normalized_prefactor(spec, epsilon) *
         evaluate_series(spec, epsilon, tol, options).value;
}

double limit_constant(const SeriesSpec& spec) {
  if (spec.regime == Regime::Thm1)
    return thm1_constant(spec.weights.a, spec.weights.b, spec.drift.tau(),
                         spec.statistic());
  return thm2_constant(spec.weights.b, spec.statistic());
}

std::vector<SweepRow> epsilon_sweep(const SeriesSpec& spec,
                                    std::span<const double> grid, double tol,
                                    const EngineOptions& options) {
  spec.validate();
  std::vector<SweepRow> rows;
  if (grid.empty()) return rows;
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    if (!(grid[i] > grid[i + 1]))
      throw std::invalid_argument(
          "epsilon_sweep: grid must be strictly decreasing toward the "
          "critical value");
  }
  const double critical = spec.critical_epsilon();
  bool any_above = false;
  for (double e : grid) any_above = any_above || e > critical;
  if (!any_above)
    throw std::domain_error(
        "epsilon_sweep: grid lies entirely at or below the critical value " +
        std::to_string(critical));

  const double limit = limit_constant(spec);
  rows.reserve(grid.size());
  for (double eps : grid) {
    SweepRow row;
    row.epsilon = eps;
    row.limit = limit;
    try {
      const SeriesResult r = evaluate_series(spec, eps, tol, options);
      const double pref = normalized_prefactor(spec, eps);
      row.series = r.value;
      row.normalized = pref * r.value;
      row.ratio = row.normalized / limit;
      row.error_bound = pref * r.error_bound;
    } catch (const std::exception& e) {
      row.failed = true;
      row.message = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace lilrates
