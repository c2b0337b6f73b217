#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lilrates/limit_constants.hpp"
#include "lilrates/tail_model.hpp"

namespace lilrates {

// Threshold perturbation a_n with a_n * loglog n -> tau.  Canonical(tau)
// and Bounded(c) both evaluate to coeff / loglog n -- the first names the
// drift limit fed into the first-regime constant, the second the
// O(1/loglog n) family admitted by the second regime.
class DriftSchedule {
 public:
  enum class Kind { Zero, Canonical, Bounded };

  static DriftSchedule zero() { return DriftSchedule(Kind::Zero, 0.0); }
  static DriftSchedule canonical(double tau) { return DriftSchedule(Kind::Canonical, tau); }
  static DriftSchedule bounded(double c) { return DriftSchedule(Kind::Bounded, c); }

  // a_n evaluated through loglog n (>= 1 always).
  double value(double loglog_n) const {
    return kind_ == Kind::Zero ? 0.0 : coeff_ / loglog_n;
  }
  // The limit of a_n * loglog n; exact for every member of this family.
  double tau() const { return coeff_; }
  Kind kind() const { return kind_; }
  double coefficient() const { return coeff_; }

 private:
  DriftSchedule(Kind kind, double coeff) : kind_(kind), coeff_(coeff) {}
  Kind kind_;
  double coeff_;
};

std::string to_string(DriftSchedule::Kind k);

enum class Regime { Thm1, Thm2 };

std::string to_string(Regime r);

// Full description of one weighted tail-probability series
//   S(eps) = sum_n w(n) P{Z >= x_n(eps)}.
struct SeriesSpec {
  Regime regime = Regime::Thm1;
  WeightExponents weights;
  DriftSchedule drift = DriftSchedule::zero();
  double sigma = 1.0;
  TailModel model = TailModel::abs_normal();

  // sqrt(1+a) in the first regime, 0 in the second.
  double critical_epsilon() const;
  Statistic statistic() const { return model.statistic(); }
  // Throws std::domain_error on exponent/sigma violations.
  void validate() const;
};

struct ErrorBreakdown {
  double quadrature = 0.0;       // accumulated panel estimates + cutoff
  double sum_vs_integral = 0.0;  // splice term + sampled total-variation rise
  double cutoff = 0.0;           // analytically bounded mass beyond u_max
};

struct SeriesResult {
  double value = 0.0;
  std::int64_t head_terms = 0;
  double head_sum = 0.0;
  double tail_estimate = 0.0;
  double error_bound = 0.0;
  ErrorBreakdown breakdown;
};

struct EngineOptions {
  std::int64_t splice = 1'000'000;  // head/tail split point N0
  double model_tol = 1e-13;         // per-term tail evaluation tolerance
  int max_panels = 20'000;
};

// Weight of term n under the regime's paper-convention logs; finite and
// positive for every n >= 1.
double weight(std::int64_t n, const SeriesSpec& spec);

// One series term w(n) * tail(threshold(n)).
double series_term(std::int64_t n, const SeriesSpec& spec, double epsilon);

// S(eps) as head (exact summation up to the splice) plus an adaptive
// quadrature of the integral representation in u = loglog x, with a
// certified error bound (quadrature + sum-vs-integral + cutoff).
// Analytic models only; an EmpiricalMC model is accepted solely when its
// bounded support is exhausted before the splice (zero tail beyond).
// tol is relative to the returned value.
SeriesResult evaluate_series(const SeriesSpec& spec, double epsilon, double tol,
                             const EngineOptions& options = {});

// (eps^2 - a - 1)^(b+1/2) * S(eps)  [first regime]
// eps^(2(b+1)) * S(eps)             [second regime]
double normalized_prefactor(const SeriesSpec& spec, double epsilon);
double normalized_value(const SeriesSpec& spec, double epsilon, double tol,
                        const EngineOptions& options = {});

// The limit constant the normalized series converges to.
double limit_constant(const SeriesSpec& spec);

struct SweepRow {
  double epsilon = 0.0;
  double series = 0.0;
  double normalized = 0.0;
  double limit = 0.0;
  double ratio = 0.0;
  double error_bound = 0.0;  // on the normalized value
  bool failed = false;
  std::string message;
};

// One row per epsilon, grid sorted decreasing toward the critical value.
// A row that fails (divergent parameter, tolerance) is marked without
// aborting the sweep.  Throws std::domain_error if no grid point lies
// above the critical value.
std::vector<SweepRow> epsilon_sweep(const SeriesSpec& spec,
                                    std::span<const double> grid, double tol,
                                    const EngineOptions& options = {});

}  // namespace lilrates
