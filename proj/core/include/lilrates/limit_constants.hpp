#pragma once

#include "lilrates/tail_model.hpp"

namespace lilrates {

// The pair (a, b) parameterizing the series weights and limit constants.
// The first-regime weights (log n)^a (loglog n)^b / n need a > -1 and
// b > -1/2; the second-regime weights (loglog n)^b / (n log n) need b > -1
// and ignore a.
struct WeightExponents {
  double a = 0.0;
  double b = 0.0;
};

// Limit of the weighted-max series as epsilon decreases to sqrt(1+a):
//   2 sqrt(1/(pi (a+1))) exp(-2 tau sqrt(1+a)) Gamma(b + 1/2)
// for statistic Max, and exactly half of that for statistic Abs.
// tau is the limit of a_n(epsilon) loglog n.
double thm1_constant(double a, double b, double tau, Statistic statistic);

// Limit of the epsilon^(2(b+1))-normalized series as epsilon decreases
// to 0: Gamma(b + 3/2) / ((b+1) sqrt(pi)) for statistic Abs, and twice
// that times sum (-1)^k/(2k+1)^(2b+2) for statistic Max.
double thm2_constant(double b, Statistic statistic, double series_tol = 1e-13);

// The classical sigma^2 statement normalizes thresholds as
// eps_b * sqrt(n loglog n) instead of eps * sigma * phi(n); the two agree
// under eps_b = eps * sigma * sqrt(2).  These helpers convert rather than
// duplicating the constant with hidden unit mismatches.
double classical_b_epsilon(double eps_b, double sigma);  // -> eps
double classical_b_limit(double sigma);                  // = sigma^2

}  // namespace lilrates
