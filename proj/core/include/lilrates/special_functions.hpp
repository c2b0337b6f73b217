#pragma once

#include <cstdint>

namespace lilrates {

// Logarithms under the convention log x = ln(max(x, e)), so that
// log x >= 1 and loglog x >= 1 for every x > 0.  All weights, thresholds
// and moment functionals in this library use these, never the bare ln.
double log_e(double x);
double loglog(double x);

// phi(n) = sqrt(2 n loglog n), the LIL normalizer.
double phi(double n);

double normal_pdf(double x);

// Q(x) = P(N >= x) for a standard normal N.  Underflows to 0 for
// x > ~38.6; that is documented behavior, not an error.
double normal_upper_tail(double x);

// log Q(x), stable for large x (asymptotic expansion past the erfc
// underflow range).  Requires x >= 0.
double log_normal_upper_tail(double x);

// P(|N| >= x) = 2 Q(x) for x >= 0.
double abs_normal_tail(double x);

// P(sup_{0<=s<=1} |W(s)| >= x) via the reflection series
//   4 * sum_{k>=0} (-1)^k Q((2k+1) x).
// Consecutive partial sums bracket the limit, so the truncation error is
// at most the first omitted term.  Terms stop once the next one drops
// below tol * (current partial sum) or below 1e-300, capped at 1e6 terms.
// The series is only conditionally meaningful at x = 0; the value 1 is
// returned there (distribution-tail limit).
double sup_wiener_tail(double x, double tol = 1e-13);

// Number of series terms sup_wiener_tail(x, tol) consumes; exposed for
// diagnostics and tests of the bracketing property.
std::int64_t sup_wiener_tail_terms(double x, double tol = 1e-13);

// log of sup_wiener_tail, stable for large x where the series head
// 4 Q(x) dominates all later terms.
double log_sup_wiener_tail(double x);

// Gamma(z) for z > 0.
double gamma_fn(double z);

// sum_{k>=0} (-1)^k / (2k+1)^(2b+2) for b > -1, with truncation error
// at most tol.  Direct alternating summation when the terms decay fast
// enough to certify tol by bracketing within the term cap; otherwise the
// Cohen-Rodriguez Villegas-Zagier acceleration (the coefficients are a
// Hausdorff moment sequence, so the geometric error bound applies).
double alt_power_series(double b, double tol = 1e-13);

}  // namespace lilrates
