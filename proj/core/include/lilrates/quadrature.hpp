#pragma once

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

namespace lilrates {

struct QuadResult {
  double value = 0.0;
  double error = 0.0;  // accumulated |K15 - G7| estimates
  bool converged = false;
  int panels = 0;
};

namespace detail {

// Gauss 7 / Kronrod 15 pair on [a, b]; err is the usual scaled difference.
template <class F>
double quad_g7k15(const F& f, double a, double b, double& err) {
  static const double nw[8][3] = {
      {0.000000000000000, 0.417959183673469, 0.209482141084728},
      {0.405845151377397, 0.381830050505119, 0.190350578064785},
      {0.741531185599394, 0.279705391489277, 0.140653259715525},
      {0.949107912342759, 0.129484966168870, 0.063092092629979},
      {0.207784955007898, 0.0, 0.204432940075298},
      {0.586087235467691, 0.0, 0.169004726639267},
      {0.864864423359769, 0.0, 0.104790010322250},
      {0.991455371120813, 0.0, 0.022935322010529}};

  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  const double y0 = f(mid);
  double g7 = nw[0][1] * y0;
  double k15 = nw[0][2] * y0;
  for (int i = 1; i < 8; ++i) {
    const double dx = half * nw[i][0];
    const double yi = f(mid + dx) + f(mid - dx);
    g7 += nw[i][1] * yi;
    k15 += nw[i][2] * yi;
  }
  g7 *= half;
  k15 *= half;

  const double diff = std::abs(g7 - k15);
  err = 200.0 * diff;
  err *= std::sqrt(std::max(err, 0.0));
  err = std::max(err, diff);
  return k15;
}

struct Panel {
  double a, b, value, error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

}  // namespace detail

// Globally adaptive quadrature: repeatedly bisect the worst panel until
// the accumulated error estimate meets abs_tol + rel_tol * |integral| or
// the panel budget runs out.  Initial panels may be supplied to seed the
// subdivision (useful for integrands living on several scales).
template <class F>
QuadResult integrate_adaptive(const F& f, double a, double b, double abs_tol,
                              double rel_tol, int max_panels = 4000,
                              const std::vector<double>& seed_points = {}) {
  QuadResult out;
  if (!(b > a)) {
    out.converged = true;
    return out;
  }
  std::vector<double> knots;
  knots.push_back(a);
  for (double p : seed_points)
    if (p > a && p < b) knots.push_back(p);
  knots.push_back(b);
  std::sort(knots.begin(), knots.end());

  std::priority_queue<detail::Panel> heap;
  double total = 0.0, total_err = 0.0;
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    double e = 0.0;
    const double v = detail::quad_g7k15(f, knots[i], knots[i + 1], e);
    heap.push({knots[i], knots[i + 1], v, e});
    total += v;
    total_err += e;
    ++out.panels;
  }

  auto goal = [&] { return abs_tol + rel_tol * std::abs(total); };
  while (total_err > goal() && out.panels < max_panels && !heap.empty()) {
    const detail::Panel worst = heap.top();
    heap.pop();
    total -= worst.value;
    total_err -= worst.error;
    const double mid = 0.5 * (worst.a + worst.b);
    for (const auto& [lo, hi] : {std::pair{worst.a, mid}, std::pair{mid, worst.b}}) {
      double e = 0.0;
      const double v = detail::quad_g7k15(f, lo, hi, e);
      heap.push({lo, hi, v, e});
      total += v;
      total_err += e;
    }
    ++out.panels;
  }

  out.value = total;
  out.error = total_err;
  out.converged = total_err <= goal();
  return out;
}

}  // namespace lilrates
