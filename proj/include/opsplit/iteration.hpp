#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "opsplit/splitting.hpp"

namespace opsplit {

// Orbit x_{n+1} = T_{A_g,B_g} x_n with its shadow sequence J_{A_g} x_n.
// residuals[k] = |x_{k+1} - x_k|, so there is one residual per step.
struct IterationTrace {
  std::vector<Point> iterates;
  std::vector<Point> shadows;
  std::vector<double> residuals;
  bool converged = false;
  double rate = 0.0;
};

// Stops when a residual drops to stop_tol or after max_iters steps.
IterationTrace iterate_aac(const Splitting& split, const Point& x0, int max_iters, double stop_tol);

// Geometric mean of consecutive residual ratios over the last `window`
// steps; zero denominators are skipped. 0 when no ratio is available.
double estimate_rate(std::span<const double> residuals, int window = 10);

// CSV: n, x_0.., shadow_0.., residual |x_n - x_{n-1}| (empty on row 0).
void write_trace_csv(std::ostream& os, const IterationTrace& trace);

}  // namespace opsplit
