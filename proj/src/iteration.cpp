#include "opsplit/iteration.hpp"

#include <cmath>
#include <ostream>

#include "opsplit/errors.hpp"
#include "opsplit/report_io.hpp"

namespace opsplit {

IterationTrace iterate_aac(const Splitting& split, const Point& x0, int max_iters, double stop_tol) {
  if (max_iters < 1) throw InvalidParameter("max_iters must be at least 1");
  if (!(stop_tol > 0.0)) throw InvalidParameter("stop_tol must be positive");
  require_dim(x0, split.dim(), "starting point");
  const Operator& shadow = split.side_a().jg;

  IterationTrace trace;
  trace.iterates.push_back(x0);
  trace.shadows.push_back(shadow(x0));
  for (int k = 0; k < max_iters; ++k) {
    Point next = split.aac(Order::kAB, TForm::kDefinition, trace.iterates.back());
    if (!all_finite(next)) throw NumericalError("iteration produced a non-finite iterate");
    const double residual = (next - trace.iterates.back()).norm();
    trace.shadows.push_back(shadow(next));
    trace.iterates.push_back(std::move(next));
    trace.residuals.push_back(residual);
    if (residual <= stop_tol) {
      trace.converged = true;
      break;
    }
  }
  trace.rate = estimate_rate(trace.residuals);
  return trace;
}

double estimate_rate(std::span<const double> residuals, int window) {
  if (window < 1 || residuals.size() < 2) return 0.0;
  const std::size_t first =
      residuals.size() > static_cast<std::size_t>(window) ? residuals.size() - window - 1 : 0;
  double log_sum = 0.0;
  int count = 0;
  for (std::size_t k = first; k + 1 < residuals.size(); ++k) {
    if (residuals[k] == 0.0) continue;
    const double ratio = residuals[k + 1] / residuals[k];
    if (ratio <= 0.0) continue;
    log_sum += std::log(ratio);
    ++count;
  }
  return count == 0 ? 0.0 : std::exp(log_sum / count);
}

void write_trace_csv(std::ostream& os, const IterationTrace& trace) {
  const Index n = trace.iterates.empty() ? 0 : trace.iterates.front().size();
  os << "n";
  for (Index i = 0; i < n; ++i) os << ",x" << i;
  for (Index i = 0; i < n; ++i) os << ",shadow" << i;
  os << ",residual\n";
  for (std::size_t k = 0; k < trace.iterates.size(); ++k) {
    os << k;
    for (Index i = 0; i < n; ++i) os << ',' << format_number(trace.iterates[k][i]);
    for (Index i = 0; i < n; ++i) os << ',' << format_number(trace.shadows[k][i]);
    os << ',';
    if (k > 0) os << format_number(trace.residuals[k - 1]);
    os << '\n';
  }
}

}  // namespace opsplit
