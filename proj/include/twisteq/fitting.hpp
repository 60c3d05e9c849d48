#pragma once

#include <vector>

namespace twisteq {

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
};

// Least-squares line through (x_i, y_i).
LineFit fit_line(const std::vector<double>& xs, const std::vector<double>& ys);

// Least-squares line through (log x_i, log y_i); requires positive data.
LineFit fit_loglog(const std::vector<double>& xs, const std::vector<double>& ys);

// exp(mean(log y_i)): the constant-fit of log y, i.e. the geometric mean.
double fit_log_constant(const std::vector<double>& ys);

}  // namespace twisteq
