#include "twisteq/fitting.hpp"

#include <cmath>
#include <stdexcept>

namespace twisteq {

LineFit fit_line(const std::vector<double>& xs, const std::vector<double>& ys) {
  if (xs.size() != ys.size() || xs.size() < 2) {
    throw std::invalid_argument("line fit needs at least two points");
  }
  const double n = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  const double det = n * sxx - sx * sx;
  if (det == 0.0) throw std::invalid_argument("degenerate line fit");
  LineFit f;
  f.slope = (n * sxy - sx * sy) / det;
  f.intercept = (sy - f.slope * sx) / n;
  return f;
}

LineFit fit_loglog(const std::vector<double>& xs, const std::vector<double>& ys) {
  std::vector<double> lx(xs.size()), ly(ys.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i] <= 0.0 || ys[i] <= 0.0) {
      throw std::invalid_argument("log-log fit needs positive data");
    }
    lx[i] = std::log(xs[i]);
    ly[i] = std::log(ys[i]);
  }
  return fit_line(lx, ly);
}

double fit_log_constant(const std::vector<double>& ys) {
  if (ys.empty()) throw std::invalid_argument("constant fit needs data");
  double acc = 0.0;
  for (double y : ys) {
    if (y <= 0.0) throw std::invalid_argument("constant log fit needs positive data");
    acc += std::log(y);
  }
  return std::exp(acc / static_cast<double>(ys.size()));
}

}  // namespace twisteq
