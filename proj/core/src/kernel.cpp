#include "monoindex/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace monoindex {

Bandwidth::Bandwidth(double h_) : h(h_) {
  if (!std::isfinite(h) || h <= 0.0)
    throw std::invalid_argument("bandwidth must be positive");
}

double kernel_value(KernelKind k, double v) {
  const double u = v * v;
  if (u >= 1.0) return 0.0;
  switch (k) {
    case KernelKind::epanechnikov:
      return 0.75 * (1.0 - u);
    case KernelKind::triweight: {
      const double w = 1.0 - u;
      return (35.0 / 32.0) * w * w * w;
    }
  }
  return 0.0;
}

StepJumps extract_jumps(const MonotoneStepFunction& f) {
  StepJumps jumps;
  for (std::size_t j = 1; j < f.knots.size(); ++j) {
    const double delta = f.levels[j] - f.levels[j - 1];
    if (delta > 0.0) {
      jumps.pos.push_back(f.knots[j]);
      jumps.size.push_back(delta);
    }
  }
  return jumps;
}

double smoothed_derivative(const StepJumps& jumps, KernelKind k, Bandwidth h,
                           double u) {
  if (!std::isfinite(u)) throw std::invalid_argument("nonfinite input");
  // Only jumps within the kernel support [u-h, u+h] contribute.
  auto lo = std::lower_bound(jumps.pos.begin(), jumps.pos.end(), u - h.h);
  auto hi = std::upper_bound(jumps.pos.begin(), jumps.pos.end(), u + h.h);
  double sum = 0.0;
  for (auto it = lo; it != hi; ++it) {
    const std::size_t j = static_cast<std::size_t>(it - jumps.pos.begin());
    sum += kernel_value(k, (u - *it) / h.h) * jumps.size[j];
  }
  return sum / h.h;
}

double smoothed_derivative(const MonotoneStepFunction& f, KernelKind k,
                           Bandwidth h, double u) {
  return smoothed_derivative(extract_jumps(f), k, h, u);
}

Bandwidth default_bandwidth(std::size_t n, double range, double c) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  if (!(range > 0.0)) throw std::invalid_argument("range must be positive");
  return Bandwidth(c * range * std::pow(static_cast<double>(n), -1.0 / 7.0));
}

}  // namespace monoindex
