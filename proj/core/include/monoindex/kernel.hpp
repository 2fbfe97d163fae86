#pragma once

#include <cstddef>
#include <vector>

#include "monoindex/isotonic.hpp"

namespace monoindex {

// Symmetric kernels on [-1, 1] integrating to one.
enum class KernelKind { epanechnikov, triweight };

double kernel_value(KernelKind k, double v);

struct Bandwidth {
  double h;
  explicit Bandwidth(double h_);
};

// Positions and sizes of the positive level increments of a step function.
struct StepJumps {
  std::vector<double> pos;
  std::vector<double> size;
};

StepJumps extract_jumps(const MonotoneStepFunction& f);

// Kernel-smoothed derivative of the step function at u:
//   (1/h) sum_j K((u - tau_j)/h) * delta_j
// over the jumps (tau_j, delta_j).  Nonnegative everywhere.
double smoothed_derivative(const StepJumps& jumps, KernelKind k, Bandwidth h,
                           double u);
double smoothed_derivative(const MonotoneStepFunction& f, KernelKind k,
                           Bandwidth h, double u);

// h = c * range * n^(-1/7); range is the extent of the projected data.
Bandwidth default_bandwidth(std::size_t n, double range, double c = 0.5);

}  // namespace monoindex
