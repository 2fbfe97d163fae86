#pragma once

#include <functional>

namespace monoindex {

struct GoldenResult {
  double x;         // best evaluated point
  double fx;        // its function value
  int evaluations;  // number of calls to f
};

// Golden-section search on [lo, hi] down to interval width tol.  Returns
// the best point actually evaluated (the objectives here are step
// functions, so the reported value is exact at the reported point).
// Deterministic; ties move the lower bracket.
GoldenResult golden_section_minimize(const std::function<double(double)>& f,
                                     double lo, double hi, double tol);

}  // namespace monoindex
