#pragma once

#include <cstdint>
#include <utility>
#include <variant>
#include <vector>

#include "monoindex/dataset.hpp"
#include "monoindex/isotonic.hpp"
#include "monoindex/kernel.hpp"
#include "monoindex/spline.hpp"

namespace monoindex {

struct SearchOptions {
  double tol = 1e-6;       // golden-section angle tolerance (radians)
  double bracket = 0.3;    // half-width of the bracket around the start angle
  int grid = 64;           // coarse grid size for the full-circle stage
  double bandwidth_const = 0.5;  // c in h = c * range * n^(-1/7)
  double mu_const = 2.5;         // c in mu = c * range^3 * n^(-0.6)
  KernelKind kernel = KernelKind::epanechnikov;
  bool record_trace = false;
};

struct EstimateResult {
  UnitVector alpha_hat;
  double loss;
  std::variant<MonotoneStepFunction, NaturalCubicSpline> link;
  long evaluations;  // criterion calls across both search stages
  std::vector<std::pair<double, double>> trace;  // (angle, loss) if recorded
};

// Mean squared residual of the isotonic fit on the projections.
double lse_loss(const UnitVector& alpha, const Dataset& data);

// Squared norm of n^-1 sum_i {y_i - psihat(t_i)} x_i.
double sse_loss(const UnitVector& alpha, const Dataset& data);

// As sse_loss with each term weighted by the kernel-smoothed derivative
// of the isotonic fit at t_i.
double ese_loss(const UnitVector& alpha, const Dataset& data, KernelKind k,
                Bandwidth h);

// Squared norm of n^-1 sum_i {spline(t_i) - y_i} spline'(t_i) x_i.
double spline_score_loss(const UnitVector& alpha, const Dataset& data,
                         PenaltyParameter mu);

// d = 2 parameterization alpha = (cos beta, sin beta); the angle round
// trip is the identity modulo 2*pi with angles in (-pi, pi].
UnitVector angle_to_alpha(double beta);
double alpha_to_angle(const UnitVector& alpha);

// Profile search over the circle.  The LSE stage scans a coarse grid over
// (-pi, pi] and refines the bracketing triple by golden section; SSE, ESE
// and the spline score start from the LSE angle with a +-bracket interval.
// The returned loss never exceeds the loss at the start angle.
EstimateResult profile_fit(EstimatorKind kind, const Dataset& data,
                           const SearchOptions& opts = {});

}  // namespace monoindex
