#pragma once

#include <span>
#include <vector>

namespace monoindex {

// One observation on the projected axis: t is the projected covariate,
// y the response.
struct ScatterPoint {
  double t;
  double y;
};

// Nondecreasing step function, the weighted isotonic least-squares fit.
// knots are the distinct (tie-pooled) abscissae in strictly increasing
// order; levels[i] is the fitted value at knots[i] and the sequence is
// nondecreasing.  The function is constant between knots and outside
// [knots.front(), knots.back()]:
//
//   eval_step(f, u) = levels[i]  for the largest i with knots[i] <= u,
//                     levels[0]  for u < knots[0].
//
// In particular eval_step(f, knots[i]) == levels[i], so evaluating at a
// data abscissa returns that observation's fitted value.
struct MonotoneStepFunction {
  std::vector<double> knots;
  std::vector<double> levels;

  double domain_lo() const { return knots.front(); }
  double domain_hi() const { return knots.back(); }
};

// Weighted isotonic least-squares regression: minimizes
// sum_i w_i (y_i - psi(t_i))^2 over nondecreasing psi.  Observations are
// stably sorted by t; identical abscissae are pooled into one weighted
// point (weighted mean of y) before pooling adjacent violators.
// weights may be empty (all ones); otherwise it must match points in
// length and be positive.
MonotoneStepFunction fit_isotonic(std::span<const ScatterPoint> points,
                                  std::span<const double> weights = {});

double eval_step(const MonotoneStepFunction& f, double u);

}  // namespace monoindex
