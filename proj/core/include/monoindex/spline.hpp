#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "monoindex/isotonic.hpp"

namespace monoindex {

struct PenaltyParameter {
  double mu;
  explicit PenaltyParameter(double mu_);
};

// Natural cubic smoothing spline: C^2 piecewise cubic on
// [knots.front(), knots.back()] with zero second derivative at the
// boundary knots, extended linearly outside the domain.
struct NaturalCubicSpline {
  std::vector<double> knots;          // strictly increasing
  std::vector<double> values;         // fitted g(knots[i])
  std::vector<double> second_derivs;  // g''(knots[i]); first and last are 0

  double domain_lo() const { return knots.front(); }
  double domain_hi() const { return knots.back(); }
};

// Minimizes sum_i {psi(t_i) - y_i}^2 + mu * int psi''(x)^2 dx over C^2
// functions, via the Reinsch banded formulation.  Ties in t are pooled
// (mean of y, weight = count) so the criterion is preserved up to a
// constant.  Requires at least 3 distinct abscissae.
NaturalCubicSpline fit_smoothing_spline(std::span<const ScatterPoint> points,
                                        PenaltyParameter mu);

double eval_spline(const NaturalCubicSpline& s, double u);
double eval_spline_derivative(const NaturalCubicSpline& s, double u);

// Exact integral of the squared second derivative over the domain.
double roughness(const NaturalCubicSpline& s);

// mu = c * range^3 * n^(-0.6); the n^(-0.6) rate keeps the penalty
// o(n^(-1/2)) and range^3 makes it unit-consistent with the criterion.
PenaltyParameter default_penalty(std::size_t n, double range, double c = 2.5);

}  // namespace monoindex
