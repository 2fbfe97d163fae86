#include "monoindex/spline.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace monoindex {

PenaltyParameter::PenaltyParameter(double mu_) : mu(mu_) {
  if (!std::isfinite(mu) || mu <= 0.0)
    throw std::invalid_argument("penalty must be positive");
}

namespace {

// LDL^T factorization and solve for a symmetric positive definite matrix
// with half-bandwidth 2 given by its diagonals d0 (main), d1, d2.
std::vector<double> solve_pentadiagonal(std::vector<double> d0,
                                        const std::vector<double>& d1,
                                        const std::vector<double>& d2,
                                        std::vector<double> rhs) {
  const std::size_t p = d0.size();
  std::vector<double> a(p, 0.0), b(p, 0.0);  // L[i][i-1], L[i][i-2]
  for (std::size_t i = 0; i < p; ++i) {
    double bi = 0.0, ai = 0.0;
    if (i >= 2) bi = d2[i - 2] / d0[i - 2];
    if (i >= 1) {
      double num = d1[i - 1];
      if (i >= 2) num -= bi * a[i - 1] * d0[i - 2];
      ai = num / d0[i - 1];
    }
    double di = d0[i];
    if (i >= 1) di -= ai * ai * d0[i - 1];
    if (i >= 2) di -= bi * bi * d0[i - 2];
    a[i] = ai;
    b[i] = bi;
    d0[i] = di;  // d0 now holds D
  }
  // Forward: L z = rhs.
  for (std::size_t i = 0; i < p; ++i) {
    if (i >= 1) rhs[i] -= a[i] * rhs[i - 1];
    if (i >= 2) rhs[i] -= b[i] * rhs[i - 2];
  }
  for (std::size_t i = 0; i < p; ++i) rhs[i] /= d0[i];
  // Backward: L^T x = z.
  for (std::size_t k = p; k-- > 0;) {
    if (k + 1 < p) rhs[k] -= a[k + 1] * rhs[k + 1];
    if (k + 2 < p) rhs[k] -= b[k + 2] * rhs[k + 2];
  }
  return rhs;
}

// Locates the cubic piece containing u, clamped to the domain.
std::size_t piece_index(const std::vector<double>& knots, double u) {
  auto it = std::upper_bound(knots.begin(), knots.end(), u);
  std::size_t i = (it == knots.begin()) ? 0 : static_cast<std::size_t>(it - knots.begin()) - 1;
  if (i + 1 >= knots.size()) i = knots.size() - 2;
  return i;
}

double piece_value(const NaturalCubicSpline& s, std::size_t i, double u) {
  const double h = s.knots[i + 1] - s.knots[i];
  const double A = (s.knots[i + 1] - u) / h;
  const double B = (u - s.knots[i]) / h;
  return A * s.values[i] + B * s.values[i + 1] +
         h * h / 6.0 *
             ((A * A * A - A) * s.second_derivs[i] +
              (B * B * B - B) * s.second_derivs[i + 1]);
}

double piece_derivative(const NaturalCubicSpline& s, std::size_t i, double u) {
  const double h = s.knots[i + 1] - s.knots[i];
  const double A = (s.knots[i + 1] - u) / h;
  const double B = (u - s.knots[i]) / h;
  return (s.values[i + 1] - s.values[i]) / h +
         h / 6.0 *
             (-(3.0 * A * A - 1.0) * s.second_derivs[i] +
              (3.0 * B * B - 1.0) * s.second_derivs[i + 1]);
}

}  // namespace

NaturalCubicSpline fit_smoothing_spline(std::span<const ScatterPoint> points,
                                        PenaltyParameter mu) {
  for (const auto& p : points) {
    if (!std::isfinite(p.t) || !std::isfinite(p.y))
      throw std::invalid_argument("nonfinite input");
  }
  const std::size_t n = points.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return points[a].t < points[b].t;
  });

  std::vector<double> t, y, w;
  for (std::size_t i = 0; i < n;) {
    const double ti = points[order[i]].t;
    double sum = 0.0;
    std::size_t j = i;
    for (; j < n && points[order[j]].t == ti; ++j) sum += points[order[j]].y;
    t.push_back(ti);
    w.push_back(static_cast<double>(j - i));
    y.push_back(sum / static_cast<double>(j - i));
    i = j;
  }

  const std::size_t m = t.size();
  if (m < 3) throw std::domain_error("degenerate design");

  std::vector<double> h(m - 1);
  for (std::size_t i = 0; i + 1 < m; ++i) h[i] = t[i + 1] - t[i];

  // Column j of Q (interior knot j+1) has rows j, j+1, j+2 with entries
  // 1/h_j, -1/h_j - 1/h_{j+1}, 1/h_{j+1}.
  const std::size_t p = m - 2;
  auto q0 = [&](std::size_t j) { return 1.0 / h[j]; };
  auto q1 = [&](std::size_t j) { return -1.0 / h[j] - 1.0 / h[j + 1]; };
  auto q2 = [&](std::size_t j) { return 1.0 / h[j + 1]; };

  // M = R + mu * Q^T W^-1 Q, pentadiagonal of size p.
  std::vector<double> d0(p), d1(p > 1 ? p - 1 : 0), d2(p > 2 ? p - 2 : 0);
  for (std::size_t j = 0; j < p; ++j) {
    d0[j] = (h[j] + h[j + 1]) / 3.0 +
            mu.mu * (q0(j) * q0(j) / w[j] + q1(j) * q1(j) / w[j + 1] +
                     q2(j) * q2(j) / w[j + 2]);
  }
  for (std::size_t j = 0; j + 1 < p; ++j) {
    d1[j] = h[j + 1] / 6.0 +
            mu.mu * (q1(j) * q0(j + 1) / w[j + 1] + q2(j) * q1(j + 1) / w[j + 2]);
  }
  for (std::size_t j = 0; j + 2 < p; ++j) {
    d2[j] = mu.mu * q2(j) * q0(j + 2) / w[j + 2];
  }

  std::vector<double> rhs(p);
  for (std::size_t j = 0; j < p; ++j)
    rhs[j] = (y[j + 2] - y[j + 1]) / h[j + 1] - (y[j + 1] - y[j]) / h[j];

  std::vector<double> gamma = solve_pentadiagonal(d0, d1, d2, std::move(rhs));

  // g = y - mu * W^-1 Q gamma.
  std::vector<double> qg(m, 0.0);
  for (std::size_t j = 0; j < p; ++j) {
    qg[j] += q0(j) * gamma[j];
    qg[j + 1] += q1(j) * gamma[j];
    qg[j + 2] += q2(j) * gamma[j];
  }
  NaturalCubicSpline s;
  s.knots = std::move(t);
  s.values.resize(m);
  for (std::size_t i = 0; i < m; ++i) s.values[i] = y[i] - mu.mu * qg[i] / w[i];
  s.second_derivs.assign(m, 0.0);
  for (std::size_t j = 0; j < p; ++j) s.second_derivs[j + 1] = gamma[j];
  return s;
}

double eval_spline(const NaturalCubicSpline& s, double u) {
  if (!std::isfinite(u)) throw std::invalid_argument("nonfinite input");
  const double a = s.domain_lo(), b = s.domain_hi();
  if (u < a) return s.values.front() + piece_derivative(s, 0, a) * (u - a);
  if (u > b) {
    const std::size_t last = s.knots.size() - 2;
    return s.values.back() + piece_derivative(s, last, b) * (u - b);
  }
  return piece_value(s, piece_index(s.knots, u), u);
}

double eval_spline_derivative(const NaturalCubicSpline& s, double u) {
  if (!std::isfinite(u)) throw std::invalid_argument("nonfinite input");
  const double a = s.domain_lo(), b = s.domain_hi();
  if (u < a) return piece_derivative(s, 0, a);
  if (u > b) return piece_derivative(s, s.knots.size() - 2, b);
  return piece_derivative(s, piece_index(s.knots, u), u);
}

double roughness(const NaturalCubicSpline& s) {
  // g'' is linear on each piece, so the integral is a quadratic form.
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < s.knots.size(); ++i) {
    const double h = s.knots[i + 1] - s.knots[i];
    const double g0 = s.second_derivs[i], g1 = s.second_derivs[i + 1];
    sum += h * (g0 * g0 + g0 * g1 + g1 * g1) / 3.0;
  }
  return sum;
}

PenaltyParameter default_penalty(std::size_t n, double range, double c) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  if (!(range > 0.0)) throw std::invalid_argument("range must be positive");
  return PenaltyParameter(c * range * range * range *
                          std::pow(static_cast<double>(n), -0.6));
}

}  // namespace monoindex
