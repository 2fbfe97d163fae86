#include "monoindex/isotonic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace monoindex {

namespace {

struct Block {
  double weight;
  double weighted_sum;
  std::size_t first;  // index of the first pooled point in the block
  double mean() const { return weighted_sum / weight; }
};

}  // namespace

MonotoneStepFunction fit_isotonic(std::span<const ScatterPoint> points,
                                  std::span<const double> weights) {
  if (points.empty()) throw std::invalid_argument("empty dataset");
  if (!weights.empty() && weights.size() != points.size())
    throw std::invalid_argument("weight length mismatch");
  for (const auto& p : points) {
    if (!std::isfinite(p.t) || !std::isfinite(p.y))
      throw std::invalid_argument("nonfinite input");
  }
  for (double w : weights) {
    if (!std::isfinite(w)) throw std::invalid_argument("nonfinite input");
    if (w <= 0.0) throw std::invalid_argument("nonpositive weight");
  }

  const std::size_t n = points.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return points[a].t < points[b].t;
  });

  // Pool exact ties in t into one weighted point.
  std::vector<double> t_pooled, w_pooled, y_pooled;
  t_pooled.reserve(n);
  for (std::size_t i = 0; i < n;) {
    const double t = points[order[i]].t;
    double wsum = 0.0, wy = 0.0;
    std::size_t j = i;
    for (; j < n && points[order[j]].t == t; ++j) {
      const double w = weights.empty() ? 1.0 : weights[order[j]];
      wsum += w;
      wy += w * points[order[j]].y;
    }
    t_pooled.push_back(t);
    w_pooled.push_back(wsum);
    y_pooled.push_back(wy / wsum);
    i = j;
  }

  // Pool adjacent violators, linear-time stack over the pooled sequence.
  const std::size_t m = t_pooled.size();
  std::vector<Block> stack;
  stack.reserve(m);
  for (std::size_t k = 0; k < m; ++k) {
    stack.push_back({w_pooled[k], w_pooled[k] * y_pooled[k], k});
    while (stack.size() >= 2 &&
           stack[stack.size() - 2].mean() > stack.back().mean()) {
      Block top = stack.back();
      stack.pop_back();
      stack.back().weight += top.weight;
      stack.back().weighted_sum += top.weighted_sum;
    }
  }

  MonotoneStepFunction fn;
  fn.knots = std::move(t_pooled);
  fn.levels.resize(m);
  for (std::size_t b = 0; b < stack.size(); ++b) {
    const std::size_t last = (b + 1 < stack.size()) ? stack[b + 1].first : m;
    const double level = stack[b].mean();
    for (std::size_t k = stack[b].first; k < last; ++k) fn.levels[k] = level;
  }
  return fn;
}

double eval_step(const MonotoneStepFunction& f, double u) {
  if (!std::isfinite(u)) throw std::invalid_argument("nonfinite input");
  auto it = std::upper_bound(f.knots.begin(), f.knots.end(), u);
  if (it == f.knots.begin()) return f.levels.front();
  return f.levels[static_cast<std::size_t>(it - f.knots.begin()) - 1];
}

}  // namespace monoindex
