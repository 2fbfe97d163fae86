#include "monoindex/golden.hpp"

#include <cmath>
#include <stdexcept>

namespace monoindex {

GoldenResult golden_section_minimize(const std::function<double(double)>& f,
                                     double lo, double hi, double tol) {
  if (!(hi > lo)) throw std::invalid_argument("empty bracket");
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");

  GoldenResult best{lo, std::numeric_limits<double>::infinity(), 0};
  auto eval = [&](double x) {
    const double fx = f(x);
    ++best.evaluations;
    if (fx < best.fx) {
      best.fx = fx;
      best.x = x;
    }
    return fx;
  };

  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - (b - a) * invphi;
  double d = a + (b - a) * invphi;
  double fc = eval(c);
  double fd = eval(d);
  for (int iter = 0; iter < 256 && (b - a) > tol; ++iter) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - (b - a) * invphi;
      fc = eval(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + (b - a) * invphi;
      fd = eval(d);
    }
  }
  return best;
}

}  // namespace monoindex
