#include "monoindex/dataset.hpp"

#include <cmath>
#include <stdexcept>

namespace monoindex {

UnitVector::UnitVector(Eigen::VectorXd components) : v_(std::move(components)) {
  if (v_.size() < 2) throw std::invalid_argument("need dimension >= 2");
  if (!v_.allFinite()) throw std::invalid_argument("nonfinite input");
  const double norm = v_.norm();
  if (norm == 0.0) throw std::invalid_argument("zero direction");
  v_ /= norm;
}

void Dataset::validate() const {
  if (x.rows() < 1) throw std::invalid_argument("empty dataset");
  if (x.cols() < 2) throw std::invalid_argument("need dimension >= 2");
  if (y.size() != x.rows()) throw std::invalid_argument("response length mismatch");
  if (!x.allFinite() || !y.allFinite())
    throw std::invalid_argument("nonfinite input");
}

}  // namespace monoindex
