#pragma once

#include <Eigen/Dense>

namespace monoindex {

enum class EstimatorKind { lse, sse, ese, spline };

// Direction on the unit sphere; the constructor normalizes and rejects
// nonfinite or zero input.
class UnitVector {
 public:
  explicit UnitVector(Eigen::VectorXd components);

  const Eigen::VectorXd& coords() const { return v_; }
  Eigen::Index dim() const { return v_.size(); }
  double operator[](Eigen::Index i) const { return v_[i]; }

 private:
  Eigen::VectorXd v_;
};

// n observations of d covariates (rows of x) with scalar responses y.
struct Dataset {
  Eigen::MatrixXd x;
  Eigen::VectorXd y;

  Eigen::Index n() const { return x.rows(); }
  Eigen::Index d() const { return x.cols(); }
  void validate() const;
};

}  // namespace monoindex
