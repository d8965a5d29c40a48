#pragma once

#include <Eigen/Dense>

namespace motzkin::detail {

struct EigResult {
  Eigen::VectorXd values;   // ascending
  Eigen::MatrixXd vectors;  // columns
};

// Full symmetric eigendecomposition (LAPACK divide and conquer).
EigResult eig_sym(const Eigen::MatrixXd& a);

}  // namespace motzkin::detail
