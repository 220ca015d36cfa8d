#pragma once

#include <Eigen/Core>
#include <vector>

#include <cstdlib>
#include <stdexcept>

namespace epitome {

//! Sparse coefficient vector: strictly increasing atom indices with their
//! nonzero values, plus the ambient dimension p.
struct SparseCode {
  std::vector<int> indices;
  std::vector<double> values;
  int dim = 0;

  int support_size() const { return static_cast<int>(indices.size()); }

  double l1_norm() const {
    double s = 0;
    for (double v : values) s += std::abs(v);
    return s;
  }

  Eigen::VectorXd to_dense() const {
    Eigen::VectorXd a = Eigen::VectorXd::Zero(dim);
    for (size_t k = 0; k < indices.size(); ++k) a[indices[k]] = values[k];
    return a;
  }

  //! D * alpha without densifying.
  Eigen::VectorXd reconstruct(const Eigen::MatrixXd& d) const {
    Eigen::VectorXd y = Eigen::VectorXd::Zero(d.rows());
    for (size_t k = 0; k < indices.size(); ++k) y += values[k] * d.col(indices[k]);
    return y;
  }

  void validate() const {
    for (size_t k = 0; k < indices.size(); ++k) {
      if (indices[k] < 0 || indices[k] >= dim)
        throw std::invalid_argument("SparseCode: index out of range");
      if (k > 0 && indices[k] <= indices[k - 1])
        throw std::invalid_argument("SparseCode: indices not strictly increasing");
      if (values[k] == 0.0) throw std::invalid_argument("SparseCode: stored zero value");
    }
    if (indices.size() != values.size())
      throw std::invalid_argument("SparseCode: index/value size mismatch");
  }
};

}  // namespace epitome
