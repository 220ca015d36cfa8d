#pragma once

#include <Eigen/Core>

#include "epitome/sparse_code.hpp"

namespace epitome {

struct LassoSettings {
  double lambda = 0.0;    // regularization weight, >= 0
  int max_nonzeros = 0;   // support cap; 0 means min(m, p)
  double tol = 1e-9;      // KKT slack accepted in the certificate

  void validate(long p) const;
};

//! Minimize 0.5*||x - D a||^2 + lambda*||a||_1 with a LARS-style homotopy
//! that follows the piecewise-linear solution path from lambda_max down to
//! the requested lambda. The result satisfies the KKT conditions
//! |d_j^T (x - D a)| <= lambda + tol for all j, with sign consistency and
//! equality on the support. With a support cap the path stops early and the
//! result is the solution at the smallest lambda' >= lambda whose support
//! fits the cap.
SparseCode lasso(const Eigen::VectorXd& x, const Eigen::MatrixXd& d, const LassoSettings& s);

//! Minimize 0.5*||x - D a||^2 + lambda*sum_j ||d_j||_2 |a_j| by rescaling:
//! solve the plain lasso against D Gamma^-1 and return Gamma^-1 a'.
//! All column norms must be strictly positive.
SparseCode weighted_lasso(const Eigen::VectorXd& x, const Eigen::MatrixXd& d,
                          const LassoSettings& s);

//! Path solver core on precomputed quantities: gram = D^T D and
//! corr = D^T x. Repeated solves against one dictionary share the gram.
SparseCode lasso_path(const Eigen::MatrixXd& gram, const Eigen::VectorXd& corr,
                      const LassoSettings& s);

//! 0.5*||x - D a||^2 + lambda*||a||_1, for tests and diagnostics.
double lasso_objective(const Eigen::VectorXd& x, const Eigen::MatrixXd& d,
                       const SparseCode& a, double lambda);

//! 0.5*||x - D a||^2 + lambda*sum_j ||d_j||_2 |a_j|.
double weighted_lasso_objective(const Eigen::VectorXd& x, const Eigen::MatrixXd& d,
                                const SparseCode& a, double lambda);

}  // namespace epitome
