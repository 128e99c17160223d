#pragma once

#include "locsyn/ratfun/statespace.hpp"

namespace locsyn::ratfun {

enum class H2Normalization {
  InverseTwoPi,  // (1/2pi) * integral over the imaginary axis
  Unnormalized,  // plain integral over the imaginary axis
};

// Solves A X + X A^T + Q = 0 for Hurwitz A.
Eigen::MatrixXd lyapunov(const Eigen::MatrixXd& A, const Eigen::MatrixXd& Q);

double h2_norm_sq(const StateSpace& sys, H2Normalization norm = H2Normalization::InverseTwoPi);
double h2_norm_sq(const RationalFn& g, H2Normalization norm = H2Normalization::InverseTwoPi);
// Sum of the entry norms.
double h2_norm_sq(const RatMatrix& G, H2Normalization norm = H2Normalization::InverseTwoPi);

}  // namespace locsyn::ratfun
