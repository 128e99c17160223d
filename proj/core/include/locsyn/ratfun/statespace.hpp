#pragma once

#include <Eigen/Dense>

#include "locsyn/ratfun/ratmatrix.hpp"

namespace locsyn::ratfun {

struct StateSpace {
  Eigen::MatrixXd A;
  Eigen::MatrixXd B;
  Eigen::MatrixXd C;
  Eigen::MatrixXd D;

  int states() const { return static_cast<int>(A.rows()); }
  int inputs() const { return static_cast<int>(B.cols()); }
  int outputs() const { return static_cast<int>(C.rows()); }
  void validate() const;
  Eigen::MatrixXcd eval(cplx s) const;
};

// Characteristic polynomial det(sI - A) via Hessenberg reduction.
Poly charpoly(const Eigen::MatrixXd& A);

// Column-wise controllable canonical blocks followed by Kalman reduction.
StateSpace realize_ss(const RatMatrix& G, double rank_tol = kDefaultTolerances.rank);
// Removes uncontrollable and unobservable parts with orthonormal Krylov bases.
StateSpace minimal_realization(const StateSpace& sys, double rank_tol = kDefaultTolerances.rank);
RatMatrix tf_of_ss(const StateSpace& sys);

}  // namespace locsyn::ratfun
