#pragma once

#include <vector>

#include "locsyn/h2/model_matching.hpp"

namespace locsyn::h2 {

// U = Ui Uo with U~U = V diag(f~ f) V^T for a constant orthogonal V, so
// Uo = diag(f) V^T and Ui = U V diag(1/f).
struct InnerOuter {
  Eigen::MatrixXd V;
  std::vector<RationalFn> f;
  RatMatrix Ui;
  RatMatrix Uo;
};

InnerOuter inner_outer(const RatMatrix& U, double tol = 1e-8);

// max |Ui~Ui - I| over a frequency grid.
double inner_defect(const InnerOuter& io, int points = 64);

// Sum over columns of ||Ui~ H + Uo X||^2.
double projected_value(const InnerOuter& io, const RatMatrix& H, const RatMatrix& X);

// L2 norm squared of a function with no axis poles: stable plus mirrored
// antistable part. Throws NormUndefined when a polynomial part remains.
double l2_norm_sq(const RationalFn& g);

}  // namespace locsyn::h2
