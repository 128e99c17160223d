#pragma once

#include <string>
#include <utility>
#include <vector>

#include "locsyn/param/families.hpp"

namespace locsyn::h2 {

using ratfun::RationalFn;
using ratfun::RatMatrix;
using sis::ConvKernel;

// inf ||H + U X|| over stable X, where X stacks theta_k B1 e_j for k = -M..M.
struct ModelMatchProblem {
  RatMatrix H;  // rows x q
  RatMatrix U;  // rows x (2M+1) m
  param::ParamFamily family;
  ConvKernel C1;
  ConvKernel D12;
  Eigen::MatrixXd B1;  // pointwise, states x q
  int N = 1;
  bool infinite = false;
  int M = 0;
  int j = 0;
  double gamma = 1.0;
  // (output component, site) of every kept row.
  std::vector<std::pair<int, int>> row_index;
  std::string descriptor;

  int m() const { return family.m; }
  int q() const { return static_cast<int>(B1.cols()); }
  int unknowns() const { return (2 * M + 1) * family.m; }
};

// C1 and D12 act on the stacked state and input; B1 must be pointwise.
ModelMatchProblem assemble(const param::PlantSpec& plant, const ConvKernel& C1, const ConvKernel& D12,
                           const ConvKernel& B1, const param::ParamFamily& family, int M, int j = 0,
                           double gamma = 1.0, std::string descriptor = {});

// X -> theta with theta_k = X_k pinv(B1).
ConvKernel theta_from_vartheta(const ModelMatchProblem& p, const RatMatrix& X);
RatMatrix vartheta_from_theta(const ModelMatchProblem& p, const ConvKernel& theta);

// ||H + U X||^2.
double objective_value(const ModelMatchProblem& p, const RatMatrix& X);

}  // namespace locsyn::h2
