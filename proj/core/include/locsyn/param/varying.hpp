#pragma once

#include "locsyn/param/families.hpp"

namespace locsyn::param {

struct SiteTriple {
  RationalFn alpha;
  RationalFn beta;
  RationalFn gamma;
  bool stable = false;
};

struct VaryingFirstOrderFamily {
  std::vector<SiteTriple> sites;
  std::vector<double> a;
  std::vector<double> b;
};

VaryingFirstOrderFamily family_varying_1st(const std::vector<double>& a, const std::vector<double>& b);
// Phix = B2 diag(gamma) theta + diag(gamma), Phiu = diag(alpha) theta + diag(beta).
std::pair<RatMatrix, RatMatrix> phis_varying_1st(const VaryingFirstOrderFamily& fam, const RatMatrix& theta);

struct VaryingNthFamily {
  std::vector<ParamFamily> sites;
  std::vector<int> state_offset;
  std::vector<int> input_offset;
  int total_states = 0;
  int total_inputs = 0;
  Eigen::MatrixXd A;
  Eigen::MatrixXd B2;
};

VaryingNthFamily family_varying_nth(const std::vector<Eigen::MatrixXd>& A, const std::vector<Eigen::MatrixXd>& B2);
// theta is total_inputs x total_states; block (i, j) is m_i x (r_j m_j).
std::pair<RatMatrix, RatMatrix> phis_varying_nth(const VaryingNthFamily& fam, const RatMatrix& theta);

}  // namespace locsyn::param
