#pragma once

#include <utility>
#include <vector>

#include "locsyn/param/plant.hpp"

namespace locsyn::param {

using ratfun::RationalFn;
using ratfun::RatMatrix;
using sis::ConvKernel;

// Phix = F theta + L, Phiu = chi theta + eta, all poles at -p.
struct ParamFamily {
  RatMatrix F;    // (r m) x m
  RatMatrix L;    // (r m) x (r m)
  RatMatrix chi;  // m x m, chi(s) I
  RatMatrix eta;  // m x (r m)
  double p = 1.0;
  int m = 1;
  int r = 1;
  std::vector<double> coeffs;  // a_1..a_r of the canonical form

  int states() const { return r * m; }
};

struct CanonicalForm {
  Eigen::MatrixXd T;
  Eigen::MatrixXd A_hat;
  Eigen::MatrixXd B_hat;
  std::vector<double> coeffs;
  int r = 0;
  int m = 0;
};

// Similarity T with (T A T^-1 + p I, T B2) in block controllable-canonical form.
CanonicalForm canonical_transform(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B2, double p = 1.0,
                                  double tol = kDefaultTolerances.rank);
// Reads a_1..a_r from (A + p I, B2) if it matches the canonical template.
std::optional<CanonicalForm> detect_canonical(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B2, double p = 1.0,
                                              double tol = kDefaultTolerances.canonical_pattern);

ParamFamily family_first_order(double a, double p = 1.0);
ParamFamily family_nth_order(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B2, double p = 1.0);
// Family built directly from canonical coefficients.
ParamFamily family_from_coeffs(const std::vector<double>& coeffs, int m, double p = 1.0);

std::pair<ConvKernel, ConvKernel> phis_from_theta(const ParamFamily& fam, const ConvKernel& theta);

// ((s+p)I - (A+pI)) Phix - B2 Phiu - I.
ConvKernel affine_residual(const ConvKernel& A, const ConvKernel& B2, const ConvKernel& Phix, const ConvKernel& Phiu,
                           double p);
ConvKernel affine_residual(const PlantSpec& plant, const ConvKernel& Phix, const ConvKernel& Phiu, double p);
RatMatrix affine_residual(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B2, const RatMatrix& Phix,
                          const RatMatrix& Phiu, double p);

// |num| <= tol * |den| coefficientwise.
bool is_negligible(const RationalFn& g, double tol = kDefaultTolerances.rational_equality);
bool is_negligible(const RatMatrix& g, double tol = kDefaultTolerances.rational_equality);
bool is_negligible(const ConvKernel& k, double tol = kDefaultTolerances.rational_equality);

// Every entry stable and strictly proper.
bool kernel_in_rh2(const ConvKernel& k);
bool matrix_in_rh2(const RatMatrix& g);

}  // namespace locsyn::param
