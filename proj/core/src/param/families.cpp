#include "locsyn/param/families.hpp"

#include <string>

#include "locsyn/error.hpp"

namespace locsyn::param {

namespace {

using ratfun::inv_s_plus;
using ratfun::Poly;

RationalFn inv_pow(double p, int k) {
  Poly den = Poly::constant(1.0);
  for (int i = 0; i < k; ++i) den = den * Poly{p, 1.0};
  return RationalFn::unreduced(Poly::constant(1.0), den);
}

RatMatrix scaled_identity(const RationalFn& g, int m) {
  RatMatrix out(m, m);
  for (int i = 0; i < m; ++i) out(i, i) = g;
  return out;
}

}  // namespace

ParamFamily family_from_coeffs(const std::vector<double>& coeffs, int m, double p) {
  if (coeffs.empty() || m < 1) fail(ErrorCode::WrongFamily, "empty canonical structure");
  if (!(p > 0.0)) fail(ErrorCode::InvalidParameter, "pole parameter p must be positive");
  const int r = static_cast<int>(coeffs.size());
  ParamFamily fam;
  fam.p = p;
  fam.m = m;
  fam.r = r;
  fam.coeffs = coeffs;
  fam.F = RatMatrix(r * m, m);
  fam.L = RatMatrix(r * m, r * m);
  fam.eta = RatMatrix(m, r * m);
  for (int k = 0; k < r; ++k) fam.F.set_block(k * m, 0, scaled_identity(inv_pow(p, k + 1), m));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j <= i; ++j) fam.L.set_block(i * m, j * m, scaled_identity(inv_pow(p, i - j + 1), m));
  RationalFn chi(1.0);
  for (int i = 1; i <= r; ++i) chi += coeffs[i - 1] * inv_pow(p, i);
  fam.chi = scaled_identity(chi, m);
  for (int k = 1; k <= r; ++k) {
    RationalFn eta_k;
    for (int i = k; i <= r; ++i) eta_k += coeffs[i - 1] * inv_pow(p, i + 1 - k);
    fam.eta.set_block(0, (k - 1) * m, scaled_identity(eta_k, m));
  }
  return fam;
}

ParamFamily family_first_order(double a, double p) {
  if (a < 0.0) fail(ErrorCode::WrongFamily, "stable first-order plant; use the coupled stable-plant parameterization");
  if (!(p > 0.0)) fail(ErrorCode::InvalidParameter, "pole parameter p must be positive");
  ParamFamily fam;
  fam.p = p;
  fam.m = 1;
  fam.r = 1;
  fam.coeffs = {-(a + p)};
  fam.F = RatMatrix::scalar(inv_s_plus(p));
  fam.L = RatMatrix::scalar(inv_s_plus(p));
  fam.chi = RatMatrix::scalar(RationalFn::unreduced(Poly{-a, 1.0}, Poly{p, 1.0}));
  fam.eta = RatMatrix::scalar(RationalFn::unreduced(Poly::constant(-(a + p)), Poly{p, 1.0}));
  return fam;
}

ParamFamily family_nth_order(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B2, double p) {
  const auto form = detect_canonical(A, B2, p);
  if (!form) fail(ErrorCode::WrongFamily, "(A + pI, B2) is not in block controllable-canonical form");
  return family_from_coeffs(form->coeffs, form->m, p);
}

std::pair<ConvKernel, ConvKernel> phis_from_theta(const ParamFamily& fam, const ConvKernel& theta) {
  if (theta.rows() != fam.m || theta.cols() != fam.states())
    fail(ErrorCode::ShapeError, "theta must be " + std::to_string(fam.m) + "x" + std::to_string(fam.states()));
  ConvKernel phix = fam.F * theta;
  ConvKernel phiu = fam.chi * theta;
  phix.add(0, fam.L);
  phiu.add(0, fam.eta);
  return {phix, phiu};
}

ConvKernel affine_residual(const ConvKernel& A, const ConvKernel& B2, const ConvKernel& Phix, const ConvKernel& Phiu,
                           double p) {
  const int n = A.rows();
  ConvKernel Ap = A;
  Ap.add(0, RatMatrix(p * Eigen::MatrixXd::Identity(n, n)));
  const RationalFn sp = RationalFn::unreduced(Poly{p, 1.0}, Poly::constant(1.0));
  ConvKernel res = sp * Phix - compose(Ap, Phix) - compose(B2, Phiu);
  res.add(0, -RatMatrix::identity(n));
  return res;
}

ConvKernel affine_residual(const PlantSpec& plant, const ConvKernel& Phix, const ConvKernel& Phiu, double p) {
  return affine_residual(plant.state_kernel(), plant.input_kernel(), Phix, Phiu, p);
}

RatMatrix affine_residual(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B2, const RatMatrix& Phix,
                          const RatMatrix& Phiu, double p) {
  const auto n = A.rows();
  const RationalFn sp = RationalFn::unreduced(Poly{p, 1.0}, Poly::constant(1.0));
  const Eigen::MatrixXd Ap = A + p * Eigen::MatrixXd::Identity(n, n);
  return sp * Phix - Ap * Phix - B2 * Phiu - RatMatrix::identity(static_cast<int>(n));
}

bool is_negligible(const RationalFn& g, double tol) { return g.num().max_abs() <= tol * g.den().max_abs(); }

bool is_negligible(const RatMatrix& g, double tol) {
  for (int i = 0; i < g.rows(); ++i)
    for (int j = 0; j < g.cols(); ++j)
      if (!is_negligible(g(i, j), tol)) return false;
  return true;
}

bool is_negligible(const ConvKernel& k, double tol) {
  for (const auto& [m, g] : k.entries())
    if (!is_negligible(g, tol)) return false;
  return true;
}

bool matrix_in_rh2(const RatMatrix& g) { return g.all_strictly_proper() && g.all_stable(); }

bool kernel_in_rh2(const ConvKernel& k) {
  for (const auto& [m, g] : k.entries())
    if (!matrix_in_rh2(g)) return false;
  return true;
}

}  // namespace locsyn::param
