#include "locsyn/realize/controller.hpp"

#include "locsyn/error.hpp"

namespace locsyn::realize {

namespace {

using ratfun::Poly;
using ratfun::RationalFn;
using ratfun::RatMatrix;

int circular_distance(int a, int b, int N) {
  const int d = std::abs(a - b) % N;
  return std::min(d, N - d);
}

}  // namespace

Eigen::MatrixXcd dense_eval(const ConvKernel& K, cplx s) {
  const int N = K.ring_size();
  const int r = K.rows(), c = K.cols();
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(N * r, N * c);
  for (const auto& [m, g] : K.entries()) {
    const Eigen::MatrixXcd v = g.eval(s);
    for (int i = 0; i < N; ++i) {
      const int j = ((i - m) % N + N) % N;
      out.block(i * r, j * c, r, c) += v;
    }
  }
  return out;
}

ControllerImpl make_impl(const param::PlantSpec& plant, const ConvKernel& Phix, const ConvKernel& Phiu, double p) {
  if (!(p > 0.0)) fail(ErrorCode::InvalidParameter, "p must be positive");
  const ConvKernel res = param::affine_residual(plant, Phix, Phiu, p);
  if (!param::is_negligible(res, 1e-7)) fail(ErrorCode::NotAchievable, "closed loops violate the affine constraint");
  const RationalFn sp = RationalFn::unreduced(Poly{p, 1.0}, Poly::constant(1.0));
  ControllerImpl impl;
  impl.p = p;
  impl.PhixTilde = (-sp) * Phix;
  impl.PhixTilde.add(0, RatMatrix::identity(Phix.rows()));
  impl.PhiuTilde = sp * Phiu;
  for (const auto& [m, g] : impl.PhixTilde.entries())
    if (!g.all_strictly_proper() || !g.all_stable())
      fail(ErrorCode::NotAchievable, "I - (s+p) Phix is not stable and strictly proper");
  for (const auto& [m, g] : impl.PhiuTilde.entries())
    if (!g.all_proper() || !g.all_stable()) fail(ErrorCode::NotAchievable, "(s+p) Phiu is not stable and proper");
  impl.M = std::max(Phix.band(), Phiu.band());
  return impl;
}

Eigen::MatrixXcd controller_response(const ControllerImpl& impl, cplx s) {
  const Eigen::MatrixXcd X = dense_eval(impl.PhixTilde, s);
  const Eigen::MatrixXcd U = dense_eval(impl.PhiuTilde, s);
  const auto n = X.rows();
  const Eigen::MatrixXcd IX = Eigen::MatrixXcd::Identity(n, n) - X;
  return IX.transpose().partialPivLu().solve(U.transpose()).transpose();
}

double controller_off_band(const ControllerImpl& impl, cplx s) {
  const Eigen::MatrixXcd K = controller_response(impl, s);
  const int N = impl.PhixTilde.ring_size();
  const int nu = impl.PhiuTilde.rows(), nx = impl.PhiuTilde.cols();
  double worst = 0.0;
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b)
      if (circular_distance(a, b, N) > impl.M)
        worst = std::max(worst, K.block(a * nu, b * nx, nu, nx).cwiseAbs().maxCoeff());
  return worst;
}

}  // namespace locsyn::realize
