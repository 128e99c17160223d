#include "locsyn/h2/inner_outer.hpp"

#include <cmath>

#include "locsyn/error.hpp"
#include "locsyn/ratfun/norms.hpp"
#include "locsyn/ratfun/spectral.hpp"

namespace locsyn::h2 {

namespace {

using ratfun::cplx;

constexpr double kProbe[] = {0.37, 1.3, 4.1};
constexpr double kWeights[] = {1.0, 0.6180339887, 0.2718281828};
constexpr double kCheck[] = {0.05, 0.71, 2.3, 9.7, 31.0};

Eigen::MatrixXcd gram_at(const RatMatrix& U, double w) {
  const Eigen::MatrixXcd u = U.eval(cplx(0.0, w));
  return u.adjoint() * u;
}

RationalFn reciprocal(const RationalFn& f) {
  if (f.is_zero()) fail(ErrorCode::NotFactorable, "zero spectral factor");
  return RationalFn(f.den(), f.num());
}

}  // namespace

InnerOuter inner_outer(const RatMatrix& U, double tol) {
  const int n = U.cols();
  if (n == 0) fail(ErrorCode::ShapeError, "empty U");
  if (!U.all_stable() || !U.all_proper())
    fail(ErrorCode::NotFactorable, "U must be stable and proper");

  Eigen::MatrixXd core = Eigen::MatrixXd::Zero(n, n);
  double scale = 0.0;
  for (int i = 0; i < 3; ++i) {
    const Eigen::MatrixXcd g = gram_at(U, kProbe[i]);
    scale = std::max(scale, g.norm());
    if (g.imag().norm() > tol * std::max(1.0, g.norm()))
      fail(ErrorCode::NotFactorable, "U~U is not real on the imaginary axis");
    core += kWeights[i] * g.real();
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(core);
  const Eigen::MatrixXd V = es.eigenvectors();
  for (double w : kCheck) {
    const Eigen::MatrixXcd g = gram_at(U, w);
    Eigen::MatrixXcd d = V.transpose() * g * V;
    const double ref = std::max(1.0, g.norm());
    d.diagonal().setZero();
    if (d.norm() > tol * ref)
      fail(ErrorCode::NotFactorable, "U~U has no constant eigenvector basis");
  }

  InnerOuter io;
  io.V = V;
  io.Uo = RatMatrix(n, n);
  io.Ui = RatMatrix(U.rows(), n);
  const RatMatrix UV = U * V;
  for (int k = 0; k < n; ++k) {
    RationalFn phi;
    for (int r = 0; r < UV.rows(); ++r) {
      const RationalFn& w = UV(r, k);
      if (w.is_zero()) continue;
      phi += w.para() * w;
    }
    if (phi.is_zero()) fail(ErrorCode::NotFactorable, "U has deficient column rank");
    RationalFn f = ratfun::spectral_factor(phi);
    for (const auto& z : f.zeros())
      if (std::abs(z.real()) < 1e-7 * std::max(1.0, std::abs(z)))
        fail(ErrorCode::NotFactorable, "outer factor has a zero on the imaginary axis");
    const RationalFn finv = reciprocal(f);
    for (int i = 0; i < n; ++i) io.Uo(k, i) = V(i, k) * f;
    for (int r = 0; r < UV.rows(); ++r) io.Ui(r, k) = UV(r, k) * finv;
    io.f.push_back(std::move(f));
  }
  return io;
}

double inner_defect(const InnerOuter& io, int points) {
  double worst = 0.0;
  const int n = io.Ui.cols();
  for (int i = 0; i < points; ++i) {
    const double w = std::pow(10.0, -3.0 + 6.0 * i / std::max(1, points - 1));
    const Eigen::MatrixXcd u = io.Ui.eval(cplx(0.0, w));
    const Eigen::MatrixXcd d = u.adjoint() * u - Eigen::MatrixXcd::Identity(n, n);
    worst = std::max(worst, d.cwiseAbs().maxCoeff());
  }
  return worst;
}

double l2_norm_sq(const RationalFn& g) {
  if (g.is_zero()) return 0.0;
  const auto parts = ratfun::split_stable(g);
  if (!parts.polynomial.is_zero() && parts.polynomial.max_abs() > 1e-12 * std::max(1.0, g.num().max_abs()))
    fail(ErrorCode::NormUndefined, "function has a polynomial part");
  return ratfun::h2_norm_sq(parts.stable) + ratfun::h2_norm_sq(parts.antistable.para());
}

double projected_value(const InnerOuter& io, const RatMatrix& H, const RatMatrix& X) {
  const RatMatrix y = io.Ui.para() * H + io.Uo * X;
  double acc = 0.0;
  for (int i = 0; i < y.rows(); ++i)
    for (int c = 0; c < y.cols(); ++c) acc += l2_norm_sq(y(i, c));
  return acc;
}

}  // namespace locsyn::h2
