#include "locsyn/param/coupled.hpp"

#include <cmath>
#include <numbers>

#include "locsyn/error.hpp"
#include "locsyn/ratfun/statespace.hpp"

namespace locsyn::param {

using ratfun::cplx;
using ratfun::Poly;

namespace {

constexpr int kMaxResolventRing = 41;

Eigen::MatrixXd dense_circulant(const ConvKernel& K) {
  const int N = K.ring_size();
  const int p = K.rows();
  const int q = K.cols();
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(N * p, N * q);
  for (const auto& [m, g] : K.entries()) {
    const Eigen::MatrixXd v = g.eval(cplx(0.0)).real();
    for (int i = 0; i < N; ++i) {
      const int j = ((i - m) % N + N) % N;
      out.block(i * p, j * q, p, q) += v;
    }
  }
  return out;
}

}  // namespace

ConvKernel resolvent_kernel(const ConvKernel& A) {
  if (!A.is_static()) fail(ErrorCode::UnsupportedPlant, "state kernel must be static");
  if (A.rows() != A.cols()) fail(ErrorCode::ShapeError, "state kernel blocks must be square");
  const int N = A.ring_size();
  const int n = A.rows();
  if (N > kMaxResolventRing && A.band() > 0)
    fail(ErrorCode::UnsupportedPlant, "coupled resolvent is limited to rings of at most 41 sites");
  ConvKernel out = A.infinite() ? ConvKernel(0, n, n, true) : ConvKernel(N, n, n);
  if (A.band() <= 0) {
    const Eigen::MatrixXd A0 = A.at(0).eval(cplx(0.0)).real();
    const ratfun::StateSpace sys{A0, Eigen::MatrixXd::Identity(n, n), Eigen::MatrixXd::Identity(n, n),
                                 Eigen::MatrixXd::Zero(n, n)};
    out.set(0, ratfun::tf_of_ss(sys));
    return out;
  }
  const Eigen::MatrixXd Ac = dense_circulant(A);
  Eigen::MatrixXd E = Eigen::MatrixXd::Zero(N * n, n);
  E.topRows(n) = Eigen::MatrixXd::Identity(n, n);
  ratfun::StateSpace sys{Ac, E, Eigen::MatrixXd::Identity(N * n, N * n), Eigen::MatrixXd::Zero(N * n, n)};
  const RatMatrix col = ratfun::tf_of_ss(ratfun::minimal_realization(sys));
  for (int site = 0; site < N; ++site) out.set(site, col.block(site * n, 0, n, n));
  return out;
}

ConvKernel inverse_static_kernel(const ConvKernel& K) {
  if (!K.is_static()) fail(ErrorCode::UnsupportedPlant, "kernel must be static");
  if (K.rows() != K.cols()) fail(ErrorCode::ShapeError, "kernel blocks must be square");
  if (!kernel_is_invertible(K)) fail(ErrorCode::UnsupportedPlant, "kernel is not invertible");
  const int N = K.ring_size();
  const int n = K.rows();
  std::vector<Eigen::MatrixXcd> inv(N);
  for (int k = 0; k < N; ++k) inv[k] = K.static_symbol(k).inverse();
  std::map<int, Eigen::MatrixXd> entries;
  double scale = 0.0;
  for (int m = -(N - 1) / 2; m <= (N - 1) / 2; ++m) {
    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(n, n);
    for (int k = 0; k < N; ++k) acc += std::polar(1.0, 2.0 * std::numbers::pi * k * m / N) * inv[k];
    entries[m] = acc.real() / N;
    scale = std::max(scale, entries[m].cwiseAbs().maxCoeff());
  }
  ConvKernel out = K.infinite() ? ConvKernel(0, n, n, true) : ConvKernel(N, n, n);
  for (auto& [m, v] : entries) {
    v = v.unaryExpr([&](double x) { return std::abs(x) <= 1e-13 * scale ? 0.0 : x; });
    out.set(m, RatMatrix(v));
  }
  return out;
}

bool kernel_is_hurwitz(const ConvKernel& A) {
  for (int k = 0; k < A.ring_size(); ++k) {
    const Eigen::VectorXcd ev = A.static_symbol(k).eigenvalues();
    for (Eigen::Index i = 0; i < ev.size(); ++i)
      if (!(ev[i].real() < 0.0)) return false;
  }
  return true;
}

bool kernel_is_invertible(const ConvKernel& K) {
  if (K.rows() != K.cols()) return false;
  for (int k = 0; k < K.ring_size(); ++k) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(K.static_symbol(k));
    const auto& sv = svd.singularValues();
    if (sv.size() == 0 || sv[sv.size() - 1] <= 1e-10 * std::max(1.0, sv[0])) return false;
  }
  return true;
}

std::pair<ConvKernel, ConvKernel> coupled_parameterization(const PlantSpec& plant, const ConvKernel& theta, double p) {
  if (!plant.spatially_invariant()) fail(ErrorCode::UnsupportedPlant, "coupled parameterization needs kernel dynamics");
  const ConvKernel A = plant.state_kernel();
  const ConvKernel B2 = plant.input_kernel();
  const int n = A.rows();
  const bool prefer_b = plant.kind == PlantKind::CoupledB2Invertible;
  const bool stable = kernel_is_hurwitz(A);
  const bool invertible = kernel_is_invertible(B2);
  if (!prefer_b && stable) {
    if (theta.rows() != B2.cols() || theta.cols() != n) fail(ErrorCode::ShapeError, "theta must be m x n");
    ConvKernel inner = compose(B2, theta);
    inner.add(0, RatMatrix::identity(n));
    return {compose(resolvent_kernel(A), inner), theta};
  }
  if (invertible) {
    if (!(p > 0.0)) fail(ErrorCode::InvalidParameter, "pole parameter p must be positive");
    if (theta.rows() != n || theta.cols() != n) fail(ErrorCode::ShapeError, "theta must be n x n");
    const RationalFn inv = ratfun::inv_s_plus(p);
    ConvKernel phix = theta;
    phix.add(0, RatMatrix::identity(n));
    phix = inv * phix;
    const RationalFn s = ratfun::s_var();
    ConvKernel Ap = A;
    Ap.add(0, RatMatrix(p * Eigen::MatrixXd::Identity(n, n)));
    ConvKernel inner = s * theta - compose(A, theta) - Ap;
    ConvKernel phiu = inv * compose(inverse_static_kernel(B2), inner);
    return {phix, phiu};
  }
  fail(ErrorCode::UnsupportedPlant, "coupled plant is neither open-loop stable nor has an invertible B2");
}

}  // namespace locsyn::param
