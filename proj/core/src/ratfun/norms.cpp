#include "locsyn/ratfun/norms.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "locsyn/error.hpp"

namespace locsyn::ratfun {

namespace {

double apply_normalization(double v, H2Normalization norm) {
  return norm == H2Normalization::InverseTwoPi ? v : 2.0 * std::numbers::pi * v;
}

void require_hurwitz(const Eigen::MatrixXd& A) {
  if (A.rows() == 0) return;
  const Eigen::VectorXcd ev = A.eigenvalues();
  for (Eigen::Index i = 0; i < ev.size(); ++i)
    if (!(ev[i].real() < 0.0)) fail(ErrorCode::NormUndefined, "unstable or marginal pole");
}

}  // namespace

Eigen::MatrixXd lyapunov(const Eigen::MatrixXd& A, const Eigen::MatrixXd& Q) {
  const auto n = A.rows();
  if (n == 0) return Eigen::MatrixXd(0, 0);
  Eigen::ComplexSchur<Eigen::MatrixXcd> schur(A.cast<cplx>());
  const Eigen::MatrixXcd& T = schur.matrixT();
  const Eigen::MatrixXcd& U = schur.matrixU();
  const Eigen::MatrixXcd Qt = U.adjoint() * Q.cast<cplx>() * U;
  Eigen::MatrixXcd Y = Eigen::MatrixXcd::Zero(n, n);
  for (Eigen::Index j = n - 1; j >= 0; --j) {
    Eigen::VectorXcd rhs = -Qt.col(j);
    for (Eigen::Index k = j + 1; k < n; ++k) rhs -= std::conj(T(j, k)) * Y.col(k);
    Eigen::MatrixXcd M = T;
    M.diagonal().array() += std::conj(T(j, j));
    Y.col(j) = M.triangularView<Eigen::Upper>().solve(rhs);
  }
  const Eigen::MatrixXd X = (U * Y * U.adjoint()).real();
  return 0.5 * (X + X.transpose());
}

double h2_norm_sq(const StateSpace& sys, H2Normalization norm) {
  sys.validate();
  if (sys.D.size() > 0 && sys.D.cwiseAbs().maxCoeff() != 0.0)
    fail(ErrorCode::NormUndefined, "feedthrough term present");
  if (sys.states() == 0) return 0.0;
  require_hurwitz(sys.A);
  const Eigen::MatrixXd P = lyapunov(sys.A, sys.B * sys.B.transpose());
  return apply_normalization((sys.C * P * sys.C.transpose()).trace(), norm);
}

double h2_norm_sq(const RationalFn& g, H2Normalization norm) {
  if (g.is_zero()) return 0.0;
  if (!g.is_strictly_proper()) fail(ErrorCode::NormUndefined, "transfer is not strictly proper");
  if (!g.is_stable()) fail(ErrorCode::NormUndefined, "transfer is not stable");
  const Poly& d = g.den();
  const int n = d.degree();
  StateSpace sys{Eigen::MatrixXd::Zero(n, n), Eigen::MatrixXd::Zero(n, 1), Eigen::MatrixXd::Zero(1, n),
                 Eigen::MatrixXd::Zero(1, 1)};
  for (int k = 0; k + 1 < n; ++k) sys.A(k, k + 1) = 1.0;
  for (int k = 0; k < n; ++k) {
    sys.A(n - 1, k) = -d[k];
    sys.C(0, k) = g.num()[k];
  }
  sys.B(n - 1, 0) = 1.0;
  return h2_norm_sq(sys, norm);
}

double h2_norm_sq(const RatMatrix& G, H2Normalization norm) {
  double acc = 0.0;
  for (int i = 0; i < G.rows(); ++i)
    for (int j = 0; j < G.cols(); ++j) acc += h2_norm_sq(G(i, j), norm);
  return acc;
}

}  // namespace locsyn::ratfun
