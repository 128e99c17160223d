#include <cmath>
#include <string>

#include "locsyn/error.hpp"
#include "locsyn/param/families.hpp"

namespace locsyn::param {

CanonicalForm canonical_transform(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B2, double p, double tol) {
  const auto n = A.rows();
  const auto m = B2.cols();
  if (A.cols() != n || B2.rows() != n || m == 0) fail(ErrorCode::ShapeError, "A must be square and B2 conformable");
  const Eigen::MatrixXd Abar = A + p * Eigen::MatrixXd::Identity(n, n);
  Eigen::MatrixXd ctrb(n, n * m);
  Eigen::MatrixXd blk = B2;
  for (Eigen::Index k = 0; k < n; ++k) {
    ctrb.middleCols(k * m, m) = blk;
    blk = Abar * blk;
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(ctrb);
  qr.setThreshold(tol);
  if (qr.rank() < n) fail(ErrorCode::NotControllable, "(A, B2) is not controllable");
  if (n % m != 0) fail(ErrorCode::NotControllable, "state dimension is not a multiple of the input dimension");
  const int r = static_cast<int>(n / m);

  // Scalar a_i with Abar^r B + a_1 Abar^{r-1} B + ... + a_r B = 0.
  std::vector<Eigen::MatrixXd> pw(r + 1);
  pw[0] = B2;
  for (int k = 1; k <= r; ++k) pw[k] = Abar * pw[k - 1];
  Eigen::MatrixXd K(n * m, r);
  for (int i = 1; i <= r; ++i) K.col(i - 1) = pw[r - i].reshaped();
  const Eigen::VectorXd rhs = -pw[r].reshaped();
  const Eigen::VectorXd a = K.colPivHouseholderQr().solve(rhs);
  if ((K * a - rhs).norm() > 1e-8 * std::max(1.0, rhs.norm()))
    fail(ErrorCode::NotControllable, "controllability indices are not equal; no block canonical form");

  Eigen::MatrixXd Tinv(n, n);
  Eigen::MatrixXd w = B2;
  for (int k = 0; k < r; ++k) {
    Tinv.middleCols(k * m, m) = w;
    w = Abar * w + a[k] * B2;
  }
  Eigen::FullPivLU<Eigen::MatrixXd> lu(Tinv);
  if (!lu.isInvertible()) fail(ErrorCode::NotControllable, "canonical transformation is singular");
  CanonicalForm out;
  out.T = lu.inverse();
  out.A_hat = out.T * A * Tinv;
  out.B_hat = out.T * B2;
  out.coeffs.assign(a.data(), a.data() + r);
  out.r = r;
  out.m = static_cast<int>(m);
  return out;
}

std::optional<CanonicalForm> detect_canonical(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B2, double p,
                                              double tol) {
  const auto n = A.rows();
  const auto m = B2.cols();
  if (A.cols() != n || B2.rows() != n || m == 0 || n % m != 0) return std::nullopt;
  const int r = static_cast<int>(n / m);
  const Eigen::MatrixXd Abar = A + p * Eigen::MatrixXd::Identity(n, n);
  auto close = [&](const Eigen::MatrixXd& X, const Eigen::MatrixXd& Y) { return (X - Y).cwiseAbs().maxCoeff() <= tol; };
  const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(m, m);
  const Eigen::MatrixXd Z = Eigen::MatrixXd::Zero(m, m);
  if (!close(B2.topRows(m), I)) return std::nullopt;
  if (n > m && !close(B2.bottomRows(n - m), Eigen::MatrixXd::Zero(n - m, m))) return std::nullopt;
  CanonicalForm out;
  out.r = r;
  out.m = static_cast<int>(m);
  for (int k = 0; k < r; ++k) {
    const double ak = -Abar(0, k * m);
    if (!close(Abar.block(0, k * m, m, m), -ak * I)) return std::nullopt;
    out.coeffs.push_back(ak);
  }
  for (int i = 1; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (!close(Abar.block(i * m, j * m, m, m), j == i - 1 ? I : Z)) return std::nullopt;
  out.T = Eigen::MatrixXd::Identity(n, n);
  out.A_hat = A;
  out.B_hat = B2;
  return out;
}

}  // namespace locsyn::param
