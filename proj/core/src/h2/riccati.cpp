#include <cmath>

#include "locsyn/error.hpp"
#include "locsyn/h2/synthesis.hpp"

namespace locsyn::h2 {

namespace {

using Eigen::MatrixXcd;

MatrixXcd matrix_sign(MatrixXcd Z) {
  const auto n = Z.rows();
  for (int it = 0; it < 200; ++it) {
    Eigen::PartialPivLU<MatrixXcd> lu(Z);
    const double det_abs = std::abs(lu.determinant());
    if (!(det_abs > 0.0) || !std::isfinite(det_abs)) fail(ErrorCode::DegenerateInput, "Hamiltonian is singular");
    const double c = std::pow(det_abs, -1.0 / static_cast<double>(n));
    const MatrixXcd next = 0.5 * (c * Z + lu.inverse() / c);
    const double delta = (next - Z).norm();
    Z = next;
    if (delta <= 1e-13 * Z.norm()) return Z;
  }
  fail(ErrorCode::DegenerateInput, "sign iteration did not converge");
}

}  // namespace

MatrixXcd care(const MatrixXcd& A, const MatrixXcd& B, const MatrixXcd& Q, const MatrixXcd& R, const MatrixXcd& S) {
  const auto n = A.rows();
  Eigen::LDLT<MatrixXcd> rs(R);
  if (rs.info() != Eigen::Success || rs.vectorD().real().minCoeff() <= 0.0)
    fail(ErrorCode::UnsupportedObjective, "control weight D12^* D12 must be positive definite");
  const MatrixXcd Abar = A - B * rs.solve(S.adjoint());
  const MatrixXcd Qbar = Q - S * rs.solve(S.adjoint());
  const MatrixXcd G = B * rs.solve(B.adjoint());

  const double qscale = std::max({1.0, Q.norm(), S.norm()});
  if (Qbar.norm() <= 1e-12 * qscale) {
    Eigen::ComplexEigenSolver<MatrixXcd> es(Abar);
    if (es.eigenvalues().real().maxCoeff() <= 1e-9) return MatrixXcd::Zero(n, n);
  }

  MatrixXcd ham(2 * n, 2 * n);
  ham << Abar, -G, -Qbar, -Abar.adjoint();
  const MatrixXcd W = matrix_sign(ham);
  MatrixXcd lhs(2 * n, n), rhs(2 * n, n);
  lhs << W.topRightCorner(n, n), W.bottomRightCorner(n, n) + MatrixXcd::Identity(n, n);
  rhs << W.topLeftCorner(n, n) + MatrixXcd::Identity(n, n), W.bottomLeftCorner(n, n);
  const MatrixXcd P = -lhs.colPivHouseholderQr().solve(rhs);
  return 0.5 * (P + P.adjoint());
}

BaselineResult riccati_baseline(const param::PlantSpec& plant, const ConvKernel& C1, const ConvKernel& D12,
                                const ConvKernel& B1) {
  if (!plant.spatially_invariant()) fail(ErrorCode::UnsupportedPlant, "baseline needs a spatially-invariant plant");
  const ConvKernel A = plant.state_kernel();
  const ConvKernel B2 = plant.input_kernel();
  const int N = A.ring_size();
  BaselineResult out;
  out.per_frequency.resize(N);
  for (int k = 0; k < N; ++k) {
    const MatrixXcd Ak = A.static_symbol(k);
    const MatrixXcd Bk = B2.static_symbol(k);
    const MatrixXcd Ck = C1.static_symbol(k);
    const MatrixXcd Dk = D12.static_symbol(k);
    const MatrixXcd Wk = B1.static_symbol(k);
    try {
      const MatrixXcd P = care(Ak, Bk, Ck.adjoint() * Ck, Dk.adjoint() * Dk, Ck.adjoint() * Dk);
      out.per_frequency[k] = (Wk.adjoint() * P * Wk).trace().real();
    } catch (const Error& e) {
      out.per_frequency[k] = std::nan("");
      out.warnings.push_back("frequency " + std::to_string(k) + ": " + e.what());
    }
  }
  double acc = 0.0;
  for (double v : out.per_frequency) acc += v;
  out.cost = acc / N;
  return out;
}

}  // namespace locsyn::h2
