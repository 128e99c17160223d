#include <cmath>

#include "locsyn/error.hpp"
#include "locsyn/ratfun/serialize.hpp"
#include "locsyn/realize/controller.hpp"

namespace locsyn::realize {

namespace {

using Eigen::MatrixXd;
using ratfun::RatMatrix;

RatMatrix kernel_row(const ConvKernel& K, int M) {
  std::vector<RatMatrix> blocks;
  for (int i = -M; i <= M; ++i) blocks.push_back(K.at(i));
  return ratfun::hstack(blocks);
}

std::vector<double> grid(int points) {
  std::vector<double> w(points);
  for (int i = 0; i < points; ++i) w[i] = std::pow(10.0, -2.0 + 4.0 * i / std::max(1, points - 1));
  return w;
}

double rel_err(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  return (a - b).cwiseAbs().maxCoeff() / std::max(1.0, b.cwiseAbs().maxCoeff());
}

}  // namespace

StructuredRealization structured_realization(const ControllerImpl& impl) {
  const int M = impl.M;
  if (M < 0 || M > kMaxRealizedBand)
    fail(ErrorCode::UnsupportedBand, "structured realization supports band sizes up to " +
                                         std::to_string(kMaxRealizedBand));
  const int nx = impl.PhixTilde.cols();
  const int nu = impl.PhiuTilde.rows();
  StructuredRealization r;
  r.M = M;
  r.xi_block = ratfun::realize_ss(kernel_row(impl.PhixTilde, M));
  r.zeta_block = ratfun::realize_ss(kernel_row(impl.PhiuTilde, M));
  if (r.xi_block.D.size() > 0 && r.xi_block.D.cwiseAbs().maxCoeff() > 1e-9)
    fail(ErrorCode::ImproperTransfer, "feedback block is not strictly proper");
  const StateSpace& X = r.xi_block;
  const StateSpace& Z = r.zeta_block;
  r.xi_dim = X.states();
  r.zeta_dim = Z.states();
  r.state_dim = r.xi_dim + r.zeta_dim;
  const int d = r.state_dim;
  for (int i = -M; i <= M; ++i) {
    const MatrixXd Bx = X.B.middleCols((i + M) * nx, nx);
    const MatrixXd Bu = Z.B.middleCols((i + M) * nx, nx);
    const MatrixXd Du = Z.D.middleCols((i + M) * nx, nx);
    MatrixXd A = MatrixXd::Zero(d, d);
    A.topLeftCorner(r.xi_dim, r.xi_dim) = Bx * X.C;
    A.bottomLeftCorner(r.zeta_dim, r.xi_dim) = Bu * X.C;
    MatrixXd C = MatrixXd::Zero(nu, d);
    C.leftCols(r.xi_dim) = Du * X.C;
    if (i == 0) {
      A.topLeftCorner(r.xi_dim, r.xi_dim) += X.A;
      A.bottomRightCorner(r.zeta_dim, r.zeta_dim) = Z.A;
      C.rightCols(r.zeta_dim) = Z.C;
    }
    MatrixXd B(d, nx);
    B << Bx, Bu;
    r.A[i] = A;
    r.B[i] = B;
    r.C[i] = C;
    r.D[i] = Du;
  }
  return r;
}

StateSpace network(const StructuredRealization& r, int N, int nx, int nu) {
  const int d = r.state_dim;
  StateSpace sys;
  sys.A = MatrixXd::Zero(N * d, N * d);
  sys.B = MatrixXd::Zero(N * d, N * nx);
  sys.C = MatrixXd::Zero(N * nu, N * d);
  sys.D = MatrixXd::Zero(N * nu, N * nx);
  for (int n = 0; n < N; ++n)
    for (int i = -r.M; i <= r.M; ++i) {
      const int src = ((n - i) % N + N) % N;
      sys.A.block(n * d, src * d, d, d) += r.A.at(i);
      sys.B.block(n * d, src * nx, d, nx) += r.B.at(i);
      sys.C.block(n * nu, src * d, nu, d) += r.C.at(i);
      sys.D.block(n * nu, src * nx, nu, nx) += r.D.at(i);
    }
  return sys;
}

double block_transfer_error(const StructuredRealization& r, const ControllerImpl& impl, int points) {
  const RatMatrix kx = kernel_row(impl.PhixTilde, r.M);
  const RatMatrix ku = kernel_row(impl.PhiuTilde, r.M);
  double worst = 0.0;
  for (double w : grid(points)) {
    const cplx s(0.0, w);
    worst = std::max(worst, rel_err(r.xi_block.eval(s), kx.eval(s)));
    worst = std::max(worst, rel_err(r.zeta_block.eval(s), ku.eval(s)));
  }
  return worst;
}

double network_transfer_error(const StructuredRealization& r, const ControllerImpl& impl, int points) {
  const int N = impl.PhixTilde.ring_size();
  const StateSpace net = network(r, N, impl.PhixTilde.cols(), impl.PhiuTilde.rows());
  double worst = 0.0;
  for (double w : grid(points)) {
    const cplx s(0.0, w);
    worst = std::max(worst, rel_err(net.eval(s), controller_response(impl, s)));
  }
  return worst;
}

void to_json(nlohmann::json& j, const StructuredRealization& r) {
  nlohmann::json blocks = nlohmann::json::object();
  for (int i = -r.M; i <= r.M; ++i)
    blocks[std::to_string(i)] = {{"A", ratfun::matrix_to_json(r.A.at(i))},
                                 {"B", ratfun::matrix_to_json(r.B.at(i))},
                                 {"C", ratfun::matrix_to_json(r.C.at(i))},
                                 {"D", ratfun::matrix_to_json(r.D.at(i))}};
  j = nlohmann::json{{"M", r.M},
                     {"state_dim", r.state_dim},
                     {"xi_dim", r.xi_dim},
                     {"zeta_dim", r.zeta_dim},
                     {"xi_block", r.xi_block},
                     {"zeta_block", r.zeta_block},
                     {"blocks", blocks}};
}

}  // namespace locsyn::realize
