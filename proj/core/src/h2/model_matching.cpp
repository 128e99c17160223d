#include "locsyn/h2/model_matching.hpp"

#include "locsyn/error.hpp"
#include "locsyn/ratfun/norms.hpp"

namespace locsyn::h2 {

namespace {

Eigen::MatrixXd pointwise_constant(const ConvKernel& K) {
  if (!K.is_static()) fail(ErrorCode::UnsupportedObjective, "B1 must be a constant kernel");
  for (const auto& [m, g] : K.entries())
    if (m != 0) fail(ErrorCode::UnsupportedObjective, "B1 must be pointwise");
  return K.at(0).eval(0.0).real();
}

bool row_nonzero(const RatMatrix& g, int r) {
  for (int c = 0; c < g.cols(); ++c)
    if (!g(r, c).is_zero()) return true;
  return false;
}

}  // namespace

ModelMatchProblem assemble(const param::PlantSpec& plant, const ConvKernel& C1, const ConvKernel& D12,
                           const ConvKernel& B1, const param::ParamFamily& family, int M, int j, double gamma,
                           std::string descriptor) {
  const int N = plant.infinite ? sis::kInfiniteTruncation : plant.N;
  if (M < 0 || 2 * M + 1 > N) fail(ErrorCode::InvalidParameter, "band size must satisfy 2M+1 <= N");
  if (j < 0 || j >= N) fail(ErrorCode::IndexError, "disturbance site out of range");
  if (C1.rows() != D12.rows()) fail(ErrorCode::ShapeError, "C1 and D12 must have the same number of rows");
  if (C1.cols() != family.states() || D12.cols() != family.m || B1.rows() != family.states())
    fail(ErrorCode::ShapeError, "objective kernels do not match the parameterization dimensions");
  if (C1.ring_size() != N || D12.ring_size() != N || B1.ring_size() != N)
    fail(ErrorCode::ShapeError, "objective kernels live on a different ring");
  if (plant.infinite) {
    const int reach = std::max(C1.band(), D12.band()) + M;
    if (2 * reach + 1 > N) fail(ErrorCode::UnsupportedObjective, "C1/D12 band is unbounded on the infinite line");
  }

  ModelMatchProblem p;
  p.family = family;
  p.C1 = C1;
  p.D12 = D12;
  p.B1 = pointwise_constant(B1);
  p.N = N;
  p.infinite = plant.infinite;
  p.M = M;
  p.j = j;
  p.gamma = gamma;
  p.descriptor = std::move(descriptor);

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(p.B1);
  if (svd.rank() < p.B1.cols()) fail(ErrorCode::UnsupportedObjective, "B1 must have full column rank");

  const ConvKernel G = C1 * family.F + D12 * family.chi;
  const ConvKernel Lk = (C1 * family.L + D12 * family.eta) * RatMatrix(p.B1);
  const int m = family.m;
  const int q = p.q();
  const int nz = C1.rows();

  std::vector<RatMatrix> h_rows;
  std::vector<RatMatrix> u_rows;
  for (int c = 0; c < nz; ++c) {
    for (int n = 0; n < N; ++n) {
      const RatMatrix lh = Lk.at(n - j);
      RatMatrix hrow = lh.block(c, 0, 1, q);
      RatMatrix urow(1, p.unknowns());
      bool keep = row_nonzero(lh, c);
      for (int k = -M; k <= M; ++k) {
        const RatMatrix g = G.at(n - j - k);
        if (!row_nonzero(g, c)) continue;
        keep = true;
        urow.set_block(0, (k + M) * m, g.block(c, 0, 1, m));
      }
      if (!keep) continue;
      h_rows.push_back(hrow);
      u_rows.push_back(urow);
      p.row_index.emplace_back(c, n);
    }
  }
  if (h_rows.empty()) fail(ErrorCode::DegenerateInput, "objective has no support");
  p.H = ratfun::vstack(h_rows);
  p.U = ratfun::vstack(u_rows);
  return p;
}

ConvKernel theta_from_vartheta(const ModelMatchProblem& p, const RatMatrix& X) {
  const int m = p.m();
  if (X.rows() != p.unknowns() || X.cols() != p.q()) fail(ErrorCode::ShapeError, "vartheta has the wrong shape");
  const Eigen::MatrixXd pinv = p.B1.completeOrthogonalDecomposition().pseudoInverse();
  ConvKernel theta(p.N, m, p.family.states(), p.infinite);
  for (int k = -p.M; k <= p.M; ++k) theta.set(k, X.block((k + p.M) * m, 0, m, p.q()) * pinv);
  return theta;
}

RatMatrix vartheta_from_theta(const ModelMatchProblem& p, const ConvKernel& theta) {
  const int m = p.m();
  if (theta.band() > p.M) fail(ErrorCode::UnsupportedBand, "theta exceeds the band of the problem");
  RatMatrix X(p.unknowns(), p.q());
  for (int k = -p.M; k <= p.M; ++k) X.set_block((k + p.M) * m, 0, theta.at(k) * p.B1);
  return X;
}

double objective_value(const ModelMatchProblem& p, const RatMatrix& X) {
  return ratfun::h2_norm_sq(p.H + p.U * X);
}

}  // namespace locsyn::h2
