#include <chrono>
#include <cmath>
#include <numbers>

#include "locsyn/error.hpp"
#include "locsyn/h2/synthesis.hpp"
#include "locsyn/ratfun/norms.hpp"

namespace locsyn::h2 {

namespace {

using ratfun::cplx;
using ratfun::Poly;

struct Node {
  double w;       // frequency
  double weight;  // includes the 1/pi of the one-sided integral
};

// Gauss-Legendre on (0, pi/2) mapped through w = tan(phi).
std::vector<Node> tangent_nodes(int n) {
  std::vector<Node> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 1.0;
    for (int it = 0; it < 100; ++it) {
      const double p0 = std::legendre(n, x);
      const double p1 = std::legendre(n - 1, x);
      dp = n * (x * p0 - p1) / (x * x - 1.0);
      const double dx = p0 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    const double wgl = 2.0 / ((1.0 - x * x) * dp * dp);
    const double phi = std::numbers::pi / 4.0 * (x + 1.0);
    const double c = std::cos(phi);
    out.push_back({std::tan(phi), wgl * std::numbers::pi / 4.0 / (c * c) / std::numbers::pi});
  }
  return out;
}

Eigen::VectorXcd laguerre_values(int K, cplx s) {
  Eigen::VectorXcd b(K);
  for (int k = 0; k < K; ++k) b(k) = laguerre(k + 1, s);
  return b;
}

}  // namespace

cplx laguerre(int k, cplx s) {
  return std::sqrt(2.0) * std::pow((s - 1.0) / (s + 1.0), k - 1) / (s + 1.0);
}

RationalFn laguerre_sum(const std::vector<double>& c) {
  const int K = static_cast<int>(c.size());
  if (K == 0) return {};
  std::vector<Poly> up(K), down(K + 1);
  up[0] = Poly::constant(1.0);
  down[0] = Poly::constant(1.0);
  for (int i = 1; i < K; ++i) up[i] = up[i - 1] * Poly{-1.0, 1.0};
  for (int i = 1; i <= K; ++i) down[i] = down[i - 1] * Poly{1.0, 1.0};
  Poly num;
  for (int k = 1; k <= K; ++k)
    if (c[k - 1] != 0.0) num += (std::sqrt(2.0) * c[k - 1]) * (up[k - 1] * down[K - k]);
  return RationalFn::unreduced(num, down[K]);
}

SynthesisResult solve_numeric(const ModelMatchProblem& p, const NumericOptions& opt) {
  const auto t0 = std::chrono::steady_clock::now();
  if (opt.basis_size < 1) fail(ErrorCode::InvalidParameter, "basis size must be positive");
  if (opt.nodes < 8) fail(ErrorCode::InvalidParameter, "too few quadrature nodes");
  const int K = opt.basis_size;
  const int n = p.unknowns();
  const int q = p.q();
  const int dim = n * K;

  Eigen::MatrixXd gram = Eigen::MatrixXd::Zero(dim, dim);
  Eigen::MatrixXd lin = Eigen::MatrixXd::Zero(dim, q);
  Eigen::VectorXd c0 = Eigen::VectorXd::Zero(q);
  for (const Node& node : tangent_nodes(opt.nodes)) {
    const cplx s(0.0, node.w);
    const Eigen::MatrixXcd u = p.U.eval(s);
    const Eigen::MatrixXcd h = p.H.eval(s);
    const Eigen::MatrixXcd W = u.adjoint() * u;
    const Eigen::MatrixXcd g = u.adjoint() * h;
    const Eigen::VectorXcd b = laguerre_values(K, s);
    const Eigen::MatrixXcd B = b.conjugate() * b.transpose();
    const Eigen::MatrixXd Bre = B.real();
    const Eigen::MatrixXd Bim = B.imag();
    for (int a = 0; a < n; ++a)
      for (int bb = a; bb < n; ++bb) {
        const cplx wab = W(a, bb);
        if (wab == 0.0) continue;
        gram.block(a * K, bb * K, K, K) += node.weight * (wab.real() * Bre - wab.imag() * Bim);
      }
    for (int c = 0; c < q; ++c) {
      c0(c) += node.weight * h.col(c).squaredNorm();
      for (int a = 0; a < n; ++a)
        lin.block(a * K, c, K, 1) += node.weight * (b.conjugate() * g(a, c)).real();
    }
  }
  for (int a = 0; a < n; ++a)
    for (int bb = a + 1; bb < n; ++bb) gram.block(bb * K, a * K, K, K) = gram.block(a * K, bb * K, K, K).transpose();

  SynthesisResult res;
  res.solver = Solver::NumericLS;
  res.diagnostics.basis_size = K;
  res.diagnostics.nodes = opt.nodes;

  Eigen::MatrixXd xi;
  Eigen::LDLT<Eigen::MatrixXd> ldlt(gram);
  const auto dvec = ldlt.vectorD();
  const double dmax = dvec.cwiseAbs().maxCoeff();
  if (ldlt.info() != Eigen::Success || dvec.minCoeff() <= 1e-13 * dmax) {
    const double ridge = 1e-12 * std::max(1.0, gram.trace() / dim);
    gram.diagonal().array() += ridge;
    res.diagnostics.regularized = true;
    res.diagnostics.warnings.push_back("normal equations rank deficient; ridge " + std::to_string(ridge));
    xi = -gram.ldlt().solve(lin);
  } else {
    xi = -ldlt.solve(lin);
  }
  res.diagnostics.quadrature_cost = c0.sum() + (lin.transpose() * xi).trace();

  res.vartheta = RatMatrix(n, q);
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < q; ++c) {
      std::vector<double> coef(xi.data() + c * dim + a * K, xi.data() + c * dim + (a + 1) * K);
      res.vartheta(a, c) = laguerre_sum(coef);
    }

  // Independent objective on a denser grid, evaluating the basis directly.
  double check = 0.0;
  for (const Node& node : tangent_nodes(opt.check_nodes)) {
    const cplx s(0.0, node.w);
    const Eigen::VectorXcd b = laguerre_values(K, s);
    Eigen::MatrixXcd x(n, q);
    for (int a = 0; a < n; ++a)
      for (int c = 0; c < q; ++c) x(a, c) = (b.transpose() * xi.block(a * K, c, K, 1).cast<cplx>())(0, 0);
    check += node.weight * (p.H.eval(s) + p.U.eval(s) * x).squaredNorm();
  }
  res.diagnostics.check_cost = check;
  res.full_cost = check;

  res.theta = theta_from_vartheta(p, res.vartheta);
  std::tie(res.Phix, res.Phiu) = param::phis_from_theta(p.family, res.theta);
  try {
    const InnerOuter io = inner_outer(p.U);
    const RatMatrix r = io.Ui.para() * p.H;
    double projected = 0.0;
    for (int k = 0; k < r.rows(); ++k)
      for (int c = 0; c < q; ++c) projected += l2_norm_sq(r(k, c));
    res.complement_cost = ratfun::h2_norm_sq(p.H) - projected;
    res.reducible_cost = res.full_cost - res.complement_cost;
    res.diagnostics.inner_defect = inner_defect(io);
  } catch (const Error& e) {
    res.complement_cost = std::nan("");
    res.reducible_cost = std::nan("");
    res.diagnostics.warnings.push_back(std::string("cost split unavailable: ") + e.what());
  }
  res.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

}  // namespace locsyn::h2
