#include "locsyn/realize/simulate.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>
#include <random>
#include <thread>

#include "locsyn/error.hpp"

namespace locsyn::realize {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

MatrixXd dense_real(const ConvKernel& K) { return dense_eval(K, cplx(0.0, 0.0)).real(); }

int circular_distance(int a, int b, int N) {
  const int d = std::abs(a - b) % N;
  return std::min(d, N - d);
}

}  // namespace

ClosedLoop closed_loop(const param::PlantSpec& plant, const StructuredRealization& r, const ConvKernel& C1,
                       const ConvKernel& D12, const ConvKernel& B1) {
  if (!plant.spatially_invariant()) fail(ErrorCode::UnsupportedPlant, "closed-loop simulation needs a ring plant");
  const ConvKernel Ak = plant.state_kernel();
  const ConvKernel Bk = plant.input_kernel();
  if (!Ak.is_static() || !Bk.is_static() || !C1.is_static() || !D12.is_static() || !B1.is_static())
    fail(ErrorCode::UnsupportedPlant, "plant and objective kernels must be constant");
  ClosedLoop cl;
  cl.N = Ak.ring_size();
  cl.nx = Ak.rows();
  cl.nu = Bk.cols();
  cl.npsi = r.state_dim;
  cl.nw = B1.cols();
  const MatrixXd Ap = dense_real(Ak);
  const MatrixXd B2 = dense_real(Bk);
  const MatrixXd C = dense_real(C1);
  const MatrixXd D = dense_real(D12);
  const MatrixXd W = dense_real(B1);
  const StateSpace net = network(r, cl.N, cl.nx, cl.nu);
  const int n1 = cl.N * cl.nx;
  const int n2 = cl.N * cl.npsi;
  cl.A = MatrixXd::Zero(n1 + n2, n1 + n2);
  cl.A.topLeftCorner(n1, n1) = Ap + B2 * net.D;
  cl.A.topRightCorner(n1, n2) = B2 * net.C;
  cl.A.bottomLeftCorner(n2, n1) = net.B;
  cl.A.bottomRightCorner(n2, n2) = net.A;
  cl.Bw = MatrixXd::Zero(n1 + n2, W.cols());
  cl.Bw.topRows(n1) = W;
  cl.Cu = MatrixXd(net.D.rows(), n1 + n2);
  cl.Cu << net.D, net.C;
  cl.Cz = MatrixXd(C.rows(), n1 + n2);
  cl.Cz << C + D * net.D, D * net.C;
  return cl;
}

Eigen::MatrixXcd disturbance_to_state(const ClosedLoop& cl, cplx s) {
  const int n = cl.states();
  const Eigen::MatrixXcd sI = s * Eigen::MatrixXcd::Identity(n, n);
  const Eigen::MatrixXcd X = (sI - cl.A.cast<cplx>()).partialPivLu().solve(cl.Bw.cast<cplx>());
  return X.topRows(cl.N * cl.nx);
}

double default_step(const ClosedLoop& cl) {
  Eigen::EigenSolver<MatrixXd> es(cl.A, false);
  const double rho = es.eigenvalues().cwiseAbs().maxCoeff();
  return rho > 0.0 ? 0.02 / rho : 0.01;
}

Trajectory simulate(const ClosedLoop& cl, const SimOptions& opt, int band) {
  if (!(opt.T > 0.0)) fail(ErrorCode::InvalidParameter, "horizon must be positive");
  if (opt.site < 0 || opt.site >= cl.N) fail(ErrorCode::IndexError, "site out of range");
  Trajectory tr;
  tr.dt = opt.dt > 0.0 ? opt.dt : default_step(cl);
  const double h = tr.dt;
  const auto steps = static_cast<long>(std::ceil(opt.T / h - 1e-9));
  const int n = cl.states();

  VectorXd x = VectorXd::Zero(n);
  if (opt.initial.size() == n) x = opt.initial;
  if (opt.disturbance == Disturbance::Impulse) x += cl.Bw.col(opt.site * cl.nw);
  const double scale = 1.0 + x.norm();

  std::mt19937_64 rng(opt.seed);
  std::normal_distribution<double> normal(0.0, 1.0 / std::sqrt(h));
  VectorXd w = VectorXd::Zero(cl.Bw.cols());
  VectorXd drive = VectorXd::Zero(n);

  auto track = [&](const VectorXd& s) {
    if (band < 0) return;
    for (int site = 0; site < cl.N; ++site)
      if (circular_distance(site, opt.site, cl.N) > band)
        tr.max_outside_band = std::max(tr.max_outside_band, s.segment(site * cl.nx, cl.nx).cwiseAbs().maxCoeff());
  };

  for (long k = 0; k <= steps; ++k) {
    const double t = k * h;
    track(x);
    if (opt.record_every > 0 && k % opt.record_every == 0) {
      tr.t.push_back(t);
      tr.state.push_back(x);
    }
    if (k == steps) break;
    if (t >= opt.warmup - 1e-12) tr.energy += (cl.Cz * x).squaredNorm() * h;
    if (opt.disturbance == Disturbance::WhiteNoise) {
      for (Eigen::Index i = 0; i < w.size(); ++i) w(i) = normal(rng);
      drive = cl.Bw * w;
    }
    const VectorXd k1 = cl.A * x + drive;
    const VectorXd k2 = cl.A * (x + 0.5 * h * k1) + drive;
    const VectorXd k3 = cl.A * (x + 0.5 * h * k2) + drive;
    const VectorXd k4 = cl.A * (x + h * k3) + drive;
    x += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if (!x.allFinite() || x.norm() > 1e10 * scale)
      fail(ErrorCode::StepTooLarge, "integration blew up at t=" + std::to_string(t) + "; reduce dt");
  }
  tr.final_norm = x.norm();
  return tr;
}

MonteCarloResult monte_carlo_h2(const ClosedLoop& cl, int runs, double T, double warmup, std::uint64_t seed,
                                double dt, int threads) {
  if (runs < 1 || !(T > warmup)) fail(ErrorCode::InvalidParameter, "need runs >= 1 and T > warmup");
  const double h = dt > 0.0 ? dt : default_step(cl);
  std::vector<double> est(runs, 0.0);
  int pool = threads > 0 ? threads : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  pool = std::min(pool, runs);
  auto worker = [&](int first) {
    for (int r = first; r < runs; r += pool) {
      SimOptions opt;
      opt.disturbance = Disturbance::WhiteNoise;
      opt.T = T;
      opt.dt = h;
      opt.seed = seed + static_cast<std::uint64_t>(r);
      opt.warmup = warmup;
      est[r] = simulate(cl, opt).energy / (T - warmup) / cl.N;
    }
  };
  if (pool == 1) {
    worker(0);
  } else {
    std::vector<std::thread> ts;
    for (int i = 0; i < pool; ++i) ts.emplace_back(worker, i);
    for (auto& t : ts) t.join();
  }
  MonteCarloResult out;
  out.runs = runs;
  for (double e : est) out.estimate += e;
  out.estimate /= runs;
  double var = 0.0;
  for (double e : est) var += (e - out.estimate) * (e - out.estimate);
  out.std_error = runs > 1 ? std::sqrt(var / (runs - 1) / runs) : 0.0;
  return out;
}

void write_trajectory_csv(std::ostream& os, const ClosedLoop& cl, const Trajectory& tr) {
  os << "t,site";
  for (int i = 0; i < cl.nx; ++i) os << ",x" << i;
  for (int i = 0; i < cl.nu; ++i) os << ",u" << i;
  for (int i = 0; i < cl.npsi; ++i) os << ",psi" << i;
  os << '\n';
  os << std::setprecision(10);
  const int n1 = cl.N * cl.nx;
  for (std::size_t k = 0; k < tr.t.size(); ++k) {
    const VectorXd& s = tr.state[k];
    const VectorXd u = cl.Cu * s;
    for (int site = 0; site < cl.N; ++site) {
      os << tr.t[k] << ',' << site;
      for (int i = 0; i < cl.nx; ++i) os << ',' << s(site * cl.nx + i);
      for (int i = 0; i < cl.nu; ++i) os << ',' << u(site * cl.nu + i);
      for (int i = 0; i < cl.npsi; ++i) os << ',' << s(n1 + site * cl.npsi + i);
      os << '\n';
    }
  }
}

}  // namespace locsyn::realize
