#include "locsyn/apps/closed_forms.hpp"

#include <cmath>

#include "locsyn/error.hpp"

namespace locsyn::apps {

namespace {

using ratfun::Poly;
using ratfun::RationalFn;

// c / (r + gamma s)
RationalFn lag(double c, double r, double gamma) { return RationalFn(Poly::constant(c), Poly{r, gamma}); }

AnalyticOracle literature(Metric metric, int M, double g, int N) {
  AnalyticOracle o;
  o.full_cost = std::nan("");
  const double sq2 = std::sqrt(2.0);
  const double sq3 = std::sqrt(3.0);
  if (metric == Metric::LocalError && M == 1) {
    const double a = std::sqrt(2.0 - sq2), b = std::sqrt(2.0 + sq2);
    const Poly den = 2.0 * (Poly{a, g} * Poly{b, g});
    const Poly num0 = Poly{2.0 * sq2, -2.0 * g * g} + g * (a + b) * Poly{-1.0, 1.0};
    const Poly num1 = (g * (a - b)) * Poly{1.0, 1.0};
    o.theta[0] = RationalFn(num0, den);
    o.theta[1] = o.theta[-1] = RationalFn(num1, sq2 * den);
    o.reducible_cost = g / 4.0 * (a + b);
  } else if (metric == Metric::LocalError && M == 2) {
    const double r1 = std::sqrt(2.0 - sq3), r2 = std::sqrt(2.0 + sq3);
    o.theta[0] = (-1.0 / 3.0) * (lag(g - r1, r1, g) + lag(g - sq2, sq2, g) + lag(g - r2, r2, g));
    o.theta[1] = o.theta[-1] = (-1.0 / (2.0 * sq3)) * (lag(g - r1, r1, g) + lag(r2 - g, r2, g));
    o.theta[2] = o.theta[-2] = (1.0 / 6.0) * (lag(r1 - g, r1, g) + lag(2.0 * (g - sq2), sq2, g) + lag(r2 - g, r2, g));
    o.reducible_cost = g / 6.0 * (r1 + sq2 + r2);
  } else if (metric == Metric::DeviationFromAverage && M == 1) {
    const double r = std::sqrt(1.0 - 3.0 / N);
    o.theta[0] = lag(2.0 * (g - 1.0) / 3.0, 1.0, g) - lag((r - g) / 3.0, r, g);
    o.theta[1] = o.theta[-1] = lag((g - 1.0) / 3.0, 1.0, g) - lag((r - g) / 3.0, r, g);
    o.reducible_cost = g * (1.0 / 3.0 + std::sqrt(1.0 - 3.0 / N) / 6.0);
  } else if (metric == Metric::DeviationFromAverage && M == 2) {
    const double r = std::sqrt(1.0 - 5.0 / N);
    o.theta[0] = -0.25 * lag(1.0 - g, 1.0, g) + lag((g - r) / 5.0, r, g);
    o.theta[1] = o.theta[-1] = 0.2 * lag(1.0 - g, 1.0, g) + lag((g - r) / 5.0, r, g);
    o.theta[2] = o.theta[-2] = o.theta[1];
    o.reducible_cost = g * (1.0 / 8.0 + std::sqrt(1.0 - 5.0 / N) / 10.0);
  } else {
    fail(ErrorCode::OracleUnavailable, "no published closed form for this metric and band size");
  }
  return o;
}

AnalyticOracle rederived(Metric metric, int M, double g, int N) {
  const int n = 2 * M + 1;
  if (M < 0 || n > N) fail(ErrorCode::OracleUnavailable, "band size must satisfy 2M+1 <= N");
  const sis::ConvKernel c = metric_kernel(metric, N);
  // Gram of the state rows of U: T_kl = sum_i c_{i-k} c_{i-l} over the ring.
  Eigen::MatrixXd T = Eigen::MatrixXd::Zero(n, n);
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l)
      for (int i = 0; i < N; ++i)
        T(k, l) += c.at(i - (k - M)).eval(0.0).real()(0, 0) * c.at(i - (l - M)).eval(0.0).real()(0, 0);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(T);
  const Eigen::MatrixXd& V = es.eigenvectors();
  const Eigen::VectorXd& lam = es.eigenvalues();

  AnalyticOracle o;
  std::vector<RationalFn> t(n);
  for (int i = 0; i < n; ++i) {
    const double w = V(M, i) * V(M, i);
    if (w < 1e-14) continue;
    if (lam(i) < 1e-12) fail(ErrorCode::OracleUnavailable, "optimum is not attained: a mode has no state weight");
    const double r = std::sqrt(lam(i));
    t[i] = lag(g - r, r, g);
    o.full_cost += g * w * r;
  }
  for (int k = -M; k <= M; ++k) {
    RationalFn th;
    for (int i = 0; i < n; ++i) {
      const double w = V(k + M, i) * V(M, i);
      if (std::abs(w) > 1e-14 && !t[i].is_zero()) th += w * t[i];
    }
    o.theta[k] = th;
  }
  o.reducible_cost = 0.5 * o.full_cost;
  return o;
}

}  // namespace

AnalyticOracle analytic_oracle(Metric metric, int M, double gamma, int N, FormSource src) {
  if (!(gamma > 0.0)) fail(ErrorCode::InvalidParameter, "gamma must be positive");
  return src == FormSource::Literature ? literature(metric, M, gamma, N) : rederived(metric, M, gamma, N);
}

LiteratureClosedLoops literature_closed_loops(double g) {
  const double sq2 = std::sqrt(2.0);
  const double a = std::sqrt(2.0 - sq2), b = std::sqrt(2.0 + sq2);
  const Poly ab = Poly{a, g} * Poly{b, g};
  const Poly sp1{1.0, 1.0};
  LiteratureClosedLoops out;
  out.Phix0 = RationalFn(Poly{4.0 * sq2 - g * (a + b), 3.0 * g * (a + b) - 2.0 * g * g, 2.0 * g * g}, 4.0 * (sp1 * ab));
  out.Phix1 = RationalFn(Poly::constant(g * (a - b)), 2.0 * sq2 * ab);
  out.Phiu0 = RationalFn(Poly{-4.0 * sq2, -3.0 * g * (a + b) - 2.0 * sq2, -g * (a + b) - 2.0 * g * g},
                         4.0 * (sp1 * ab));
  out.Phiu1 = RationalFn(Poly{2.0 * sq2, g * (a + b)}, 2.0 * ab);
  return out;
}

LiteratureRealization literature_realization(double g) {
  const double sq2 = std::sqrt(2.0);
  const double a = std::sqrt(2.0 - sq2), b = std::sqrt(2.0 + sq2);
  const double g2 = g * g;
  LiteratureRealization out;
  out.Ax = (Eigen::MatrixXd(3, 3) << -(g + a + b) / g, 1.0, 0.0,  //
            (a + b) / g + sq2 / g2, 0.0, 1.0,                        //
            sq2 / g2, 0.0, 0.0)
               .finished();
  out.Cx = (Eigen::MatrixXd(1, 3) << 1.0, 0.0, 0.0).finished();
  out.Bx = (Eigen::MatrixXd(3, 3) << 0.0, 2.0 * g2, 0.0,                              //
            g * (a - b), 3.0 * g * (a + b) - 2.0 * g2, g * (a - b),                   //
            g * (a - b), 4.0 * sq2 - g * (a + b), g * (a - b))
               .finished();
  const double e1 = (a + b) / (2.0 * g);
  const double e2 = sq2 / g2 + (a + b) / (2.0 * g);
  out.Bu = (Eigen::MatrixXd(3, 3) << e1, -(a + b + 2.0 * g) / (4.0 * g), e1,          //
            e2, -3.0 * (a + b) / (4.0 * g) - 1.0 / (sq2 * g2), e2,                   //
            sq2 / g2, -sq2 / g2, sq2 / g2)
               .finished();
  return out;
}

}  // namespace locsyn::apps
