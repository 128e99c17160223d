#include <algorithm>
#include <chrono>
#include <cmath>

#include "locsyn/error.hpp"
#include "locsyn/h2/synthesis.hpp"
#include "locsyn/ratfun/norms.hpp"
#include "locsyn/ratfun/spectral.hpp"

namespace locsyn::h2 {

std::string to_string(Solver s) { return s == Solver::Exact ? "exact" : "numeric"; }

namespace {
constexpr double kExactConsistency = 1e-6;
}  // namespace

SynthesisResult solve_exact(const ModelMatchProblem& p) {
  const auto t0 = std::chrono::steady_clock::now();
  const InnerOuter io = inner_outer(p.U);
  const int n = p.unknowns();
  const int q = p.q();
  const RatMatrix r = io.Ui.para() * p.H;

  SynthesisResult res;
  res.solver = Solver::Exact;
  res.vartheta = RatMatrix(n, q);
  double projected = 0.0;
  double reducible = 0.0;
  for (int c = 0; c < q; ++c) {
    for (int k = 0; k < n; ++k) {
      if (r(k, c).is_zero()) continue;
      const auto parts = ratfun::split_stable(r(k, c));
      if (!parts.polynomial.is_zero() && parts.polynomial.max_abs() > 1e-10 * r(k, c).num().max_abs())
        fail(ErrorCode::NormUndefined, "projection has a polynomial part");
      const double a2 = ratfun::h2_norm_sq(parts.antistable.para());
      reducible += a2;
      projected += a2 + ratfun::h2_norm_sq(parts.stable);
      if (parts.stable.is_zero()) continue;
      const RationalFn step = -parts.stable * RationalFn(io.f[k].den(), io.f[k].num());
      for (int i = 0; i < n; ++i)
        if (io.V(i, k) != 0.0) res.vartheta(i, c) += io.V(i, k) * step;
    }
  }
  res.theta = theta_from_vartheta(p, res.vartheta);
  std::tie(res.Phix, res.Phiu) = param::phis_from_theta(p.family, res.theta);
  res.reducible_cost = reducible;
  res.complement_cost = ratfun::h2_norm_sq(p.H) - projected;
  res.full_cost = objective_value(p, res.vartheta);
  const double split = res.reducible_cost + res.complement_cost;
  if (!(std::abs(res.full_cost - split) <= kExactConsistency * std::max(1.0, std::abs(split))))
    fail(ErrorCode::NotFactorable, "exact factorization lost accuracy: full cost " + std::to_string(res.full_cost) +
                                       " against decomposition " + std::to_string(split));
  res.diagnostics.inner_defect = inner_defect(io);
  res.diagnostics.quadrature_cost = res.reducible_cost + res.complement_cost;
  res.diagnostics.check_cost = res.full_cost;
  res.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

}  // namespace locsyn::h2
