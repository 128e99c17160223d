#include "locsyn/ratfun/spectral.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

#include "locsyn/error.hpp"

namespace locsyn::ratfun {

namespace {

double axis_scale(const cplx& r) { return std::max(1.0, std::abs(r)); }

// Left-half-plane roots plus one of each pair of imaginary-axis roots.
std::vector<cplx> stable_half(const std::vector<cplx>& roots, double axis_tol, bool allow_axis) {
  std::vector<cplx> lhp, axis;
  int rhp = 0;
  for (const cplx& r : roots) {
    if (std::abs(r.real()) <= axis_tol * axis_scale(r)) {
      axis.push_back(cplx(0.0, r.imag()));
    } else if (r.real() < 0.0) {
      lhp.push_back(r);
    } else {
      ++rhp;
    }
  }
  if (static_cast<int>(lhp.size()) != rhp) fail(ErrorCode::NotFactorable, "roots are not symmetric about the axis");
  if (!axis.empty() && !allow_axis) fail(ErrorCode::NotFactorable, "pole on the imaginary axis");
  std::sort(axis.begin(), axis.end(), [](const cplx& a, const cplx& b) { return a.imag() < b.imag(); });
  // Axis roots of a nonnegative para-Hermitian function have even multiplicity.
  std::vector<bool> used(axis.size(), false);
  for (std::size_t i = 0; i < axis.size(); ++i) {
    if (used[i]) continue;
    std::size_t best = axis.size();
    for (std::size_t j = i + 1; j < axis.size(); ++j)
      if (!used[j] && (best == axis.size() || std::abs(axis[j] - axis[i]) < std::abs(axis[best] - axis[i]))) best = j;
    if (best == axis.size()) fail(ErrorCode::NotFactorable, "odd-multiplicity zero on the imaginary axis");
    used[i] = used[best] = true;
    lhp.push_back(0.5 * (axis[i] + axis[best]));
  }
  // Keep conjugate symmetry of axis representatives.
  for (cplx& r : lhp)
    if (r.real() == 0.0 && std::abs(r.imag()) <= axis_tol) r = 0.0;
  return lhp;
}

}  // namespace

StableSplit split_stable(const RationalFn& g, double axis_tol) {
  StableSplit out;
  if (g.is_zero()) return out;
  auto [q, r] = g.num().divmod(g.den());
  out.polynomial = q;
  if (r.is_zero()) return out;
  std::vector<cplx> st, an;
  for (const cplx& p : g.den().roots()) {
    if (std::abs(p.real()) <= axis_tol * axis_scale(p)) fail(ErrorCode::AxisPole, "pole on the imaginary axis");
    (p.real() < 0.0 ? st : an).push_back(p);
  }
  // The larger factor comes from dividing the denominator by the smaller one.
  Poly ds, da;
  if (an.size() <= st.size()) {
    da = Poly::from_roots(an);
    ds = g.den().divmod(da).first;
  } else {
    ds = Poly::from_roots(st);
    da = g.den().divmod(ds).first;
  }
  const int ns = ds.degree();
  const int na = da.degree();
  if (na == 0) {
    out.stable = RationalFn(r, g.den());
    return out;
  }
  if (ns == 0) {
    out.antistable = RationalFn(r, g.den());
    return out;
  }
  // r = x * da + y * ds with deg x < ns, deg y < na.
  const int n = ns + na;
  Eigen::MatrixXd S = Eigen::MatrixXd::Zero(n, n);
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n);
  for (int k = 0; k < ns; ++k)
    for (int i = 0; i <= na; ++i) S(k + i, k) += da[i];
  for (int k = 0; k < na; ++k)
    for (int i = 0; i <= ns; ++i) S(k + i, ns + k) += ds[i];
  for (int i = 0; i < n; ++i) rhs[i] = r[i];
  const Eigen::VectorXd sol = S.fullPivLu().solve(rhs);
  std::vector<double> x(sol.data(), sol.data() + ns);
  std::vector<double> y(sol.data() + ns, sol.data() + n);
  out.stable = RationalFn(Poly(x), ds);
  out.antistable = RationalFn(Poly(y), da);
  return out;
}

RationalFn spectral_factor(const RationalFn& phi, double tol) {
  if (phi.is_zero()) fail(ErrorCode::NotFactorable, "zero spectral density");
  if (!equal(phi, phi.para(), tol)) fail(ErrorCode::NotFactorable, "not para-Hermitian");
  double peak = 0.0;
  double w_peak = 1.0;
  double lowest = 0.0;
  for (int k = -40; k <= 40; ++k) {
    const double w = std::pow(10.0, 0.1 * k);
    const double v = phi.eval(cplx(0.0, w)).real();
    lowest = std::min(lowest, v);
    if (v > peak) {
      peak = v;
      w_peak = w;
    }
  }
  const double v0 = phi.eval(cplx(0.0, 0.0)).real();
  lowest = std::min(lowest, v0);
  if (peak <= 0.0 || lowest < -1e-9 * peak) fail(ErrorCode::NotFactorable, "not nonnegative on the imaginary axis");
  const double axis_tol = 1e-6;
  const Poly fn = Poly::from_roots(stable_half(phi.num().roots(), axis_tol, true));
  const Poly fd = Poly::from_roots(stable_half(phi.den().roots(), axis_tol, false));
  RationalFn f = RationalFn::unreduced(fn, fd);
  const double mag2 = std::norm(f.eval(cplx(0.0, w_peak)));
  const double gain = std::sqrt(phi.eval(cplx(0.0, w_peak)).real() / mag2);
  return RationalFn(fn * gain, fd);
}

}  // namespace locsyn::ratfun
