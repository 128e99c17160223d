#include "locsyn/param/varying.hpp"

#include <string>

#include "locsyn/error.hpp"

namespace locsyn::param {

using ratfun::Poly;

VaryingFirstOrderFamily family_varying_1st(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size() || a.empty()) fail(ErrorCode::ShapeError, "a and b must have the same nonzero length");
  VaryingFirstOrderFamily fam{{}, a, b};
  for (std::size_t n = 0; n < a.size(); ++n) {
    if (b[n] == 0.0) fail(ErrorCode::NotControllable, "b_" + std::to_string(n) + " is zero");
    SiteTriple t;
    if (a[n] < 0.0) {
      t.stable = true;
      t.alpha = 1.0;
      t.beta = 0.0;
      t.gamma = RationalFn::unreduced(Poly::constant(1.0), Poly{-a[n], 1.0});
    } else {
      t.alpha = RationalFn::unreduced(Poly{-a[n], 1.0}, Poly{1.0, 1.0});
      t.beta = RationalFn::unreduced(Poly::constant(-(a[n] + 1.0) / b[n]), Poly{1.0, 1.0});
      t.gamma = RationalFn::unreduced(Poly::constant(1.0), Poly{1.0, 1.0});
    }
    fam.sites.push_back(t);
  }
  return fam;
}

std::pair<RatMatrix, RatMatrix> phis_varying_1st(const VaryingFirstOrderFamily& fam, const RatMatrix& theta) {
  const int N = static_cast<int>(fam.sites.size());
  if (theta.rows() != N || theta.cols() != N) fail(ErrorCode::ShapeError, "theta must be N x N");
  RatMatrix phix(N, N), phiu(N, N);
  for (int i = 0; i < N; ++i) {
    const SiteTriple& t = fam.sites[i];
    for (int j = 0; j < N; ++j) {
      phix(i, j) = fam.b[i] * t.gamma * theta(i, j);
      phiu(i, j) = t.alpha * theta(i, j);
    }
    phix(i, i) += t.gamma;
    phiu(i, i) += t.beta;
  }
  return {phix, phiu};
}

VaryingNthFamily family_varying_nth(const std::vector<Eigen::MatrixXd>& A, const std::vector<Eigen::MatrixXd>& B2) {
  if (A.size() != B2.size() || A.empty()) fail(ErrorCode::ShapeError, "per-site A and B2 lists must match");
  VaryingNthFamily fam;
  for (std::size_t n = 0; n < A.size(); ++n) {
    const auto form = detect_canonical(A[n], B2[n], 1.0);
    if (!form) fail(ErrorCode::WrongFamily, "site " + std::to_string(n) + " is not in block controllable-canonical form");
    fam.sites.push_back(family_from_coeffs(form->coeffs, form->m, 1.0));
    fam.state_offset.push_back(fam.total_states);
    fam.input_offset.push_back(fam.total_inputs);
    fam.total_states += fam.sites.back().states();
    fam.total_inputs += fam.sites.back().m;
  }
  fam.A = Eigen::MatrixXd::Zero(fam.total_states, fam.total_states);
  fam.B2 = Eigen::MatrixXd::Zero(fam.total_states, fam.total_inputs);
  for (std::size_t n = 0; n < A.size(); ++n) {
    fam.A.block(fam.state_offset[n], fam.state_offset[n], A[n].rows(), A[n].cols()) = A[n];
    fam.B2.block(fam.state_offset[n], fam.input_offset[n], B2[n].rows(), B2[n].cols()) = B2[n];
  }
  return fam;
}

std::pair<RatMatrix, RatMatrix> phis_varying_nth(const VaryingNthFamily& fam, const RatMatrix& theta) {
  if (theta.rows() != fam.total_inputs || theta.cols() != fam.total_states)
    fail(ErrorCode::ShapeError, "theta must be total_inputs x total_states");
  RatMatrix phix(fam.total_states, fam.total_states);
  RatMatrix phiu(fam.total_inputs, fam.total_states);
  const std::size_t N = fam.sites.size();
  for (std::size_t i = 0; i < N; ++i) {
    const ParamFamily& fi = fam.sites[i];
    for (std::size_t j = 0; j < N; ++j) {
      const ParamFamily& fj = fam.sites[j];
      const RatMatrix th = theta.block(fam.input_offset[i], fam.state_offset[j], fi.m, fj.states());
      RatMatrix bx = fi.F * th;
      RatMatrix bu = fi.chi * th;
      if (i == j) {
        bx += fi.L;
        bu += fi.eta;
      }
      phix.set_block(fam.state_offset[i], fam.state_offset[j], bx);
      phiu.set_block(fam.input_offset[i], fam.state_offset[j], bu);
    }
  }
  return {phix, phiu};
}

}  // namespace locsyn::param
