#include "locsyn/ratfun/statespace.hpp"

#include <cmath>
#include <string>

#include "locsyn/error.hpp"

namespace locsyn::ratfun {

namespace {

// Orthonormal basis of the Krylov space generated by A from the columns of V.
Eigen::MatrixXd krylov_basis(const Eigen::MatrixXd& A, const Eigen::MatrixXd& V, double tol) {
  const int n = static_cast<int>(A.rows());
  std::vector<Eigen::VectorXd> basis;
  const double a_ref = A.norm();
  const double v_ref = V.norm();
  auto try_add = [&](Eigen::VectorXd v, double ref) {
    if (ref == 0.0) return false;
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& q : basis) v -= q.dot(v) * q;
    const double nv = v.norm();
    if (nv <= tol * ref) return false;
    basis.push_back(v / nv);
    return true;
  };
  std::vector<Eigen::VectorXd> block;
  for (int j = 0; j < V.cols(); ++j)
    if (try_add(V.col(j), v_ref)) block.push_back(basis.back());
  while (!block.empty() && static_cast<int>(basis.size()) < n) {
    std::vector<Eigen::VectorXd> next;
    for (const auto& q : block)
      if (try_add(A * q, a_ref)) next.push_back(basis.back());
    block = std::move(next);
  }
  Eigen::MatrixXd Q(n, static_cast<Eigen::Index>(basis.size()));
  for (std::size_t k = 0; k < basis.size(); ++k) Q.col(static_cast<Eigen::Index>(k)) = basis[k];
  return Q;
}

}  // namespace

void StateSpace::validate() const {
  const auto n = A.rows();
  if (A.cols() != n || B.rows() != n || C.cols() != n || D.rows() != C.rows() || D.cols() != B.cols())
    fail(ErrorCode::ShapeError, "inconsistent state-space dimensions");
}

Eigen::MatrixXcd StateSpace::eval(cplx s) const {
  Eigen::MatrixXcd r = D.cast<cplx>();
  if (A.rows() == 0) return r;
  Eigen::MatrixXcd M = s * Eigen::MatrixXcd::Identity(A.rows(), A.cols()) - A.cast<cplx>();
  r += C.cast<cplx>() * M.partialPivLu().solve(B.cast<cplx>());
  return r;
}

Poly charpoly(const Eigen::MatrixXd& A) {
  const int n = static_cast<int>(A.rows());
  if (n == 0) return Poly::constant(1.0);
  Eigen::MatrixXd H = A;
  if (n > 2) H = Eigen::HessenbergDecomposition<Eigen::MatrixXd>(A).matrixH();
  std::vector<Poly> p(n + 1);
  p[0] = Poly::constant(1.0);
  for (int k = 1; k <= n; ++k) {
    p[k] = Poly{-H(k - 1, k - 1), 1.0} * p[k - 1];
    double prod = 1.0;
    for (int i = k - 1; i >= 1; --i) {
      prod *= H(i, i - 1);
      p[k] -= (H(i - 1, k - 1) * prod) * p[i - 1];
    }
  }
  return p[n];
}

StateSpace minimal_realization(const StateSpace& sys, double rank_tol) {
  sys.validate();
  if (sys.states() == 0) return sys;
  const Eigen::MatrixXd Qc = krylov_basis(sys.A, sys.B, rank_tol);
  const Eigen::MatrixXd A1 = Qc.transpose() * sys.A * Qc;
  const Eigen::MatrixXd B1 = Qc.transpose() * sys.B;
  const Eigen::MatrixXd C1 = sys.C * Qc;
  if (A1.rows() == 0) return {A1, B1, C1, sys.D};
  const Eigen::MatrixXd Qo = krylov_basis(A1.transpose(), C1.transpose(), rank_tol);
  return {Qo.transpose() * A1 * Qo, Qo.transpose() * B1, C1 * Qo, sys.D};
}

StateSpace realize_ss(const RatMatrix& G, double rank_tol) {
  if (!G.all_proper()) fail(ErrorCode::ImproperTransfer, "realization requires a proper transfer matrix");
  const int p = G.rows();
  const int q = G.cols();
  std::vector<Eigen::MatrixXd> As, Bs, Cs;
  Eigen::MatrixXd D = Eigen::MatrixXd::Zero(p, q);
  int total = 0;
  for (int j = 0; j < q; ++j) {
    std::vector<Poly> dens;
    for (int i = 0; i < p; ++i) {
      const RationalFn& g = G(i, j);
      if (g.is_zero()) continue;
      bool seen = false;
      for (const Poly& d : dens)
        if (coefficients_close(d, g.den(), 1e-12)) seen = true;
      if (!seen) dens.push_back(g.den());
    }
    Poly common = Poly::constant(1.0);
    for (const Poly& d : dens) common = common * d;
    const int n = common.degree();
    Eigen::MatrixXd Cj = Eigen::MatrixXd::Zero(p, n);
    for (int i = 0; i < p; ++i) {
      const RationalFn& g = G(i, j);
      if (g.is_zero()) continue;
      const Poly scaled = g.num() * common.divmod(g.den()).first;
      auto [quot, rem] = scaled.divmod(common);
      D(i, j) = quot[0];
      for (int k = 0; k < n; ++k) Cj(i, k) = rem[k];
    }
    Eigen::MatrixXd Aj = Eigen::MatrixXd::Zero(n, n);
    for (int k = 0; k + 1 < n; ++k) Aj(k, k + 1) = 1.0;
    for (int k = 0; k < n; ++k) Aj(n - 1, k) = -common[k];
    Eigen::MatrixXd Bj = Eigen::MatrixXd::Zero(n, 1);
    if (n > 0) Bj(n - 1, 0) = 1.0;
    As.push_back(Aj);
    Bs.push_back(Bj);
    Cs.push_back(Cj);
    total += n;
  }
  StateSpace sys{Eigen::MatrixXd::Zero(total, total), Eigen::MatrixXd::Zero(total, q), Eigen::MatrixXd::Zero(p, total), D};
  int off = 0;
  for (int j = 0; j < q; ++j) {
    const auto n = As[j].rows();
    sys.A.block(off, off, n, n) = As[j];
    sys.B.block(off, j, n, 1) = Bs[j];
    sys.C.block(0, off, p, n) = Cs[j];
    off += static_cast<int>(n);
  }
  return minimal_realization(sys, rank_tol);
}

RatMatrix tf_of_ss(const StateSpace& sys) {
  sys.validate();
  const Poly den = charpoly(sys.A);
  RatMatrix G(sys.outputs(), sys.inputs());
  for (int i = 0; i < sys.outputs(); ++i)
    for (int j = 0; j < sys.inputs(); ++j) {
      Poly num = Poly::constant(sys.D(i, j)) * den;
      if (sys.states() > 0) {
        const Poly shifted = charpoly(sys.A - sys.B.col(j) * sys.C.row(i));
        num += (shifted - den).trimmed(kDefaultTolerances.coefficient_trim, std::max(shifted.max_abs(), den.max_abs()));
      }
      G(i, j) = RationalFn(num, den);
    }
  return G;
}

}  // namespace locsyn::ratfun
