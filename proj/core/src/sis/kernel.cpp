#include "locsyn/sis/kernel.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "locsyn/error.hpp"
#include "locsyn/ratfun/norms.hpp"

namespace locsyn::sis {

namespace {

void require_compatible(const ConvKernel& a, const ConvKernel& b) {
  if (a.ring_size() != b.ring_size()) fail(ErrorCode::ShapeError, "kernels live on different rings");
}

}  // namespace

ConvKernel::ConvKernel(int N, int rows, int cols, bool infinite)
    : n_(infinite ? kInfiniteTruncation : N), infinite_(infinite), rows_(rows), cols_(cols) {
  if (n_ < 1 || n_ % 2 == 0) fail(ErrorCode::InvalidParameter, "ring size must be odd and positive, got " + std::to_string(n_));
  if (rows < 0 || cols < 0) fail(ErrorCode::ShapeError, "negative block dimension");
}

ConvKernel ConvKernel::identity(int N, int n, bool infinite) {
  return pointwise(N, RatMatrix::identity(n), infinite);
}

ConvKernel ConvKernel::pointwise(int N, const RatMatrix& g, bool infinite) {
  ConvKernel k(N, g.rows(), g.cols(), infinite);
  k.set(0, g);
  return k;
}

ConvKernel ConvKernel::from_constants(int N, const std::map<int, Eigen::MatrixXd>& entries, bool infinite) {
  if (entries.empty()) fail(ErrorCode::ShapeError, "no entries");
  const auto& first = entries.begin()->second;
  ConvKernel k(N, static_cast<int>(first.rows()), static_cast<int>(first.cols()), infinite);
  for (const auto& [m, v] : entries) k.add(m, RatMatrix(v));
  return k;
}

int ConvKernel::wrap(int m) const {
  int r = ((m % n_) + n_) % n_;
  if (r > (n_ - 1) / 2) r -= n_;
  return r;
}

void ConvKernel::set(int m, const RatMatrix& g) {
  if (g.rows() != rows_ || g.cols() != cols_) fail(ErrorCode::ShapeError, "kernel entry has the wrong block shape");
  const int w = wrap(m);
  if (g.is_zero()) {
    entries_.erase(w);
  } else {
    entries_[w] = g;
  }
}

void ConvKernel::add(int m, const RatMatrix& g) {
  const int w = wrap(m);
  auto it = entries_.find(w);
  if (it == entries_.end()) {
    set(w, g);
  } else {
    set(w, it->second + g);
  }
}

RatMatrix ConvKernel::at(int m) const {
  auto it = entries_.find(wrap(m));
  return it == entries_.end() ? RatMatrix(rows_, cols_) : it->second;
}

int ConvKernel::band() const {
  int b = -1;
  for (const auto& [m, g] : entries_) b = std::max(b, std::abs(m));
  return b;
}

bool ConvKernel::is_static() const {
  for (const auto& [m, g] : entries_)
    for (int i = 0; i < g.rows(); ++i)
      for (int j = 0; j < g.cols(); ++j)
        if (!g(i, j).is_constant()) return false;
  return true;
}

Eigen::MatrixXcd ConvKernel::symbol(int k, cplx s) const {
  Eigen::MatrixXcd r = Eigen::MatrixXcd::Zero(rows_, cols_);
  for (const auto& [m, g] : entries_) {
    const double ph = -2.0 * std::numbers::pi * static_cast<double>(k) * m / n_;
    r += std::polar(1.0, ph) * g.eval(s);
  }
  return r;
}

Eigen::MatrixXcd ConvKernel::static_symbol(int k) const {
  if (!is_static()) fail(ErrorCode::InvalidParameter, "kernel is not static");
  return symbol(k, 0.0);
}

ConvKernel compose(const ConvKernel& a, const ConvKernel& b) {
  require_compatible(a, b);
  if (a.cols() != b.rows()) fail(ErrorCode::ShapeError, "kernel composition shape mismatch");
  ConvKernel r(a.ring_size(), a.rows(), b.cols());
  if (a.infinite()) r = ConvKernel(0, a.rows(), b.cols(), true);
  for (const auto& [ma, ga] : a.entries())
    for (const auto& [mb, gb] : b.entries()) r.add(ma + mb, ga * gb);
  return r;
}

ConvKernel operator+(const ConvKernel& a, const ConvKernel& b) {
  require_compatible(a, b);
  ConvKernel r = a;
  for (const auto& [m, g] : b.entries()) r.add(m, g);
  return r;
}

ConvKernel operator-(const ConvKernel& a, const ConvKernel& b) {
  require_compatible(a, b);
  ConvKernel r = a;
  for (const auto& [m, g] : b.entries()) r.add(m, -g);
  return r;
}

ConvKernel operator*(const RatMatrix& g, const ConvKernel& k) {
  ConvKernel r = k.infinite() ? ConvKernel(0, g.rows(), k.cols(), true) : ConvKernel(k.ring_size(), g.rows(), k.cols());
  for (const auto& [m, e] : k.entries()) r.set(m, g * e);
  return r;
}

ConvKernel operator*(const ConvKernel& k, const RatMatrix& g) {
  ConvKernel r = k.infinite() ? ConvKernel(0, k.rows(), g.cols(), true) : ConvKernel(k.ring_size(), k.rows(), g.cols());
  for (const auto& [m, e] : k.entries()) r.set(m, e * g);
  return r;
}

ConvKernel operator*(const RationalFn& g, const ConvKernel& k) {
  ConvKernel r = k;
  for (const auto& [m, e] : k.entries()) r.set(m, g * e);
  return r;
}

RatMatrix apply_basis(const ConvKernel& K, int j) {
  const int N = K.ring_size();
  if (j < 0 || j >= N) fail(ErrorCode::IndexError, "site index out of range");
  RatMatrix out(N * K.rows(), K.cols());
  for (int n = 0; n < N; ++n) out.set_block(n * K.rows(), 0, K.at(n - j));
  return out;
}

double per_site_h2_sq(const ConvKernel& K) {
  double acc = 0.0;
  for (const auto& [m, g] : K.entries()) acc += ratfun::h2_norm_sq(g);
  return acc;
}

RatMatrix circulant(const ConvKernel& K) {
  const int N = K.ring_size();
  RatMatrix out(N * K.rows(), N * K.cols());
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      auto it = K.entries().find(K.wrap(i - j));
      if (it != K.entries().end()) out.set_block(i * K.rows(), j * K.cols(), it->second);
    }
  return out;
}

bool equal(const ConvKernel& a, const ConvKernel& b, double rel_tol) {
  if (a.ring_size() != b.ring_size() || a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (const auto& [m, g] : a.entries())
    if (!ratfun::equal(g, b.at(m), rel_tol)) return false;
  for (const auto& [m, g] : b.entries())
    if (!ratfun::equal(g, a.at(m), rel_tol)) return false;
  return true;
}

}  // namespace locsyn::sis
