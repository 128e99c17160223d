#include "locsyn/ratfun/ratmatrix.hpp"

#include <string>

#include "locsyn/error.hpp"

namespace locsyn::ratfun {

namespace {

void require_same_shape(const RatMatrix& a, const RatMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    fail(ErrorCode::ShapeError, std::string(op) + ": " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                    " vs " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
}

}  // namespace

RatMatrix::RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols)) {
  if (rows < 0 || cols < 0) fail(ErrorCode::ShapeError, "negative dimension");
}

RatMatrix::RatMatrix(const Eigen::MatrixXd& constant)
    : RatMatrix(static_cast<int>(constant.rows()), static_cast<int>(constant.cols())) {
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) (*this)(i, j) = RationalFn(constant(i, j));
}

RatMatrix RatMatrix::identity(int n) { return RatMatrix(Eigen::MatrixXd::Identity(n, n)); }

int RatMatrix::index(int i, int j) const {
  if (i < 0 || j < 0 || i >= rows_ || j >= cols_)
    fail(ErrorCode::IndexError, "entry (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
  return i * cols_ + j;
}

bool RatMatrix::is_zero() const {
  for (const auto& g : data_)
    if (!g.is_zero()) return false;
  return true;
}

Eigen::MatrixXcd RatMatrix::eval(cplx s) const {
  Eigen::MatrixXcd m(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j).eval(s);
  return m;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RatMatrix RatMatrix::para() const {
  RatMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j).para();
  return t;
}

RatMatrix RatMatrix::block(int r0, int c0, int nr, int nc) const {
  if (r0 < 0 || c0 < 0 || r0 + nr > rows_ || c0 + nc > cols_) fail(ErrorCode::IndexError, "block out of range");
  RatMatrix b(nr, nc);
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

void RatMatrix::set_block(int r0, int c0, const RatMatrix& b) {
  if (r0 < 0 || c0 < 0 || r0 + b.rows() > rows_ || c0 + b.cols() > cols_) fail(ErrorCode::IndexError, "block out of range");
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

RatMatrix& RatMatrix::operator+=(const RatMatrix& o) {
  require_same_shape(*this, o, "add");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

RatMatrix& RatMatrix::operator-=(const RatMatrix& o) {
  require_same_shape(*this, o, "sub");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

RatMatrix RatMatrix::operator-() const {
  RatMatrix r = *this;
  for (auto& g : r.data_) g = -g;
  return r;
}

bool RatMatrix::all_proper() const {
  for (const auto& g : data_)
    if (!g.is_proper()) return false;
  return true;
}

bool RatMatrix::all_strictly_proper() const {
  for (const auto& g : data_)
    if (!g.is_strictly_proper()) return false;
  return true;
}

bool RatMatrix::all_stable(double margin) const {
  for (const auto& g : data_)
    if (!g.is_stable(margin)) return false;
  return true;
}

RatMatrix operator+(RatMatrix a, const RatMatrix& b) { return a += b; }
RatMatrix operator-(RatMatrix a, const RatMatrix& b) { return a -= b; }

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.rows())
    fail(ErrorCode::ShapeError, "product: " + std::to_string(a.cols()) + " vs " + std::to_string(b.rows()));
  RatMatrix r(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) {
      RationalFn acc;
      for (int k = 0; k < a.cols(); ++k) {
        if (a(i, k).is_zero() || b(k, j).is_zero()) continue;
        acc += a(i, k) * b(k, j);
      }
      r(i, j) = acc;
    }
  return r;
}

RatMatrix operator*(const RationalFn& k, const RatMatrix& a) {
  RatMatrix r(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r(i, j) = k * a(i, j);
  return r;
}

RatMatrix operator*(const Eigen::MatrixXd& k, const RatMatrix& a) { return RatMatrix(k) * a; }

RatMatrix operator*(const RatMatrix& a, const Eigen::MatrixXd& k) { return a * RatMatrix(k); }

RatMatrix hstack(const std::vector<RatMatrix>& blocks) {
  if (blocks.empty()) return {};
  int cols = 0;
  for (const auto& b : blocks) {
    if (b.rows() != blocks.front().rows()) fail(ErrorCode::ShapeError, "hstack row mismatch");
    cols += b.cols();
  }
  RatMatrix r(blocks.front().rows(), cols);
  int c = 0;
  for (const auto& b : blocks) {
    r.set_block(0, c, b);
    c += b.cols();
  }
  return r;
}

RatMatrix vstack(const std::vector<RatMatrix>& blocks) {
  if (blocks.empty()) return {};
  int rows = 0;
  for (const auto& b : blocks) {
    if (b.cols() != blocks.front().cols()) fail(ErrorCode::ShapeError, "vstack column mismatch");
    rows += b.rows();
  }
  RatMatrix r(rows, blocks.front().cols());
  int c = 0;
  for (const auto& b : blocks) {
    r.set_block(c, 0, b);
    c += b.rows();
  }
  return r;
}

bool equal(const RatMatrix& a, const RatMatrix& b, double rel_tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (!equal(a(i, j), b(i, j), rel_tol)) return false;
  return true;
}

}  // namespace locsyn::ratfun
