#pragma once

#include <Eigen/Dense>
#include <vector>

#include "locsyn/ratfun/rational.hpp"

namespace locsyn::ratfun {

class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(int rows, int cols);
  explicit RatMatrix(const Eigen::MatrixXd& constant);

  static RatMatrix identity(int n);
  static RatMatrix scalar(const RationalFn& g) { RatMatrix m(1, 1); m(0, 0) = g; return m; }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  RationalFn& operator()(int i, int j) { return data_[index(i, j)]; }
  const RationalFn& operator()(int i, int j) const { return data_[index(i, j)]; }

  bool is_zero() const;
  Eigen::MatrixXcd eval(cplx s) const;

  RatMatrix transpose() const;
  // G~(s) = G(-s)^T.
  RatMatrix para() const;
  RatMatrix block(int r0, int c0, int nr, int nc) const;
  void set_block(int r0, int c0, const RatMatrix& b);
  RatMatrix col(int j) const { return block(0, j, rows_, 1); }
  RatMatrix row(int i) const { return block(i, 0, 1, cols_); }

  RatMatrix& operator+=(const RatMatrix& o);
  RatMatrix& operator-=(const RatMatrix& o);
  RatMatrix operator-() const;

  bool all_proper() const;
  bool all_strictly_proper() const;
  bool all_stable(double margin = kDefaultTolerances.stability_margin) const;

 private:
  int index(int i, int j) const;
  int rows_ = 0;
  int cols_ = 0;
  std::vector<RationalFn> data_;
};

RatMatrix operator+(RatMatrix a, const RatMatrix& b);
RatMatrix operator-(RatMatrix a, const RatMatrix& b);
RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator*(const RationalFn& k, const RatMatrix& a);
RatMatrix operator*(const Eigen::MatrixXd& k, const RatMatrix& a);
RatMatrix operator*(const RatMatrix& a, const Eigen::MatrixXd& k);

RatMatrix hstack(const std::vector<RatMatrix>& blocks);
RatMatrix vstack(const std::vector<RatMatrix>& blocks);

bool equal(const RatMatrix& a, const RatMatrix& b, double rel_tol = kDefaultTolerances.rational_equality);

}  // namespace locsyn::ratfun
