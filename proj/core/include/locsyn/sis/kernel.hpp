#pragma once

#include <map>

#include <Eigen/Dense>

#include "locsyn/ratfun/ratmatrix.hpp"

namespace locsyn::sis {

using ratfun::cplx;
using ratfun::RationalFn;
using ratfun::RatMatrix;

// Ring length used when a kernel is flagged as living on the infinite line.
inline constexpr int kInfiniteTruncation = 129;

// Sparse spatial convolution kernel on Z_N: (K x)_n = sum_m K_m x_{n-m}.
// Offsets are stored in the symmetric range [-(N-1)/2, (N-1)/2].
class ConvKernel {
 public:
  ConvKernel() = default;
  ConvKernel(int N, int rows, int cols, bool infinite = false);

  static ConvKernel identity(int N, int n, bool infinite = false);
  static ConvKernel pointwise(int N, const RatMatrix& g, bool infinite = false);
  static ConvKernel from_constants(int N, const std::map<int, Eigen::MatrixXd>& entries, bool infinite = false);

  int ring_size() const { return n_; }
  bool infinite() const { return infinite_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int wrap(int m) const;

  void set(int m, const RatMatrix& g);
  void add(int m, const RatMatrix& g);
  RatMatrix at(int m) const;
  const std::map<int, RatMatrix>& entries() const { return entries_; }
  // Largest |m| with a nonzero entry, -1 for the zero kernel.
  int band() const;
  bool is_static() const;

  // Spatial symbol sum_m K_m(s) exp(-i 2 pi k m / N).
  Eigen::MatrixXcd symbol(int k, cplx s) const;
  Eigen::MatrixXcd static_symbol(int k) const;

 private:
  int n_ = 1;
  bool infinite_ = false;
  int rows_ = 0;
  int cols_ = 0;
  std::map<int, RatMatrix> entries_;
};

ConvKernel compose(const ConvKernel& a, const ConvKernel& b);
ConvKernel operator+(const ConvKernel& a, const ConvKernel& b);
ConvKernel operator-(const ConvKernel& a, const ConvKernel& b);
ConvKernel operator*(const RatMatrix& g, const ConvKernel& k);
ConvKernel operator*(const ConvKernel& k, const RatMatrix& g);
ConvKernel operator*(const RationalFn& g, const ConvKernel& k);

// Response to the unit input at site j, stacked by site.
RatMatrix apply_basis(const ConvKernel& K, int j);
// Per-site squared H2 norm: sum over offsets of the entry norms.
double per_site_h2_sq(const ConvKernel& K);
RatMatrix circulant(const ConvKernel& K);
bool equal(const ConvKernel& a, const ConvKernel& b, double rel_tol = kDefaultTolerances.rational_equality);

}  // namespace locsyn::sis
