#pragma once

#include <complex>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace locsyn::ratfun {

using cplx = std::complex<double>;

// Real polynomial with ascending coefficients. The zero polynomial has no
// stored coefficients and degree -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<double> coeffs);
  Poly(std::initializer_list<double> coeffs);

  static Poly constant(double c);
  static Poly monomial(int degree, double c = 1.0);
  // Monic polynomial with the given roots; complex roots must come in
  // conjugate pairs.
  static Poly from_roots(std::span<const cplx> roots);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<double>& coeffs() const { return c_; }
  double operator[](int i) const;
  double leading() const;
  double max_abs() const;

  double eval(double s) const;
  cplx eval(cplx s) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(double k);

  // p(-s).
  Poly reflected() const;
  Poly derivative() const;
  Poly monic() const;
  // Zeroes coefficients below rel_tol * scale, then drops trailing zeros.
  Poly trimmed(double rel_tol, double scale) const;

  std::pair<Poly, Poly> divmod(const Poly& d) const;

  // Roots from the companion matrix. Clusters whose spread is consistent
  // with a repeated root are replaced by their centroid.
  std::vector<cplx> roots() const;

 private:
  void strip();
  std::vector<double> c_;
};

Poly operator+(Poly a, const Poly& b);
Poly operator-(Poly a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
Poly operator*(double k, Poly a);
Poly operator*(Poly a, double k);

bool coefficients_close(const Poly& a, const Poly& b, double rel_tol);
// a + b with every coefficient that cancels to rel_tol of its terms set to zero.
Poly cancelling_sum(const Poly& a, const Poly& b, double rel_tol);

}  // namespace locsyn::ratfun
