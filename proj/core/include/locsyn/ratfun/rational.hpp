#pragma once

#include <vector>

#include "locsyn/ratfun/poly.hpp"
#include "locsyn/tolerances.hpp"

namespace locsyn::ratfun {

// Real-rational function num/den with a monic denominator. The normal
// constructor cancels common factors.
class RationalFn {
 public:
  RationalFn() : num_(), den_(Poly::constant(1.0)) {}
  RationalFn(double c);  // NOLINT(google-explicit-constructor)
  RationalFn(Poly num, Poly den, double coincidence_tol = kDefaultTolerances.root_coincidence);

  // Only normalizes the denominator to be monic; no cancellation.
  static RationalFn unreduced(Poly num, Poly den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return den_.degree() == 0 && num_.degree() <= 0; }

  cplx eval(cplx s) const;
  double eval(double s) const;

  // deg(den) - deg(num); a large value for the zero function.
  int relative_degree() const;
  bool is_proper() const { return relative_degree() >= 0; }
  bool is_strictly_proper() const { return relative_degree() >= 1; }
  bool is_stable(double margin = kDefaultTolerances.stability_margin) const;

  std::vector<cplx> poles() const { return den_.roots(); }
  std::vector<cplx> zeros() const { return num_.roots(); }

  // g(-s), the para-adjoint of a real scalar transfer.
  RationalFn para() const;
  RationalFn operator-() const;

  RationalFn& operator+=(const RationalFn& o);
  RationalFn& operator-=(const RationalFn& o);
  RationalFn& operator*=(const RationalFn& o);
  RationalFn& operator/=(const RationalFn& o);

 private:
  struct NoReduce {};
  RationalFn(Poly num, Poly den, NoReduce);
  Poly num_;
  Poly den_;
};

RationalFn operator+(RationalFn a, const RationalFn& b);
RationalFn operator-(RationalFn a, const RationalFn& b);
RationalFn operator*(RationalFn a, const RationalFn& b);
RationalFn operator/(RationalFn a, const RationalFn& b);

// Cancels common root clusters of num and den.
RationalFn reduce(const Poly& num, const Poly& den, double coincidence_tol = kDefaultTolerances.root_coincidence);

enum class ArithOp { Add, Sub, Mul, Div };
RationalFn arith(const RationalFn& a, const RationalFn& b, ArithOp op);

struct Classification {
  bool proper = false;
  bool strictly_proper = false;
  bool stable = false;
};
Classification classify(const RationalFn& g, double margin = kDefaultTolerances.stability_margin);

// Cross-multiplied coefficient comparison.
bool equal(const RationalFn& a, const RationalFn& b, double rel_tol = kDefaultTolerances.rational_equality);

// max |a - b| / max |b| over log-spaced points j w, w in [wmin, wmax].
double grid_distance(const RationalFn& a, const RationalFn& b, int points = 64, double wmin = 1e-2,
                     double wmax = 1e2);

// s as a rational function, and the first-order factor 1/(s + p).
RationalFn s_var();
RationalFn inv_s_plus(double p);

}  // namespace locsyn::ratfun
