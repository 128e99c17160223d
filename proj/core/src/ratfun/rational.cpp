#include "locsyn/ratfun/rational.hpp"

#include <algorithm>
#include <cmath>

#include "locsyn/error.hpp"

namespace locsyn::ratfun {

namespace {

constexpr double kSameDenominator = 1e-13;
constexpr double kExactDivision = 1e-10;
constexpr double kCancellation = 1e-11;

double abs_eval(const Poly& p, double r) {
  double acc = 0.0;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * r + std::abs(*it);
  return acc;
}

// Cancellation must not move the function at probe points around |r|.
bool same_values(const Poly& n0, const Poly& d0, const Poly& n1, const Poly& d1, double r) {
  const double w = std::max(r, 1e-3);
  for (const cplx s : {cplx(0.0, 0.1 * w), cplx(0.0, 0.7 * w), cplx(0.0, 2.3 * w), cplx(0.0, 9.0 * w),
                       cplx(0.0, 60.0 * w), cplx(0.4 * w, 1.7 * w)}) {
    const cplx a = n0.eval(s) / d0.eval(s), b = n1.eval(s) / d1.eval(s);
    if (!(std::abs(a - b) <= kExactDivision * std::max(std::abs(a), 1e-300))) return false;
  }
  return true;
}

// Strips the factors shared by two denominators; returns false when no
// factor could be removed cleanly.
bool split_common(Poly& da, Poly& db, Poly& common) {
  common = Poly::constant(1.0);
  bool any = false;
  for (const cplx& r : db.roots()) {
    if (r.imag() < 0.0 || da.degree() < 1 || db.degree() < 1) continue;
    if (std::abs(da.eval(r)) > 1e-8 * abs_eval(da, std::abs(r))) continue;
    const Poly divisor = r.imag() == 0.0 ? Poly{-r.real(), 1.0} : Poly{std::norm(r), -2.0 * r.real(), 1.0};
    if (divisor.degree() > da.degree() || divisor.degree() > db.degree()) continue;
    const auto [qa, ra] = da.divmod(divisor);
    const auto [qb, rb] = db.divmod(divisor);
    if (!ra.is_zero() && ra.max_abs() > kExactDivision * da.max_abs()) continue;
    if (!rb.is_zero() && rb.max_abs() > kExactDivision * db.max_abs()) continue;
    da = qa;
    db = qb;
    common = common * divisor;
    any = true;
  }
  return any;
}

RationalFn add_impl(const RationalFn& a, const RationalFn& b, double sign) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return sign > 0 ? b : -b;
  if (coefficients_close(a.den(), b.den(), kSameDenominator))
    return RationalFn(cancelling_sum(a.num(), sign * b.num(), kCancellation), a.den());
  const Poly bn = sign * b.num();
  if (a.den().degree() >= 1 && b.den().degree() >= 1) {
    Poly xa = a.den(), xb = b.den(), common;
    if (split_common(xa, xb, common)) {
      const Poly num = cancelling_sum(a.num() * xb, bn * xa, kCancellation);
      const Poly den = common * xa * xb;
      // Accept only when the shortened sum matches both terms pointwise.
      bool ok = true;
      for (const cplx s : {cplx(0.0, 0.13), cplx(0.0, 0.9), cplx(0.0, 3.7), cplx(0.0, 21.0), cplx(0.3, 1.4)}) {
        const cplx ta = a.eval(s), tb = bn.eval(s) / b.den().eval(s);
        if (!(std::abs(num.eval(s) / den.eval(s) - (ta + tb)) <= 1e-9 * (std::abs(ta) + std::abs(tb)))) {
          ok = false;
          break;
        }
      }
      if (ok) return RationalFn(num, den);
    }
  }
  return RationalFn(cancelling_sum(a.num() * b.den(), bn * a.den(), kCancellation), a.den() * b.den());
}

}  // namespace

RationalFn::RationalFn(double c) : num_(Poly::constant(c)), den_(Poly::constant(1.0)) {}

RationalFn::RationalFn(Poly num, Poly den, double coincidence_tol) {
  *this = reduce(num, den, coincidence_tol);
}

RationalFn::RationalFn(Poly num, Poly den, NoReduce) : num_(std::move(num)), den_(std::move(den)) {}

RationalFn RationalFn::unreduced(Poly num, Poly den) {
  if (den.is_zero()) fail(ErrorCode::DegenerateInput, "zero denominator");
  const double lead = den.leading();
  if (num.is_zero()) return RationalFn();
  return RationalFn(num * (1.0 / lead), den * (1.0 / lead), NoReduce{});
}

RationalFn reduce(const Poly& num_in, const Poly& den_in, double tol) {
  if (den_in.is_zero()) fail(ErrorCode::DegenerateInput, "zero denominator");
  if (num_in.is_zero()) return RationalFn();
  Poly num = num_in;
  Poly den = den_in;
  bool changed = true;
  while (changed && den.degree() > 0 && num.degree() > 0) {
    changed = false;
    std::vector<cplx> roots = den.roots();
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    for (const cplx& r : roots) {
      if (r.imag() < 0.0) continue;
      const double scale = abs_eval(num, std::abs(r));
      if (std::abs(num.eval(r)) > tol * scale) continue;
      const Poly divisor = r.imag() == 0.0 ? Poly{-r.real(), 1.0} : Poly{std::norm(r), -2.0 * r.real(), 1.0};
      if (divisor.degree() > num.degree()) continue;
      const auto [qn, rn] = num.divmod(divisor);
      const auto [qd, rd] = den.divmod(divisor);
      if (!rn.is_zero() && rn.max_abs() > kExactDivision * num.max_abs()) continue;
      if (!rd.is_zero() && rd.max_abs() > kExactDivision * den.max_abs()) continue;
      if (!same_values(num, den, qn, qd, std::abs(r))) continue;
      num = qn;
      den = qd;
      changed = true;
      break;
    }
  }
  return RationalFn::unreduced(num, den);
}

cplx RationalFn::eval(cplx s) const { return num_.eval(s) / den_.eval(s); }

double RationalFn::eval(double s) const { return num_.eval(s) / den_.eval(s); }

int RationalFn::relative_degree() const {
  if (num_.is_zero()) return 1 << 20;
  return den_.degree() - num_.degree();
}

bool RationalFn::is_stable(double margin) const {
  if (num_.is_zero()) return true;
  for (const cplx& p : den_.roots())
    if (!(p.real() < -margin)) return false;
  return true;
}

RationalFn RationalFn::para() const { return unreduced(num_.reflected(), den_.reflected()); }

RationalFn RationalFn::operator-() const { return RationalFn(-num_, den_, NoReduce{}); }

RationalFn& RationalFn::operator+=(const RationalFn& o) { return *this = add_impl(*this, o, 1.0); }

RationalFn& RationalFn::operator-=(const RationalFn& o) { return *this = add_impl(*this, o, -1.0); }

RationalFn& RationalFn::operator*=(const RationalFn& o) {
  if (is_zero() || o.is_zero()) return *this = RationalFn();
  if (o.is_constant()) return *this = RationalFn(num_ * o.num_[0], den_, NoReduce{});
  if (is_constant()) return *this = RationalFn(o.num_ * num_[0], o.den_, NoReduce{});
  return *this = RationalFn(num_ * o.num_, den_ * o.den_);
}

RationalFn& RationalFn::operator/=(const RationalFn& o) {
  if (o.is_zero()) fail(ErrorCode::DegenerateInput, "division by zero rational function");
  if (is_zero()) return *this;
  return *this = RationalFn(num_ * o.den_, den_ * o.num_);
}

RationalFn operator+(RationalFn a, const RationalFn& b) { return a += b; }
RationalFn operator-(RationalFn a, const RationalFn& b) { return a -= b; }
RationalFn operator*(RationalFn a, const RationalFn& b) { return a *= b; }
RationalFn operator/(RationalFn a, const RationalFn& b) { return a /= b; }

RationalFn arith(const RationalFn& a, const RationalFn& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div: return a / b;
  }
  fail(ErrorCode::InvalidParameter, "unknown arithmetic operation");
}

Classification classify(const RationalFn& g, double margin) {
  return {g.is_proper(), g.is_strictly_proper(), g.is_stable(margin)};
}

bool equal(const RationalFn& a, const RationalFn& b, double rel_tol) {
  const Poly l = a.num() * b.den();
  const Poly r = b.num() * a.den();
  const double scale = std::max(a.num().max_abs() * b.den().max_abs(), b.num().max_abs() * a.den().max_abs());
  if (scale == 0.0) return true;
  const int n = std::max(l.degree(), r.degree());
  for (int i = 0; i <= n; ++i)
    if (std::abs(l[i] - r[i]) > rel_tol * scale) return false;
  return true;
}

RationalFn s_var() { return RationalFn::unreduced(Poly{0.0, 1.0}, Poly::constant(1.0)); }

double grid_distance(const RationalFn& a, const RationalFn& b, int points, double wmin, double wmax) {
  double diff = 0.0, ref = 0.0;
  for (int i = 0; i < points; ++i) {
    const double t = points > 1 ? static_cast<double>(i) / (points - 1) : 0.0;
    const cplx s(0.0, wmin * std::pow(wmax / wmin, t));
    const cplx vb = b.eval(s);
    diff = std::max(diff, std::abs(a.eval(s) - vb));
    ref = std::max(ref, std::abs(vb));
  }
  return ref > 0.0 ? diff / ref : diff;
}

RationalFn inv_s_plus(double p) { return RationalFn::unreduced(Poly::constant(1.0), Poly{p, 1.0}); }

}  // namespace locsyn::ratfun
