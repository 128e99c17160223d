#include "locsyn/param/youla.hpp"

#include "locsyn/error.hpp"

namespace locsyn::param {

using ratfun::inv_s_plus;
using ratfun::Poly;
using ratfun::RationalFn;

namespace {

void require_stable_proper(const RationalFn& Q) {
  if (!Q.is_proper() || !Q.is_stable()) fail(ErrorCode::InvalidParameter, "Youla parameter must be stable and proper");
}

}  // namespace

RationalFn youla_bridge(double a, double p, const RationalFn& Q) {
  require_stable_proper(Q);
  return (RationalFn(a + p) - Q) * inv_s_plus(p);
}

RationalFn youla_inverse(double a, double p, const RationalFn& theta) {
  return RationalFn(a + p) - RationalFn::unreduced(Poly{p, 1.0}, Poly::constant(1.0)) * theta;
}

RationalFn youla_controller(double a, double p, const RationalFn& Q) {
  require_stable_proper(Q);
  const RationalFn inv = inv_s_plus(p);
  const RationalFn Mr = RationalFn::unreduced(Poly{-a, 1.0}, Poly{p, 1.0});
  const RationalFn Nr = inv;
  const RationalFn Vr = RationalFn(-(p + a) * (p + a)) * inv;
  const RationalFn Ur = RationalFn::unreduced(Poly{2.0 * p + a, 1.0}, Poly{p, 1.0});
  return (Vr - Mr * Q) / (Ur - Nr * Q);
}

std::pair<RationalFn, RationalFn> youla_closed_loops(double a, double p, const RationalFn& Q) {
  const RationalFn K = youla_controller(a, p, Q);
  const RationalFn loop = RationalFn::unreduced(Poly{-a, 1.0}, Poly::constant(1.0)) - K;
  const RationalFn phix = RationalFn(1.0) / loop;
  return {phix, K * phix};
}

}  // namespace locsyn::param
