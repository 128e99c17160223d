#pragma once

#include <utility>

#include "locsyn/ratfun/rational.hpp"

namespace locsyn::param {

// theta = (a+p)/(s+p) - Q/(s+p) for x' = a x + u + w.
ratfun::RationalFn youla_bridge(double a, double p, const ratfun::RationalFn& Q);
ratfun::RationalFn youla_inverse(double a, double p, const ratfun::RationalFn& theta);

// Controller K = (Vr - Mr Q)(Ur - Nr Q)^{-1} from the coprime factors, and
// the closed loops Phix = (s - a - K)^{-1}, Phiu = K Phix.
ratfun::RationalFn youla_controller(double a, double p, const ratfun::RationalFn& Q);
std::pair<ratfun::RationalFn, ratfun::RationalFn> youla_closed_loops(double a, double p, const ratfun::RationalFn& Q);

}  // namespace locsyn::param
