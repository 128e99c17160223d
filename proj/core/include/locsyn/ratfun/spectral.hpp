#pragma once

#include "locsyn/ratfun/rational.hpp"

namespace locsyn::ratfun {

struct StableSplit {
  RationalFn stable;      // strictly proper, poles in the open left half-plane
  RationalFn antistable;  // strictly proper, poles in the open right half-plane
  Poly polynomial;        // polynomial part
};

// g = polynomial + stable + antistable. Throws AxisPole for poles on the
// imaginary axis.
StableSplit split_stable(const RationalFn& g, double axis_tol = kDefaultTolerances.axis);

// For para-Hermitian phi >= 0 on the axis, returns stable, minimum-phase f
// with f~ f = phi and a positive leading numerator coefficient.
RationalFn spectral_factor(const RationalFn& phi, double tol = kDefaultTolerances.rational_equality);

}  // namespace locsyn::ratfun
