#pragma once

#include "locsyn/param/families.hpp"

namespace locsyn::param {

// (sI - A)^{-1} for a static kernel A.
ConvKernel resolvent_kernel(const ConvKernel& A);
// Inverse of a static kernel, through its spatial symbols.
ConvKernel inverse_static_kernel(const ConvKernel& K);
bool kernel_is_hurwitz(const ConvKernel& A);
bool kernel_is_invertible(const ConvKernel& K);

// Stable open loop: Phiu = theta, Phix = (sI - A)^{-1}(I + B2 Phiu).
// Invertible B2: Phix = (I + theta)/(s+p), Phiu = B2^{-1}((sI - A) theta - (A + pI))/(s+p).
std::pair<ConvKernel, ConvKernel> coupled_parameterization(const PlantSpec& plant, const ConvKernel& theta,
                                                           double p = 1.0);

}  // namespace locsyn::param
