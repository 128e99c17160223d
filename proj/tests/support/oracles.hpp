#pragma once

#include <random>
#include <vector>

#include "locsyn/param/families.hpp"
#include "locsyn/ratfun/rational.hpp"
#include "locsyn/ratfun/ratmatrix.hpp"
#include "locsyn/sis/kernel.hpp"

namespace locsyn::testing {

using ratfun::cplx;
using ratfun::Poly;
using ratfun::RationalFn;
using ratfun::RatMatrix;
using sis::ConvKernel;

// (1/2pi) * integral over the imaginary axis of |g(jw)|^2 by adaptive
// Gauss-Kronrod quadrature on [0, inf).
double quad_h2(const RationalFn& g);
double quad_h2(const RatMatrix& G);

// max |a(s) - b(s)| / max(1, |b(s)|) over random points in the right half-plane.
double pointwise_gap(const RationalFn& a, const RationalFn& b, std::mt19937_64& rng, int points = 32);

// Stable, strictly proper, with one or two poles in [-3, -0.3] or a
// complex pair, and random numerator of lower degree.
RationalFn random_rh2(std::mt19937_64& rng, int max_den_degree = 3);
// Stable and proper.
RationalFn random_stable_proper(std::mt19937_64& rng, int max_den_degree = 2);
// Random rational of degree <= 2 over degree <= 2 with nonzero denominator
// and poles anywhere.
RationalFn random_rational(std::mt19937_64& rng);

RatMatrix random_rh2_matrix(std::mt19937_64& rng, int rows, int cols);
// Scalar-block kernel on Z_N with every offset in [-band, band] nonzero.
ConvKernel random_kernel(std::mt19937_64& rng, int N, int band, int rows = 1, int cols = 1);

double uniform(std::mt19937_64& rng, double lo, double hi);

}  // namespace locsyn::testing
