#pragma once

namespace locsyn {

// Defaults shared by the numerical routines. Every routine that uses one of
// these also accepts an override.
struct Tolerances {
  double root_coincidence = 1e-9;
  double rational_equality = 1e-8;
  double stability_margin = 0.0;
  double axis = 1e-9;
  double canonical_pattern = 1e-10;
  double rank = 1e-9;
  double coefficient_trim = 1e-12;
};

inline constexpr Tolerances kDefaultTolerances{};

}  // namespace locsyn
