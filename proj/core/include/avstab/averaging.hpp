#pragma once

#include <vector>

#include "avstab/density.hpp"
#include "avstab/piecewise.hpp"
#include "avstab/rational.hpp"

namespace avstab {

/// f_alpha(x) = integral over [-1, 1] of f(x + t alpha) p(t) dt, exactly.
struct AveragingResult {
  PiecewisePoly f_alpha;
  Rat alpha;
  std::vector<Rat> source_breakpoints;
  std::vector<Rat> density_knots;
};

/// Closed-form alpha-averaging of a continuous piecewise polynomial against a
/// step density. On a bounded domain [a, b] requires 2 alpha < b - a and the
/// result lives on [a + alpha, b - alpha].
///
/// With F an antiderivative of f,
///   f_alpha(x) = (1/alpha) sum_i p_i (F(x + alpha t_{i+1}) - F(x + alpha t_i)).
/// The result gains one order of smoothness over f.
///
/// Throws AlphaNonPositive, DomainTooNarrow, or PreconditionViolated when f
/// has jumps.
AveragingResult average(const PiecewisePoly& f, const StepDensity& d, const Rat& alpha);

/// Exact derivative of f_alpha computed directly as
///   (1/alpha) sum_i p_i (f(x + alpha t_{i+1}) - f(x + alpha t_i)),
/// without going through average().
PiecewisePoly average_derivative(const PiecewisePoly& f, const StepDensity& d, const Rat& alpha);

/// The V-function x -> L x for x <= 0, R x for x > 0.
PiecewisePoly vee_function(const Rat& left_slope, const Rat& right_slope);

/// Derivative of the averaged V-function built from the X chain: L left of
/// -alpha, R right of alpha, and on (-alpha t_{i+1}, -alpha t_i) the affine
/// interpolation from X_{i+1} to X_i.
PiecewisePoly vee_profile(const Rat& left_slope, const Rat& right_slope, const StepDensity& d, const Rat& alpha);

}  // namespace avstab
