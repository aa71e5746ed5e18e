#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "avstab/density.hpp"
#include "avstab/piecewise.hpp"
#include "avstab/rational.hpp"
#include "avstab/topology.hpp"

namespace avstab {

/// One-sided derivative limits L = f'(x0 - 0), R = f'(x0 + 0).
struct GermSlopes {
  Rat position;
  Rat left;
  Rat right;
};

enum class StabilityStatus { stable, unstable_criterion, not_applicable };

std::string_view to_string(StabilityStatus status) noexcept;

struct StabilityVerdict {
  GermSlopes germ;
  /// X_0 .. X_{n+1} for the germ as given, so X_0 = R and X_{n+1} = L.
  std::vector<Rat> x_chain;
  /// Curvature constant of the minimum-oriented germ (maxima are negated).
  Rat curvature_c;
  StabilityStatus status = StabilityStatus::not_applicable;
  /// First i with X_i = X_{i+1} = 0 when the criterion fails.
  std::optional<std::size_t> witness;
};

GermSlopes one_sided_slopes(const PiecewisePoly& f, const Rat& x0);

/// X_i = L mu[t_0, t_i] + R mu[t_i, t_{n+1}] for i = 0..n+1.
std::vector<Rat> x_sequence(const GermSlopes& g, const StepDensity& d);

/// Decides the germ criterion: stable iff no consecutive pair X_i, X_{i+1}
/// (i = 0..n) vanishes together. Germs with L < 0 < R are minima; L > 0 > R
/// are maxima and are judged after negation. Anything else is not_applicable.
StabilityVerdict lr_stable(const GermSlopes& g, const StepDensity& d);

/// min over i of (X_i - X_{i+1}) / (t_{i+1} - t_i) for the germ as given.
Rat curvature_constant(const GermSlopes& g, const StepDensity& d);

struct GenericityFlags {
  bool distinct_values = true;
  bool differ_from_limits = true;

  bool generic() const { return distinct_values && differ_from_limits; }
};

struct GlobalStabilityReport {
  CriticalSequence extrema;
  std::vector<StabilityVerdict> verdicts;  // one per extremum, same order
  GenericityFlags genericity;
  bool overall_stable = true;
};

/// Per-extremum verdicts for a continuous piecewise linear function.
/// Non-generic functions are reported through the flags (overall unstable)
/// rather than by throwing. DegreeTooHigh for pieces above degree 1;
/// PlateauDetected when f itself has a flat stretch.
GlobalStabilityReport global_stability_report(const PiecewisePoly& f, const StepDensity& d);

}  // namespace avstab
