#pragma once

#include <optional>
#include <string>
#include <vector>

#include "avstab/averaging.hpp"
#include "avstab/density.hpp"
#include "avstab/piecewise.hpp"
#include "avstab/stability.hpp"
#include "avstab/topology.hpp"

namespace avstab {

/// Largest alpha the sweep will probe. The base bound is a quarter of the
/// smallest gap between consecutive extrema (and, on a bounded domain, between
/// the outer extrema and the endpoints). With at most one extremum and no
/// endpoint constraint it defaults to 1 on the whole line and a quarter of the
/// width on a bounded domain.
///
/// Two further bounds keep every alpha below it inside the regime where the
/// germ criterion decides equivalence:
///   - a quarter of the distance from each extremum to any other breakpoint,
///     so f is a pure V-shape on [x_i - 4 alpha, x_i + 4 alpha];
///   - for piecewise linear f, |v - w| / (4 S) over distinct pairs among the
///     extreme values and finite boundary values, S the largest |slope|, so
///     averaging cannot reorder them.
Rat alpha_max(const PiecewisePoly& f);

/// alpha_max * (2/3)^k for k = count..1, ascending.
std::vector<Rat> default_alpha_grid(const PiecewisePoly& f, int count = 12);

/// Matching neighbourhoods (c1, c2) of a source extremum and (d1, d2) of the
/// unique nearby extremum of f_alpha on which the restrictions are
/// topologically equivalent.
struct GermWindow {
  Rat c1;
  Rat c2;
  Rat d1;
  Rat d2;
  Rat extremum_position;
};

struct WindowRecord {
  Rat source_position;
  std::optional<GermWindow> window;
  std::string violation;  // empty iff window is set

  bool ok() const { return window.has_value(); }
};

/// For each source extremum x_i, finds the extrema of f_alpha inside
/// (x_i - 2 alpha, x_i + 2 alpha). Exactly one of the same kind lying in
/// [x_i - alpha, x_i + alpha] yields a window; anything else (including a
/// plateau of f_alpha) yields a violation record.
std::vector<WindowRecord> germ_windows(const PiecewisePoly& f, const AveragingResult& fa,
                                       const CriticalSequence& extrema);

struct AlphaOutcome {
  Rat alpha;
  std::optional<CriticalSequence> fingerprint;
  std::optional<Plateau> plateau;
  std::string failure;  // other per-alpha errors, e.g. NonGeneric
  bool equivalent_to_source = false;
  std::vector<WindowRecord> germ_windows;
  /// Every unstable_criterion witness predicts a flat stretch
  /// [x0 - alpha t_{i+1}, x0 - alpha t_i]; true iff all of them are observed.
  bool witness_plateaus_observed = true;
};

struct SweepReport {
  CriticalSequence source;
  Rat alpha_max;
  std::vector<Rat> alphas;
  std::vector<AlphaOutcome> per_alpha;
  GlobalStabilityReport predicted;
  bool agreement = false;
};

/// Averages f at every alpha (sorted, deduplicated, each in (0, alpha_max))
/// and compares the fingerprints with the source and the predicted verdicts.
/// Per-alpha failures are recorded, never thrown. jobs > 1 spreads alphas over
/// worker threads; the report does not depend on it.
SweepReport run_sweep(const PiecewisePoly& f, const StepDensity& d, std::vector<Rat> alphas, int jobs = 1);

}  // namespace avstab
