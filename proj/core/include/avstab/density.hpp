#pragma once

#include <cstddef>
#include <vector>

#include "avstab/piecewise.hpp"
#include "avstab/rational.hpp"

namespace avstab {

/// Piecewise constant probability density on [-1, 1].
///
/// Knots -1 = t_0 < t_1 < ... < t_{n+1} = 1 carry values p_0..p_n >= 0 with
/// total mass sum (t_{i+1} - t_i) p_i == 1 exactly. Equal neighbouring values
/// are merged, so p_i != p_{i+1} afterwards. Zero-valued pieces are allowed.
class StepDensity {
 public:
  StepDensity(std::vector<Rat> knots, std::vector<Rat> values);

  /// The density proportional to nonnegative step weights of positive total
  /// mass: values are weights / sum (t_{i+1} - t_i) w_i.
  static StepDensity from_weights(std::vector<Rat> knots, std::vector<Rat> weights);

  /// p = 1/2 on [-1, 1].
  static StepDensity uniform();

  const std::vector<Rat>& knots() const { return knots_; }
  const std::vector<Rat>& values() const { return values_; }
  /// Number of pieces n + 1.
  std::size_t piece_count() const { return values_.size(); }

  /// The density t -> p(-t).
  StepDensity reflected() const;

  /// p as a piecewise constant function on [-1, 1] (continuity class -1).
  PiecewisePoly as_function() const;

  friend bool operator==(const StepDensity&, const StepDensity&) = default;

 private:
  std::vector<Rat> knots_;
  std::vector<Rat> values_;
};

/// mu[a, b] for -1 <= a <= b <= 1. Throws OutOfSupport otherwise.
Rat density_measure(const StepDensity& d, const Rat& a, const Rat& b);

}  // namespace avstab
