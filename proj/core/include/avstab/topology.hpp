#pragma once

#include <compare>
#include <optional>
#include <string_view>
#include <vector>

#include "avstab/error.hpp"
#include "avstab/piecewise.hpp"
#include "avstab/rational.hpp"

namespace avstab {

enum class ExtremumKind { min, max };
enum class Trend { increasing, decreasing };

std::string_view to_string(ExtremumKind kind) noexcept;
std::string_view to_string(Trend trend) noexcept;

/// A rational or one of the two infinities.
class ExtendedValue {
 public:
  enum class Kind { neg_inf, finite, pos_inf };

  static ExtendedValue finite(Rat v) { return ExtendedValue(Kind::finite, std::move(v)); }
  static ExtendedValue pos_inf() { return ExtendedValue(Kind::pos_inf, Rat(0)); }
  static ExtendedValue neg_inf() { return ExtendedValue(Kind::neg_inf, Rat(0)); }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::finite; }
  /// Only meaningful when finite.
  const Rat& value() const { return value_; }
  /// "+inf", "-inf" or the rational string.
  std::string str() const;

  friend bool operator==(const ExtendedValue& a, const ExtendedValue& b) { return (a <=> b) == 0; }
  friend std::strong_ordering operator<=>(const ExtendedValue& a, const ExtendedValue& b);

 private:
  ExtendedValue(Kind kind, Rat value) : kind_(kind), value_(std::move(value)) {}

  Kind kind_;
  Rat value_;
};

struct Extremum {
  Rat position;
  Rat value;
  ExtremumKind kind;

  friend bool operator==(const Extremum&, const Extremum&) = default;
};

/// Ordered strict local extrema plus boundary behaviour: the fingerprint that
/// decides topological equivalence of piecewise monotone functions.
struct CriticalSequence {
  std::vector<Extremum> extrema;
  Trend left_trend = Trend::increasing;
  Trend right_trend = Trend::increasing;
  ExtendedValue left_limit = ExtendedValue::neg_inf();
  ExtendedValue right_limit = ExtendedValue::pos_inf();

  friend bool operator==(const CriticalSequence&, const CriticalSequence&) = default;
};

/// A maximal interval on which the function is constant. Unbounded ends are
/// nullopt.
struct Plateau {
  std::optional<Rat> lo;
  std::optional<Rat> hi;
  Rat value;
};

class PlateauDetected : public Error {
 public:
  explicit PlateauDetected(Plateau plateau);
  const Plateau& plateau() const noexcept { return plateau_; }

 private:
  Plateau plateau_;
};

/// Exact extrema of a continuous piecewise polynomial of degree <= 2,
/// optionally restricted to an interval. Quadratic vertices and breakpoints
/// where the derivative changes sign become extrema.
///
/// Throws DegreeTooHigh for a piece of degree > 2 and PlateauDetected when the
/// function is constant on some interval (the first such plateau is carried).
CriticalSequence critical_sequence(const PiecewisePoly& f, const std::optional<Interval>& interval = std::nullopt);

/// Equal kind sequences, equal trends, and order-isomorphic
/// (left_limit, values..., right_limit). Throws NonGeneric when a sequence has
/// repeated extreme values.
bool topologically_equivalent(const CriticalSequence& a, const CriticalSequence& b);

/// True iff f' strictly increases on iv minus the breakpoints: each derivative
/// piece strictly increases and one-sided derivative limits do not drop at
/// breakpoints. Pieces of f above degree 3 raise DegreeTooHigh.
bool is_strictly_convex(const PiecewisePoly& f, const Interval& iv);

/// Position of the only extremum of f on iv when it is a minimum, nullopt
/// otherwise. Errors from critical_sequence propagate.
std::optional<Rat> unique_minimum(const PiecewisePoly& f, const Interval& iv);

}  // namespace avstab
