#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <vector>

#include "avstab/poly.hpp"
#include "avstab/rational.hpp"

namespace avstab {

/// Closed interval [lo, hi] with lo < hi.
struct Interval {
  Rat lo;
  Rat hi;

  Interval(Rat lo_, Rat hi_);

  bool contains(const Rat& x) const { return lo <= x && x <= hi; }
  Rat width() const { return hi - lo; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Which one-sided limit to take at a point.
enum class Side { left, right, point };

/// A function given by sorted breakpoints and polynomial pieces. On the whole
/// line the first and last pieces are unbounded tails; with a bounded domain
/// [a, b] every breakpoint lies strictly inside (a, b) and the outer pieces
/// end at a and b.
///
/// Pieces are always canonical: no two adjacent pieces are the same
/// polynomial. The continuity class k is -1 when jumps are allowed and
/// otherwise guarantees that derivatives of orders 0..k agree at every
/// breakpoint. A function without breakpoints has class kSmooth.
class PiecewisePoly {
 public:
  static constexpr int kSmooth = 64;

  /// Zero function on the whole line.
  PiecewisePoly() : PiecewisePoly({}, {Poly{}}) {}

  /// Validates shape and, when given, that the declared continuity class holds
  /// exactly. Without a declared class the exact class is computed.
  PiecewisePoly(std::vector<Rat> breakpoints, std::vector<Poly> pieces,
                std::optional<Interval> domain = std::nullopt,
                std::optional<int> continuity_class = std::nullopt);

  static PiecewisePoly constant(const Rat& c, std::optional<Interval> domain = std::nullopt) {
    return from_poly(Poly::constant(c), std::move(domain));
  }
  static PiecewisePoly from_poly(Poly p, std::optional<Interval> domain = std::nullopt) {
    return PiecewisePoly({}, {std::move(p)}, std::move(domain));
  }

  const std::vector<Rat>& breakpoints() const { return breakpoints_; }
  const std::vector<Poly>& pieces() const { return pieces_; }
  const std::optional<Interval>& domain() const { return domain_; }
  int continuity_class() const { return continuity_class_; }
  bool is_whole_line() const { return !domain_.has_value(); }

  bool in_domain(const Rat& x) const { return !domain_ || domain_->contains(x); }
  /// Index of the piece used for the given one-sided limit at x. For
  /// Side::point the right-hand piece is returned.
  std::size_t piece_index(const Rat& x, Side side) const;
  /// Index of the piece covering the open interval (lo, hi), which must not
  /// contain a breakpoint. Unbounded ends are passed as nullopt.
  std::size_t piece_index_between(const std::optional<Rat>& lo, const std::optional<Rat>& hi) const;

  /// Lower/upper end of piece i; nullopt for an unbounded tail.
  std::optional<Rat> piece_lo(std::size_t i) const;
  std::optional<Rat> piece_hi(std::size_t i) const;

  int max_degree() const;
  /// Largest k such that derivatives 0..k agree at every breakpoint, -1 if
  /// some value jumps, kSmooth without breakpoints.
  int exact_continuity_class() const;

  /// Restriction to the intersection with [iv.lo, iv.hi].
  PiecewisePoly restricted(const Interval& iv) const;
  /// x -> f(x + c)
  PiecewisePoly shifted(const Rat& c) const;
  /// x -> f(-x)
  PiecewisePoly reflected() const;

  /// Equality of the represented functions (domain, breakpoints and pieces).
  /// The continuity class is a declared bound and does not participate.
  friend bool operator==(const PiecewisePoly& a, const PiecewisePoly& b) {
    return a.domain_ == b.domain_ && a.breakpoints_ == b.breakpoints_ && a.pieces_ == b.pieces_;
  }

 private:
  std::vector<Rat> breakpoints_;
  std::vector<Poly> pieces_;
  std::optional<Interval> domain_;
  int continuity_class_ = kSmooth;
};

std::ostream& operator<<(std::ostream& os, const PiecewisePoly& f);

/// Value or one-sided limit of f at x.
/// Throws OutOfDomain outside the domain (and for the outward limit at a
/// bounded endpoint) and AmbiguousAtJump for Side::point at a jump.
Rat pw_eval(const PiecewisePoly& f, const Rat& x, Side side = Side::point);

/// a*f + b*g on the intersection of the domains, canonicalized.
PiecewisePoly pw_combine(const Rat& a, const PiecewisePoly& f, const Rat& b, const PiecewisePoly& g);

/// Piecewise derivative on the same breakpoints. Requires class >= 0.
PiecewisePoly pw_derivative(const PiecewisePoly& f);

/// Continuous antiderivative F with F(base) = 0. Jumps in f are allowed.
PiecewisePoly pw_antiderivative(const PiecewisePoly& f, const Rat& base);

/// Intersection of two optional (nullopt = whole line) domains. Throws
/// EmptyDomainIntersection when it has empty interior.
std::optional<Interval> intersect_domains(const std::optional<Interval>& a, const std::optional<Interval>& b);

}  // namespace avstab
