#pragma once

// Random instance generators and test-only helpers shared by the unit and
// acceptance suites. Everything here is deterministic given the engine.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "avstab/density.hpp"
#include "avstab/piecewise.hpp"
#include "avstab/rational.hpp"

namespace avstab::testing {

using Engine = std::mt19937_64;

inline long uniform_int(Engine& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

/// k / den with k uniform in [lo * den, hi * den].
inline Rat random_rat(Engine& rng, long lo, long hi, long den) {
  return Rat(uniform_int(rng, lo * den, hi * den), den);
}

inline Rat random_nonzero_rat(Engine& rng, long lo, long hi, long den) {
  for (;;) {
    Rat r = random_rat(rng, lo, hi, den);
    if (!r.is_zero()) return r;
  }
}

/// Sorted distinct rationals k/den strictly inside (lo, hi).
inline std::vector<Rat> random_sorted(Engine& rng, std::size_t count, long lo, long hi, long den) {
  std::set<long> ks;
  while (ks.size() < count) ks.insert(uniform_int(rng, lo * den + 1, hi * den - 1));
  std::vector<Rat> out;
  for (long k : ks) out.emplace_back(k, den);
  return out;
}

/// Continuous piecewise linear function on the whole line from breakpoints and
/// slopes (slopes.size() == breakpoints.size() + 1) and the value at the first
/// breakpoint (or the intercept when there are none).
inline PiecewisePoly pl_from_slopes(const std::vector<Rat>& bps, const std::vector<Rat>& slopes, const Rat& start) {
  std::vector<Poly> pieces;
  Rat intercept = bps.empty() ? start : start - slopes[0] * bps[0];
  pieces.push_back(Poly::linear(intercept, slopes[0]));
  for (std::size_t k = 0; k < bps.size(); ++k) {
    intercept += (slopes[k] - slopes[k + 1]) * bps[k];
    pieces.push_back(Poly::linear(intercept, slopes[k + 1]));
  }
  return PiecewisePoly(bps, std::move(pieces));
}

/// Continuous piecewise linear f with <= max_breakpoints breakpoints and every
/// coefficient in [-bound, bound] (rejection sampled).
inline PiecewisePoly random_pl(Engine& rng, std::size_t max_breakpoints = 6, long bound = 10) {
  for (;;) {
    const auto n = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(max_breakpoints)));
    const auto bps = random_sorted(rng, n, -2, 2, 8);
    std::vector<Rat> slopes;
    for (std::size_t k = 0; k <= n; ++k) slopes.push_back(random_rat(rng, -bound, bound, 4));
    const auto f = pl_from_slopes(bps, slopes, random_rat(rng, -bound, bound, 4));
    const bool in_range = std::all_of(f.pieces().begin(), f.pieces().end(), [&](const Poly& p) {
      return std::all_of(p.coeffs().begin(), p.coeffs().end(), [&](const Rat& c) { return c.abs() <= Rat(bound); });
    });
    if (in_range) return f;
  }
}

/// Step density with <= max_pieces pieces; some pieces may be zero.
inline StepDensity random_density(Engine& rng, std::size_t max_pieces = 5, bool allow_zero = true) {
  const auto pieces = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<long>(max_pieces)));
  std::vector<Rat> knots{Rat(-1)};
  for (const auto& t : random_sorted(rng, pieces - 1, -1, 1, 12)) knots.push_back(t);
  knots.emplace_back(1);
  std::vector<Rat> weights;
  Rat mass(0);
  for (std::size_t i = 0; i < pieces; ++i) {
    weights.emplace_back(uniform_int(rng, allow_zero ? 0 : 1, 4));
    mass += weights.back() * (knots[i + 1] - knots[i]);
  }
  if (mass.is_zero()) {
    weights.back() = Rat(1);
    mass = knots[pieces] - knots[pieces - 1];
  }
  for (auto& w : weights) w /= mass;
  return StepDensity(std::move(knots), std::move(weights));
}

/// alpha uniform on the grid k/97, k = 1..96.
inline Rat random_alpha(Engine& rng) { return Rat(uniform_int(rng, 1, 96), 97); }

/// The worked example: f = -x (x <= 0), 2x (x > 0).
inline PiecewisePoly plateau_f() {
  return PiecewisePoly({Rat(0)}, {Poly::linear(Rat(0), Rat(-1)), Poly::linear(Rat(0), Rat(2))});
}

/// Its density: weights 1, 0, 1/4 on [-1, -1/2], (-1/2, 0], (0, 1] have
/// mass 3/4, so the probability density is 4/3, 0, 1/3.
inline StepDensity plateau_density() {
  return StepDensity::from_weights({Rat(-1), Rat(-1, 2), Rat(0), Rat(1)}, {Rat(1), Rat(0), Rat(1, 4)});
}

inline PiecewisePoly abs_x() {
  return PiecewisePoly({Rat(0)}, {Poly::linear(Rat(0), Rat(-1)), Poly::linear(Rat(0), Rat(1))});
}

/// Test-only numeric reference for f_alpha(x): composite Simpson rule in long
/// double on each density piece, split where x + t alpha hits a breakpoint.
/// Independent of the library's quadrature and closed form.
inline long double simpson_average(const PiecewisePoly& f, const StepDensity& d, double alpha, double x,
                                   int panels = 64) {
  auto eval = [&](long double y) {
    std::size_t k = 0;
    while (k < f.breakpoints().size() && f.breakpoints()[k].to_double() <= y) ++k;
    long double acc = 0;
    const auto& c = f.pieces()[k].coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * y + it->to_double();
    return acc;
  };
  std::vector<long double> cuts;
  for (const auto& t : d.knots()) cuts.push_back(t.to_double());
  for (const auto& b : f.breakpoints()) {
    const long double t = (b.to_double() - static_cast<long double>(x)) / alpha;
    if (t > -1 && t < 1) cuts.push_back(t);
  }
  std::sort(cuts.begin(), cuts.end());
  long double total = 0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const long double u = cuts[i];
    const long double v = cuts[i + 1];
    if (!(v > u)) continue;
    const long double mid = (u + v) / 2;
    std::size_t piece = 0;
    while (piece + 1 < d.values().size() && d.knots()[piece + 1].to_double() <= mid) ++piece;
    const long double p = d.values()[piece].to_double();
    const long double h = (v - u) / panels;
    long double s = 0;
    for (int j = 0; j <= panels; ++j) {
      const long double t = u + h * j;
      const long double w = (j == 0 || j == panels) ? 1 : (j % 2 ? 4 : 2);
      s += w * eval(x + alpha * t);
    }
    total += p * s * h / 3;
  }
  return total;
}

}  // namespace avstab::testing
