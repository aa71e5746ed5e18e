#include "avstab/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <mutex>
#include <numbers>

#include "avstab/error.hpp"

namespace avstab {

namespace {

constexpr int kMaxPoints = 64;

GaussRule build_rule(int n) {
  GaussRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      // Legendre recurrence for P_n(z) and P_n'(z).
      double p0 = 1.0;
      double p1 = z;
      for (int k = 2; k <= n; ++k) {
        const double pk = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = pk;
      }
      dp = n * (z * p1 - p0) / (z * z - 1.0);
      const double step = p1 / dp;
      z -= step;
      if (std::abs(step) < 1e-16) break;
    }
    rule.nodes[static_cast<std::size_t>(i)] = z;
    rule.weights[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - z * z) * dp * dp);
  }
  return rule;
}

double horner(const std::vector<double>& c, double y) {
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * y + *it;
  return acc;
}

}  // namespace

const GaussRule& gauss_legendre(int points) {
  if (points < 1 || points > kMaxPoints) {
    throw Error(ErrorCode::invalid_argument, "Gauss-Legendre order out of range: " + std::to_string(points));
  }
  static std::array<GaussRule, kMaxPoints + 1> table;
  static std::array<std::once_flag, kMaxPoints + 1> built;
  std::call_once(built[static_cast<std::size_t>(points)],
                 [&] { table[static_cast<std::size_t>(points)] = build_rule(points); });
  return table[static_cast<std::size_t>(points)];
}

double quadrature_oracle(const PiecewisePoly& f, const StepDensity& d, const Rat& alpha, const Rat& x) {
  if (alpha.sign() <= 0) throw Error(ErrorCode::alpha_non_positive, "alpha must be positive, got " + alpha.str());
  if (f.continuity_class() < 0) throw Error(ErrorCode::precondition, "averaging requires a continuous function");
  if (const auto& dom = f.domain()) {
    if (!(Rat(2) * alpha < dom->width())) throw Error(ErrorCode::domain_too_narrow, "2*alpha exceeds the domain width");
    if (x < dom->lo + alpha || x > dom->hi - alpha) {
      throw Error(ErrorCode::out_of_domain, x.str() + " is outside the averaged domain");
    }
  }

  const double xd = x.to_double();
  const double ad = alpha.to_double();

  std::vector<double> bps;
  for (const auto& b : f.breakpoints()) bps.push_back(b.to_double());
  std::vector<std::vector<double>> coeffs;
  for (const auto& p : f.pieces()) {
    auto& c = coeffs.emplace_back();
    for (const auto& a : p.coeffs()) c.push_back(a.to_double());
  }
  std::vector<double> knots;
  for (const auto& t : d.knots()) knots.push_back(t.to_double());

  std::vector<double> cuts = knots;
  for (double b : bps) {
    const double t = (b - xd) / ad;
    if (t > -1.0 && t < 1.0) cuts.push_back(t);
  }
  std::sort(cuts.begin(), cuts.end());

  double total = 0.0;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    const double u = cuts[k];
    const double v = cuts[k + 1];
    if (!(v > u)) continue;
    const double mid = 0.5 * (u + v);

    const auto knot_it = std::upper_bound(knots.begin() + 1, knots.end() - 1, mid);
    const double density = d.values()[static_cast<std::size_t>(knot_it - (knots.begin() + 1))].to_double();
    if (density == 0.0) continue;

    const double y_mid = xd + ad * mid;
    const auto piece = static_cast<std::size_t>(std::upper_bound(bps.begin(), bps.end(), y_mid) - bps.begin());
    const auto& c = coeffs[piece];
    const int degree = std::max(0, static_cast<int>(c.size()) - 1);
    const auto& rule = gauss_legendre((degree + 2) / 2);

    const double half = 0.5 * (v - u);
    double sum = 0.0;
    for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
      sum += rule.weights[q] * horner(c, xd + ad * (mid + half * rule.nodes[q]));
    }
    total += density * half * sum;
  }
  return total;
}

}  // namespace avstab
