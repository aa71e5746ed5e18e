#include "avstab/averaging.hpp"

#include "avstab/error.hpp"

namespace avstab {

namespace {

void check_inputs(const PiecewisePoly& f, const Rat& alpha) {
  if (alpha.sign() <= 0) throw Error(ErrorCode::alpha_non_positive, "alpha must be positive, got " + alpha.str());
  if (f.continuity_class() < 0) throw Error(ErrorCode::precondition, "averaging requires a continuous function");
  if (const auto& dom = f.domain(); dom && !(Rat(2) * alpha < dom->width())) {
    throw Error(ErrorCode::domain_too_narrow,
                "2*alpha = " + (Rat(2) * alpha).str() + " must be below the domain width " + dom->width().str());
  }
}

// Telescoped weights: sum_i p_i (g(x + a t_{i+1}) - g(x + a t_i)) / a equals
// sum_k w_k g(x + a t_k) with w_k = (p_{k-1} - p_k) / a, p_{-1} = p_{n+1} = 0.
std::vector<Rat> knot_weights(const StepDensity& d, const Rat& alpha) {
  const auto& p = d.values();
  std::vector<Rat> w(d.knots().size());
  for (std::size_t k = 0; k < w.size(); ++k) {
    const Rat before = k == 0 ? Rat(0) : p[k - 1];
    const Rat after = k == p.size() ? Rat(0) : p[k];
    w[k] = (before - after) / alpha;
  }
  return w;
}

PiecewisePoly weighted_shift_sum(const PiecewisePoly& g, const StepDensity& d, const Rat& alpha) {
  const auto w = knot_weights(d, alpha);
  PiecewisePoly acc;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (w[k].is_zero()) continue;
    acc = pw_combine(Rat(1), acc, w[k], g.shifted(alpha * d.knots()[k]));
  }
  return acc;
}

PiecewisePoly fit_domain(const PiecewisePoly& h, const PiecewisePoly& f, const Rat& alpha) {
  if (!f.domain()) return h;
  return h.restricted(Interval(f.domain()->lo + alpha, f.domain()->hi - alpha));
}

}  // namespace

AveragingResult average(const PiecewisePoly& f, const StepDensity& d, const Rat& alpha) {
  check_inputs(f, alpha);
  const Rat base = f.in_domain(Rat(0)) ? Rat(0) : f.domain()->lo;
  const auto antiderivative = pw_antiderivative(f, base);
  auto fa = fit_domain(weighted_shift_sum(antiderivative, d, alpha), f, alpha);
  return AveragingResult{std::move(fa), alpha, f.breakpoints(), d.knots()};
}

PiecewisePoly average_derivative(const PiecewisePoly& f, const StepDensity& d, const Rat& alpha) {
  check_inputs(f, alpha);
  return fit_domain(weighted_shift_sum(f, d, alpha), f, alpha);
}

PiecewisePoly vee_function(const Rat& left_slope, const Rat& right_slope) {
  return PiecewisePoly({Rat(0)}, {Poly::linear(Rat(0), left_slope), Poly::linear(Rat(0), right_slope)});
}

PiecewisePoly vee_profile(const Rat& left_slope, const Rat& right_slope, const StepDensity& d, const Rat& alpha) {
  if (alpha.sign() <= 0) throw Error(ErrorCode::alpha_non_positive, "alpha must be positive, got " + alpha.str());
  const auto& t = d.knots();
  const std::size_t last = t.size() - 1;  // n + 1

  // X_i = L mu[t_0, t_i] + R mu[t_i, t_{n+1}]
  std::vector<Rat> chain(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    chain[i] = left_slope * density_measure(d, t.front(), t[i]) + right_slope * density_measure(d, t[i], t.back());
  }

  std::vector<Rat> bps;
  std::vector<Poly> pieces{Poly::constant(left_slope)};
  for (std::size_t j = 0; j <= last; ++j) {
    const std::size_t i = last - j;
    bps.push_back(-alpha * t[i]);
    if (i == 0) break;
    // Piece on (-alpha t_i, -alpha t_{i-1}), rising from X_i to X_{i-1}.
    const Rat slope = (chain[i - 1] - chain[i]) / (alpha * (t[i] - t[i - 1]));
    pieces.push_back(Poly::linear(chain[i] + alpha * t[i] * slope, slope));
  }
  pieces.push_back(Poly::constant(right_slope));
  return PiecewisePoly(std::move(bps), std::move(pieces), std::nullopt, 0);
}

}  // namespace avstab
