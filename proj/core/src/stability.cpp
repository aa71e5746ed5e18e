#include "avstab/stability.hpp"

#include "avstab/error.hpp"

namespace avstab {

std::string_view to_string(StabilityStatus status) noexcept {
  switch (status) {
    case StabilityStatus::stable: return "stable";
    case StabilityStatus::unstable_criterion: return "unstable_criterion";
    case StabilityStatus::not_applicable: return "not_applicable";
  }
  return "unknown";
}

GermSlopes one_sided_slopes(const PiecewisePoly& f, const Rat& x0) {
  if (!f.in_domain(x0)) throw Error(ErrorCode::out_of_domain, x0.str() + " is outside the domain");
  const auto slope = pw_derivative(f);
  return GermSlopes{x0, pw_eval(slope, x0, Side::left), pw_eval(slope, x0, Side::right)};
}

std::vector<Rat> x_sequence(const GermSlopes& g, const StepDensity& d) {
  const auto& t = d.knots();
  std::vector<Rat> chain;
  chain.reserve(t.size());
  for (const auto& ti : t) {
    chain.push_back(g.left * density_measure(d, t.front(), ti) + g.right * density_measure(d, ti, t.back()));
  }
  return chain;
}

Rat curvature_constant(const GermSlopes& g, const StepDensity& d) {
  const auto chain = x_sequence(g, d);
  const auto& t = d.knots();
  std::optional<Rat> best;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    const Rat q = (chain[i] - chain[i + 1]) / (t[i + 1] - t[i]);
    if (!best || q < *best) best = q;
  }
  return *best;
}

StabilityVerdict lr_stable(const GermSlopes& g, const StepDensity& d) {
  StabilityVerdict v;
  v.germ = g;
  v.x_chain = x_sequence(g, d);

  const bool minimum = g.left.sign() < 0 && g.right.sign() > 0;
  const bool maximum = g.left.sign() > 0 && g.right.sign() < 0;
  if (!minimum && !maximum) {
    v.curvature_c = curvature_constant(g, d);
    v.status = StabilityStatus::not_applicable;
    return v;
  }

  const GermSlopes oriented = minimum ? g : GermSlopes{g.position, -g.left, -g.right};
  v.curvature_c = curvature_constant(oriented, d);
  v.status = StabilityStatus::stable;
  for (std::size_t i = 0; i + 1 < v.x_chain.size(); ++i) {
    if (v.x_chain[i].is_zero() && v.x_chain[i + 1].is_zero()) {
      v.status = StabilityStatus::unstable_criterion;
      v.witness = i;
      break;
    }
  }
  return v;
}

GlobalStabilityReport global_stability_report(const PiecewisePoly& f, const StepDensity& d) {
  if (f.max_degree() > 1) {
    throw Error(ErrorCode::degree_too_high, "stability report needs a piecewise linear function");
  }
  GlobalStabilityReport report;
  report.extrema = critical_sequence(f);

  const auto& ex = report.extrema.extrema;
  for (std::size_t i = 0; i < ex.size(); ++i) {
    for (std::size_t j = i + 1; j < ex.size(); ++j) {
      if (ex[i].value == ex[j].value) report.genericity.distinct_values = false;
    }
    const auto value = ExtendedValue::finite(ex[i].value);
    if (value == report.extrema.left_limit || value == report.extrema.right_limit) {
      report.genericity.differ_from_limits = false;
    }
  }

  report.overall_stable = report.genericity.generic();
  for (const auto& e : ex) {
    auto verdict = lr_stable(one_sided_slopes(f, e.position), d);
    if (verdict.status != StabilityStatus::stable) report.overall_stable = false;
    report.verdicts.push_back(std::move(verdict));
  }
  return report;
}

}  // namespace avstab
