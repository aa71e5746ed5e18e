#include "avstab/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

#include "avstab/error.hpp"

namespace avstab {

namespace {

constexpr int kMaxShrinkSteps = 256;

int sign_of(const Rat& r) { return r.sign(); }

// Shrinks one side of (d1, d2) toward the extremum y of g until the order of
// g(d1), g(d2) matches want (-1 or 1). Returns false if it never does.
bool match_endpoint_order(const PiecewisePoly& g, ExtremumKind kind, const Rat& y, int want, Rat& d1, Rat& d2) {
  for (int step = 0; step < kMaxShrinkSteps; ++step) {
    const int have = sign_of(pw_eval(g, d1) - pw_eval(g, d2));
    if (have == want) return true;
    // Moving an endpoint toward a minimum lowers its value; toward a maximum raises it.
    const bool shrink_left = (kind == ExtremumKind::min) ? (want < 0) : (want > 0);
    if (shrink_left) {
      d1 = (d1 + y) / Rat(2);
    } else {
      d2 = (d2 + y) / Rat(2);
    }
  }
  return false;
}

WindowRecord window_for(const PiecewisePoly& f, const PiecewisePoly& fa, const Rat& alpha,
                        const CriticalSequence& averaged, const Extremum& source) {
  WindowRecord rec{source.position, std::nullopt, {}};
  const Rat& x = source.position;
  const Rat reach = Rat(2) * alpha;

  std::vector<Extremum> nearby;
  for (const auto& e : averaged.extrema) {
    if (x - reach < e.position && e.position < x + reach) nearby.push_back(e);
  }
  if (nearby.size() != 1) {
    rec.violation = std::to_string(nearby.size()) + " extrema of f_alpha within 2*alpha of " + x.str();
    return rec;
  }
  const Extremum& y = nearby.front();
  if (y.kind != source.kind) {
    rec.violation = "extremum near " + x.str() + " changed kind";
    return rec;
  }
  if (y.position < x - alpha || y.position > x + alpha) {
    rec.violation = "extremum " + y.position.str() + " left [x - alpha, x + alpha] around " + x.str();
    return rec;
  }

  Rat c1 = x - alpha;
  Rat c2 = x + alpha;
  Rat d1 = x - reach;
  Rat d2 = x + reach;
  if (const auto& dom = f.domain()) {
    c1 = max(c1, dom->lo);
    c2 = min(c2, dom->hi);
  }
  if (const auto& dom = fa.domain()) {
    d1 = max(d1, dom->lo);
    d2 = min(d2, dom->hi);
  }

  // Tied endpoint values cannot be matched exactly; pull c1 inward instead.
  for (int step = 0; step < kMaxShrinkSteps && pw_eval(f, c1) == pw_eval(f, c2); ++step) c1 = (c1 + x) / Rat(2);
  const int want = sign_of(pw_eval(f, c1) - pw_eval(f, c2));
  if (want == 0 || !match_endpoint_order(fa, y.kind, y.position, want, d1, d2)) {
    rec.violation = "could not match endpoint order around " + x.str();
    return rec;
  }

  try {
    const auto left = critical_sequence(f, Interval(c1, c2));
    const auto right = critical_sequence(fa, Interval(d1, d2));
    if (!topologically_equivalent(left, right)) {
      rec.violation = "restrictions around " + x.str() + " are not equivalent";
      return rec;
    }
  } catch (const Error& e) {
    rec.violation = e.what();
    return rec;
  }
  rec.window = GermWindow{c1, c2, d1, d2, y.position};
  return rec;
}

bool witness_plateau_observed(const PiecewisePoly& fa, const StepDensity& d, const Rat& alpha,
                              const StabilityVerdict& v) {
  const auto& t = d.knots();
  const std::size_t i = *v.witness;
  const Rat lo = v.germ.position - alpha * t[i + 1];
  const Rat hi = v.germ.position - alpha * t[i];
  try {
    const auto piece = fa.restricted(Interval(lo, hi));
    return piece.pieces().size() == 1 && piece.pieces().front().degree() <= 0 &&
           piece.domain() == std::optional<Interval>(Interval(lo, hi));
  } catch (const Error&) {
    return false;
  }
}

AlphaOutcome sweep_one(const PiecewisePoly& f, const StepDensity& d, const CriticalSequence& source,
                       const GlobalStabilityReport& predicted, const Rat& alpha) {
  AlphaOutcome out;
  out.alpha = alpha;
  const auto fa = average(f, d, alpha);
  try {
    out.fingerprint = critical_sequence(fa.f_alpha);
    out.equivalent_to_source = topologically_equivalent(source, *out.fingerprint);
  } catch (const PlateauDetected& e) {
    out.plateau = e.plateau();
  } catch (const Error& e) {
    out.failure = std::string(to_string(e.code())) + ": " + e.what();
  }
  out.germ_windows = germ_windows(f, fa, source);
  for (const auto& v : predicted.verdicts) {
    if (v.status == StabilityStatus::unstable_criterion && v.witness &&
        !witness_plateau_observed(fa.f_alpha, d, alpha, v)) {
      out.witness_plateaus_observed = false;
    }
  }
  return out;
}

}  // namespace

Rat alpha_max(const PiecewisePoly& f) {
  const auto cs = critical_sequence(f);
  const auto& ex = cs.extrema;
  const Rat four(4);

  std::optional<Rat> bound;
  auto tighten = [&](const Rat& candidate) {
    if (!bound || candidate < *bound) bound = candidate;
  };

  for (std::size_t i = 1; i < ex.size(); ++i) tighten((ex[i].position - ex[i - 1].position) / four);
  if (const auto& dom = f.domain()) {
    if (ex.empty()) {
      tighten(dom->width() / four);
    } else {
      tighten((ex.front().position - dom->lo) / four);
      tighten((dom->hi - ex.back().position) / four);
    }
  }
  if (!bound) bound = Rat(1);

  for (const auto& e : ex) {
    for (const auto& b : f.breakpoints()) {
      if (b != e.position) tighten((b - e.position).abs() / four);
    }
  }

  if (f.max_degree() <= 1) {
    Rat steepest(0);
    for (const auto& p : f.pieces()) steepest = max(steepest, p.coeff(1).abs());
    std::vector<Rat> levels;
    for (const auto& e : ex) levels.push_back(e.value);
    if (cs.left_limit.is_finite()) levels.push_back(cs.left_limit.value());
    if (cs.right_limit.is_finite()) levels.push_back(cs.right_limit.value());
    for (std::size_t i = 0; i < levels.size(); ++i) {
      for (std::size_t j = i + 1; j < levels.size(); ++j) {
        const Rat gap = (levels[i] - levels[j]).abs();
        if (!gap.is_zero()) tighten(gap / (four * steepest));
      }
    }
  }
  return *bound;
}

std::vector<Rat> default_alpha_grid(const PiecewisePoly& f, int count) {
  if (count < 1) throw Error(ErrorCode::invalid_argument, "grid size must be positive");
  const Rat top = alpha_max(f);
  std::vector<Rat> grid;
  Rat factor(1);
  for (int k = 0; k < count; ++k) {
    factor *= Rat(2, 3);
    grid.push_back(top * factor);
  }
  std::reverse(grid.begin(), grid.end());
  return grid;
}

std::vector<WindowRecord> germ_windows(const PiecewisePoly& f, const AveragingResult& fa,
                                       const CriticalSequence& extrema) {
  std::vector<WindowRecord> out;
  CriticalSequence averaged;
  std::string failure;
  try {
    averaged = critical_sequence(fa.f_alpha);
  } catch (const Error& e) {
    failure = e.what();
  }
  for (const auto& e : extrema.extrema) {
    if (!failure.empty()) {
      out.push_back(WindowRecord{e.position, std::nullopt, failure});
    } else {
      out.push_back(window_for(f, fa.f_alpha, fa.alpha, averaged, e));
    }
  }
  return out;
}

SweepReport run_sweep(const PiecewisePoly& f, const StepDensity& d, std::vector<Rat> alphas, int jobs) {
  SweepReport report;
  report.source = critical_sequence(f);
  report.alpha_max = alpha_max(f);
  report.predicted = global_stability_report(f, d);

  std::sort(alphas.begin(), alphas.end());
  alphas.erase(std::unique(alphas.begin(), alphas.end()), alphas.end());
  for (const auto& a : alphas) {
    if (a.sign() <= 0 || !(a < report.alpha_max)) {
      throw Error(ErrorCode::invalid_argument,
                  "alpha " + a.str() + " is outside (0, alpha_max = " + report.alpha_max.str() + ")");
    }
  }
  report.alphas = alphas;
  report.per_alpha.resize(alphas.size());

  const std::size_t workers = std::clamp<std::size_t>(static_cast<std::size_t>(std::max(jobs, 1)), 1, std::max<std::size_t>(alphas.size(), 1));
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(alphas.size());
  auto work = [&] {
    for (std::size_t i = next++; i < alphas.size(); i = next++) {
      try {
        report.per_alpha[i] = sweep_one(f, d, report.source, report.predicted, alphas[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  bool agree = true;
  for (const auto& o : report.per_alpha) {
    if (report.predicted.overall_stable && !o.equivalent_to_source) agree = false;
    if (!o.witness_plateaus_observed) agree = false;
  }
  report.agreement = agree;
  return report;
}

}  // namespace avstab
