// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
// failure. Tolerances, corpus sizes, seeds and time budgets are fixed below.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "avstab/averaging.hpp"
#include "avstab/quadrature.hpp"
#include "avstab/stability.hpp"
#include "avstab/sweep.hpp"
#include "avstab/topology.hpp"
#include "support/generators.hpp"

using namespace avstab;
using namespace avstab::testing;

namespace {

constexpr double kOracleRelTol = 1e-9;
constexpr double kClosedFormOracleTol = 1e-12;

constexpr double kBudgetPlateauSec = 1.0;
constexpr double kBudgetProfileSec = 10.0;
constexpr double kBudgetOracleSec = 30.0;
constexpr double kBudgetSweepSec = 60.0;

constexpr int kProfileInstances = 50;
constexpr int kOracleFunctions = 200;
constexpr int kOracleSamplesPerFunction = 5;
constexpr int kChainInstances = 200;
constexpr int kSweepFunctions = 50;

constexpr std::uint64_t kSeedProfile = 0xA11CE;
constexpr std::uint64_t kSeedOracleCorpus = 0xB0B;
constexpr std::uint64_t kSeedChain = 0xC4A1;
constexpr std::uint64_t kSeedSweep = 0x5EE9;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

struct Criterion {
  const char* id;
  const char* name;
  double budget_sec;  // 0: no runtime bound
  std::function<Outcome()> run;
};

std::string str(const std::vector<Rat>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ')';
  return os.str();
}

Outcome plateau_reproduction() {
  Outcome out;
  const auto f = plateau_f();
  const auto d = plateau_density();
  const std::vector<Rat> expected_chain{Rat(2), Rat(0), Rat(0), Rat(-1)};
  for (const Rat& alpha : {Rat(1, 10), Rat(1, 4), Rat(2, 5)}) {
    const auto g = one_sided_slopes(f, Rat(0));
    const auto chain = x_sequence(g, d);
    if (chain != expected_chain) out.fail("x_sequence " + str(chain));
    const auto v = lr_stable(g, d);
    if (v.status != StabilityStatus::unstable_criterion || v.witness != std::size_t{1}) {
      out.fail("lr_stable verdict at alpha " + alpha.str());
    }
    const auto fa = average(f, d, alpha).f_alpha;
    const Rat hi = alpha / Rat(2);
    const auto k = fa.piece_index_between(Rat(0), hi);
    if (fa.pieces()[k].degree() != 0 || fa.piece_lo(k) != Rat(0) || fa.piece_hi(k) != hi) {
      out.fail("f_alpha is not a single constant piece on [0, alpha/2] at alpha " + alpha.str());
    }
    try {
      critical_sequence(fa);
      out.fail("critical_sequence returned without a plateau at alpha " + alpha.str());
    } catch (const PlateauDetected& e) {
      if (e.plateau().lo != Rat(0) || e.plateau().hi != hi) out.fail("plateau bounds at alpha " + alpha.str());
    }
  }
  if (out.pass) out.detail = "alpha in {1/10, 1/4, 2/5}: chain (2, 0, 0, -1), witness 1, plateau [0, alpha/2]";
  return out;
}

Outcome profile_identity() {
  Outcome out;
  Engine rng(kSeedProfile);
  for (int i = 0; i < kProfileInstances; ++i) {
    const Rat L = random_rat(rng, -5, 5, 4);
    const Rat R = random_rat(rng, -5, 5, 4);
    const auto d = random_density(rng);
    const Rat alpha = random_alpha(rng) * Rat(uniform_int(rng, 1, 4));
    if (vee_profile(L, R, d, alpha) != average_derivative(vee_function(L, R), d, alpha)) {
      out.fail("mismatch for L=" + L.str() + " R=" + R.str() + " alpha=" + alpha.str());
    }
  }
  if (out.pass) out.detail = std::to_string(kProfileInstances) + " instances, exact equality";
  return out;
}

struct OracleCase {
  PiecewisePoly f;
  StepDensity d;
  Rat alpha;
};

/// Shared corpus for the oracle and smoothness criteria.
std::vector<OracleCase> oracle_corpus() {
  Engine rng(kSeedOracleCorpus);
  std::vector<OracleCase> corpus;
  for (int i = 0; i < kOracleFunctions; ++i) {
    auto f = random_pl(rng, 6, 10);
    auto d = random_density(rng, 5);
    corpus.push_back({std::move(f), std::move(d), random_alpha(rng)});
  }
  return corpus;
}

Outcome oracle_equivalence() {
  Outcome out;
  Engine rng(kSeedOracleCorpus + 1);
  double worst = 0;
  for (const auto& c : oracle_corpus()) {
    const auto fa = average(c.f, c.d, c.alpha).f_alpha;
    for (int s = 0; s < kOracleSamplesPerFunction; ++s) {
      const Rat x = random_rat(rng, -4, 4, 1000);
      const double exact = pw_eval(fa, x).to_double();
      const double oracle = quadrature_oracle(c.f, c.d, c.alpha, x);
      const double dev = std::fabs(exact - oracle) / (1 + std::fabs(exact));
      worst = std::max(worst, dev);
      if (!(dev <= kOracleRelTol)) out.fail("deviation " + std::to_string(dev) + " at x=" + x.str());
    }
  }
  std::ostringstream os;
  os << kOracleFunctions * kOracleSamplesPerFunction << " samples, max relative deviation " << worst
     << " (tol " << kOracleRelTol << ")";
  if (out.pass) out.detail = os.str();
  return out;
}

Outcome smoothness_gain() {
  Outcome out;
  std::size_t checked = 0;
  for (const auto& c : oracle_corpus()) {
    const auto fa = average(c.f, c.d, c.alpha).f_alpha;
    const auto slope = pw_derivative(fa);
    for (const Rat& b : fa.breakpoints()) {
      ++checked;
      if (pw_eval(slope, b, Side::left) != pw_eval(slope, b, Side::right)) {
        out.fail("derivative jumps at " + b.str());
      }
    }
  }
  if (out.pass) out.detail = std::to_string(checked) + " breakpoints, one-sided derivative limits equal";
  return out;
}

Outcome chain_structure() {
  Outcome out;
  Engine rng(kSeedChain);
  for (int i = 0; i < kChainInstances; ++i) {
    Rat L = random_rat(rng, -6, 6, 4);
    Rat R = random_rat(rng, -6, 6, 4);
    if (R < L) std::swap(L, R);
    const auto d = random_density(rng);
    const GermSlopes g{Rat(0), L, R};
    const auto chain = x_sequence(g, d);
    if (chain.back() != L || chain.front() != R) out.fail("endpoints for L=" + L.str() + " R=" + R.str());
    for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
      if (chain[k + 1] > chain[k]) out.fail("chain not monotone " + str(chain));
    }
    const Rat lambda(uniform_int(rng, 1, 100), uniform_int(rng, 1, 9));
    const auto base = lr_stable(g, d);
    const auto scaled = lr_stable(GermSlopes{Rat(0), lambda * L, lambda * R}, d);
    if (base.status != scaled.status || base.witness != scaled.witness) out.fail("status changes under scaling");
  }
  if (out.pass) out.detail = std::to_string(kChainInstances) + " germs with L <= R";
  return out;
}

/// Generic piecewise linear f with at least one extremum, every germ
/// predicted stable for d.
std::optional<PiecewisePoly> stable_generic_candidate(Engine& rng, const StepDensity& d) {
  const auto n = static_cast<std::size_t>(uniform_int(rng, 1, 6));
  const auto bps = random_sorted(rng, n, -3, 3, 4);
  std::vector<Rat> slopes;
  for (std::size_t k = 0; k <= n; ++k) slopes.push_back(random_nonzero_rat(rng, -4, 4, 2));
  const auto f = pl_from_slopes(bps, slopes, random_rat(rng, -3, 3, 3));
  const auto rep = global_stability_report(f, d);
  if (rep.extrema.extrema.empty() || !rep.overall_stable) return std::nullopt;
  return f;
}

Outcome sweep_agreement() {
  Outcome out;
  Engine rng(kSeedSweep);
  int done = 0;
  std::size_t alphas = 0;
  std::size_t windows = 0;
  while (done < kSweepFunctions) {
    const auto d = random_density(rng);
    const auto f = stable_generic_candidate(rng, d);
    if (!f) continue;
    ++done;
    const auto rep = run_sweep(*f, d, default_alpha_grid(*f), 4);
    if (!rep.agreement) out.fail("agreement flag false for function #" + std::to_string(done));
    for (const auto& o : rep.per_alpha) {
      ++alphas;
      if (!o.equivalent_to_source) {
        out.fail("alpha " + o.alpha.str() + " not equivalent for function #" + std::to_string(done) +
                 (o.plateau ? " (plateau)" : "") + (o.failure.empty() ? "" : " (" + o.failure + ")"));
      }
      for (std::size_t i = 0; i < o.germ_windows.size(); ++i) {
        ++windows;
        const auto& w = o.germ_windows[i];
        if (!w.ok()) {
          out.fail("window violation: " + w.violation);
          continue;
        }
        const Rat& x = w.source_position;
        const Rat& y = w.window->extremum_position;
        if (y < x - o.alpha || x + o.alpha < y) out.fail("extremum " + y.str() + " escapes its window");
      }
    }
  }
  if (out.pass) {
    out.detail = std::to_string(kSweepFunctions) + " functions, " + std::to_string(alphas) + " alphas, " +
                 std::to_string(windows) + " windows contained";
  }
  return out;
}

Outcome closed_form() {
  Outcome out;
  for (const Rat& alpha : {Rat(1, 4), Rat(1, 2)}) {
    const Rat two_alpha = Rat(2) * alpha;
    const Poly expected{alpha * alpha / two_alpha, Rat(0), Rat(1) / two_alpha};
    // The fixture is checked against the numeric oracle before the exact comparison.
    for (int k = -4; k <= 4; ++k) {
      const Rat x = alpha * Rat(k, 4);
      const double q = quadrature_oracle(abs_x(), StepDensity::uniform(), alpha, x);
      if (std::fabs(q - expected(x).to_double()) > kClosedFormOracleTol) out.fail("fixture disagrees with oracle");
    }
    const auto fa = average(abs_x(), StepDensity::uniform(), alpha).f_alpha;
    const auto k = fa.piece_index_between(-alpha, alpha);
    if (fa.pieces()[k] != expected || fa.piece_lo(k) != -alpha || fa.piece_hi(k) != alpha) {
      out.fail("middle piece differs at alpha " + alpha.str());
    }
  }
  if (out.pass) out.detail = "alpha in {1/4, 1/2}: (x^2 + alpha^2) / (2 alpha) on [-alpha, alpha]";
  return out;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"C1", "plateau counterexample", kBudgetPlateauSec, plateau_reproduction},
      {"C2", "V-profile identity", kBudgetProfileSec, profile_identity},
      {"C3", "quadrature oracle equivalence", kBudgetOracleSec, oracle_equivalence},
      {"C4", "smoothness gain", 0, smoothness_gain},
      {"C5", "X-chain structure", 0, chain_structure},
      {"C6", "criterion vs sweep agreement", kBudgetSweepSec, sweep_agreement},
      {"C7", "closed form for |x|", 0, closed_form},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.budget_sec > 0 && sec > c.budget_sec) {
      o.fail("runtime " + std::to_string(sec) + " s exceeds " + std::to_string(c.budget_sec) + " s");
    }
    if (!o.pass) ++failures;
    std::printf("%s %s %-32s %8.3f s  %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, sec, o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
