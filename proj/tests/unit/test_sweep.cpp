#include <doctest.h>

#include "avstab/averaging.hpp"
#include "avstab/sweep.hpp"
#include "support/checks.hpp"
#include "support/generators.hpp"

using namespace avstab;
using namespace avstab::testing;

namespace {

std::vector<Rat> rats(std::initializer_list<long> v) {
  std::vector<Rat> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

/// Unit-slope zigzag with kinks at the given points, starting downward.
PiecewisePoly zigzag(std::initializer_list<long> kinks) {
  std::vector<Rat> slopes;
  long s = -1;
  for (std::size_t k = 0; k <= kinks.size(); ++k, s = -s) slopes.emplace_back(s);
  return pl_from_slopes(rats(kinks), slopes, Rat(0));
}

PiecewisePoly w_shape() { return pl_from_slopes(rats({-2, 0, 3}), rats({-1, 1, -1, 1}), Rat(0)); }

}  // namespace

TEST_SUITE("sweep") {
  TEST_CASE("alpha_max examples") {
    CHECK(alpha_max(zigzag({0, 1})) == Rat(1, 4));
    CHECK(alpha_max(abs_x()) == Rat(1));
    CHECK(alpha_max(zigzag({0, 1, 11})) == Rat(1, 4));
    CHECK(alpha_max(PiecewisePoly::from_poly(Poly::linear(Rat(0), Rat(1)))) == Rat(1));
    CHECK(alpha_max(abs_x().restricted(Interval(Rat(-1), Rat(3)))) == Rat(1, 4));
    CHECK(alpha_max(PiecewisePoly::from_poly(Poly::linear(Rat(0), Rat(1)), Interval(Rat(0), Rat(8)))) == Rat(2));
  }

  TEST_CASE("alpha_max keeps other kinks and close values out of reach") {
    // Non-extremal kink at 1/2 next to the minimum at 0.
    const auto f = pl_from_slopes(rats({0, 1}) , {Rat(-1), Rat(1), Rat(3)}, Rat(0));
    CHECK(alpha_max(f) == Rat(1, 4));
    const auto g = pl_from_slopes({Rat(0), Rat(1, 2)}, {Rat(-1), Rat(1), Rat(3)}, Rat(0));
    CHECK(alpha_max(g) == Rat(1, 8));
    // Minima at 0 and 10 with values 0 and 1/10, slopes up to 1.
    const auto h = pl_from_slopes(rats({0, 5, 10}), {Rat(-1), Rat(1), Rat(-49, 50), Rat(1)}, Rat(0));
    CHECK(alpha_max(h) == Rat(1, 40));
  }

  TEST_CASE("default grid is geometric, ascending and below alpha_max") {
    const auto grid = default_alpha_grid(abs_x());
    REQUIRE(grid.size() == 12);
    CHECK(grid.back() == Rat(2, 3));
    for (std::size_t k = 0; k + 1 < grid.size(); ++k) CHECK(grid[k + 1] == grid[k] * Rat(3, 2));
    CHECK(default_alpha_grid(abs_x(), 3).size() == 3);
    CHECK(error_of([] { default_alpha_grid(abs_x(), 0); }) == ErrorCode::invalid_argument);
  }

  TEST_CASE("germ_windows examples") {
    const auto src = critical_sequence(abs_x());
    const auto fa = average(abs_x(), StepDensity::uniform(), Rat(1, 4));
    const auto w = germ_windows(abs_x(), fa, src);
    REQUIRE(w.size() == 1);
    REQUIRE(w[0].ok());
    CHECK(w[0].window->extremum_position == Rat(0));
    CHECK(w[0].window->c1 < Rat(0));
    CHECK(Rat(0) < w[0].window->c2);
    CHECK(w[0].window->d1 < Rat(0));
    CHECK(Rat(0) < w[0].window->d2);

    const auto pa = average(plateau_f(), plateau_density(), Rat(2, 5));
    const auto pw = germ_windows(plateau_f(), pa, critical_sequence(plateau_f()));
    REQUIRE(pw.size() == 1);
    CHECK_FALSE(pw[0].ok());
    CHECK_FALSE(pw[0].violation.empty());

    const auto up = PiecewisePoly::from_poly(Poly::linear(Rat(0), Rat(1)));
    CHECK(germ_windows(up, average(up, plateau_density(), Rat(1, 2)), critical_sequence(up)).empty());
  }

  TEST_CASE("germ windows are matched neighbourhoods") {
    const auto f = w_shape();
    const auto src = critical_sequence(f);
    for (const Rat& alpha : default_alpha_grid(f)) {
      const auto fa = average(f, StepDensity::uniform(), alpha);
      const auto ws = germ_windows(f, fa, src);
      REQUIRE(ws.size() == 3);
      for (std::size_t i = 0; i < ws.size(); ++i) {
        REQUIRE(ws[i].ok());
        const auto& g = *ws[i].window;
        const Rat& x = src.extrema[i].position;
        CHECK(x - alpha <= g.extremum_position);
        CHECK(g.extremum_position <= x + alpha);
        CHECK(topologically_equivalent(critical_sequence(f, Interval(g.c1, g.c2)),
                                       critical_sequence(fa.f_alpha, Interval(g.d1, g.d2))));
      }
    }
  }

  TEST_CASE("run_sweep on the plateau example") {
    const auto r = run_sweep(plateau_f(), plateau_density(), {Rat(3, 10), Rat(1, 10), Rat(2, 10), Rat(1, 10)});
    CHECK(r.alphas == std::vector<Rat>{Rat(1, 10), Rat(2, 10), Rat(3, 10)});
    CHECK_FALSE(r.predicted.overall_stable);
    CHECK(r.agreement);
    for (const auto& o : r.per_alpha) {
      REQUIRE(o.plateau.has_value());
      CHECK(o.plateau->lo == Rat(0));
      CHECK(o.plateau->hi == o.alpha / Rat(2));
      CHECK_FALSE(o.fingerprint.has_value());
      CHECK_FALSE(o.equivalent_to_source);
      CHECK(o.witness_plateaus_observed);
    }
    const auto dflt = run_sweep(plateau_f(), plateau_density(), default_alpha_grid(plateau_f()));
    CHECK(dflt.agreement);
    for (const auto& o : dflt.per_alpha) CHECK_FALSE(o.equivalent_to_source);
  }

  TEST_CASE("run_sweep on |x| with the uniform density") {
    const auto r = run_sweep(abs_x(), StepDensity::uniform(), {Rat(1, 10), Rat(1, 4), Rat(1, 2) - Rat(1, 100)});
    CHECK(r.predicted.overall_stable);
    CHECK(r.agreement);
    for (const auto& o : r.per_alpha) {
      CHECK(o.equivalent_to_source);
      REQUIRE(o.germ_windows.size() == 1);
      CHECK(o.germ_windows[0].ok());
    }
  }

  TEST_CASE("run_sweep on a W shape") {
    const auto r = run_sweep(w_shape(), StepDensity::uniform(), default_alpha_grid(w_shape()));
    CHECK(r.predicted.overall_stable);
    CHECK(r.agreement);
    for (const auto& o : r.per_alpha) CHECK(o.equivalent_to_source);
  }

  TEST_CASE("run_sweep validates the grid") {
    CHECK(error_of([] { run_sweep(abs_x(), StepDensity::uniform(), {Rat(1)}); }) == ErrorCode::invalid_argument);
    CHECK(error_of([] { run_sweep(abs_x(), StepDensity::uniform(), {Rat(0)}); }) == ErrorCode::invalid_argument);
    CHECK(run_sweep(abs_x(), StepDensity::uniform(), {}).agreement);
  }

  TEST_CASE("run_sweep output does not depend on the number of workers") {
    Engine rng(71);
    for (int i = 0; i < 10; ++i) {
      const auto f = random_pl(rng, 5);
      const auto d = random_density(rng);
      std::vector<Rat> grid;
      try {
        grid = default_alpha_grid(f, 6);
      } catch (const Error&) {
        continue;
      }
      SweepReport a;
      try {
        a = run_sweep(f, d, grid, 1);
      } catch (const Error&) {
        continue;  // e.g. f itself has a flat stretch
      }
      const auto b = run_sweep(f, d, grid, 4);
      CHECK(a.agreement == b.agreement);
      REQUIRE(a.per_alpha.size() == b.per_alpha.size());
      for (std::size_t k = 0; k < a.per_alpha.size(); ++k) {
        CHECK(a.per_alpha[k].alpha == b.per_alpha[k].alpha);
        CHECK(a.per_alpha[k].fingerprint == b.per_alpha[k].fingerprint);
        CHECK(a.per_alpha[k].equivalent_to_source == b.per_alpha[k].equivalent_to_source);
        CHECK(a.per_alpha[k].failure == b.per_alpha[k].failure);
      }
    }
  }

  TEST_CASE("witness plateaus appear wherever a zero-density gap spans the kink") {
    Engine rng(72);
    int seen = 0;
    for (int i = 0; i < 100 && seen < 30; ++i) {
      const auto d = random_density(rng);
      for (std::size_t k = 0; k < d.piece_count(); ++k) {
        if (!d.values()[k].is_zero()) continue;
        const Rat below = density_measure(d, Rat(-1), d.knots()[k]);
        const Rat above = density_measure(d, d.knots()[k], Rat(1));
        if (below.is_zero() || above.is_zero()) continue;
        const auto f = pl_from_slopes({Rat(0)}, {-above, below}, Rat(0));
        const auto r = run_sweep(f, d, default_alpha_grid(f, 5));
        CHECK_FALSE(r.predicted.overall_stable);
        CHECK(r.agreement);
        for (const auto& o : r.per_alpha) {
          CHECK(o.witness_plateaus_observed);
          CHECK(o.plateau.has_value());
        }
        ++seen;
        break;
      }
    }
    CHECK(seen >= 10);
  }
}
