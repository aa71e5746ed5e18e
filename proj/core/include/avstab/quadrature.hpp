#pragma once

#include <vector>

#include "avstab/density.hpp"
#include "avstab/piecewise.hpp"
#include "avstab/rational.hpp"

namespace avstab {

struct GaussRule {
  std::vector<double> nodes;  // on [-1, 1]
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule; exact for polynomials of degree <= 2n - 1.
const GaussRule& gauss_legendre(int points);

/// Floating-point evaluation of f_alpha(x) straight from the defining
/// integral, independent of the closed form: [-1, 1] is split at the density
/// knots and wherever x + t alpha meets a breakpoint of f, and each sub-interval
/// gets a Gauss rule of ceil((deg + 1) / 2) points.
double quadrature_oracle(const PiecewisePoly& f, const StepDensity& d, const Rat& alpha, const Rat& x);

}  // namespace avstab
