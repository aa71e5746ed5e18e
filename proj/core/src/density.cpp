#include "avstab/density.hpp"

#include "avstab/error.hpp"

namespace avstab {

StepDensity::StepDensity(std::vector<Rat> knots, std::vector<Rat> values) {
  if (knots.size() < 2 || values.size() + 1 != knots.size()) {
    throw Error(ErrorCode::invalid_argument, "a step density needs n+2 knots and n+1 values");
  }
  if (knots.front() != Rat(-1) || knots.back() != Rat(1)) {
    throw Error(ErrorCode::invalid_argument, "density knots must start at -1 and end at 1");
  }
  Rat mass(0);
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!(knots[i] < knots[i + 1])) throw Error(ErrorCode::invalid_argument, "density knots must be strictly increasing");
    if (values[i].sign() < 0) throw Error(ErrorCode::invalid_argument, "density values must be nonnegative");
    mass += (knots[i + 1] - knots[i]) * values[i];
  }
  if (mass != Rat(1)) throw Error(ErrorCode::invalid_argument, "density has total mass " + mass.str() + ", expected 1");

  knots_.push_back(knots.front());
  values_.push_back(values.front());
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] == values_.back()) continue;
    knots_.push_back(knots[i]);
    values_.push_back(values[i]);
  }
  knots_.push_back(knots.back());
}

StepDensity StepDensity::from_weights(std::vector<Rat> knots, std::vector<Rat> weights) {
  if (knots.size() < 2 || weights.size() + 1 != knots.size()) {
    throw Error(ErrorCode::invalid_argument, "a step density needs n+2 knots and n+1 values");
  }
  Rat mass(0);
  for (std::size_t i = 0; i < weights.size(); ++i) mass += (knots[i + 1] - knots[i]) * weights[i];
  if (mass.sign() <= 0) throw Error(ErrorCode::invalid_argument, "step weights must have positive mass");
  for (auto& w : weights) w /= mass;
  return StepDensity(std::move(knots), std::move(weights));
}

StepDensity StepDensity::uniform() { return StepDensity({Rat(-1), Rat(1)}, {Rat(1, 2)}); }

StepDensity StepDensity::reflected() const {
  std::vector<Rat> k;
  for (auto it = knots_.rbegin(); it != knots_.rend(); ++it) k.push_back(-*it);
  return StepDensity(std::move(k), std::vector<Rat>(values_.rbegin(), values_.rend()));
}

PiecewisePoly StepDensity::as_function() const {
  std::vector<Rat> bps(knots_.begin() + 1, knots_.end() - 1);
  std::vector<Poly> pieces;
  for (const auto& v : values_) pieces.push_back(Poly::constant(v));
  return PiecewisePoly(std::move(bps), std::move(pieces), Interval(Rat(-1), Rat(1)), -1);
}

Rat density_measure(const StepDensity& d, const Rat& a, const Rat& b) {
  if (a < Rat(-1) || b > Rat(1)) {
    throw Error(ErrorCode::out_of_support, "[" + a.str() + ", " + b.str() + "] is not inside [-1, 1]");
  }
  if (b < a) throw Error(ErrorCode::invalid_argument, "measure requires a <= b");
  Rat total(0);
  const auto& t = d.knots();
  for (std::size_t i = 0; i < d.values().size(); ++i) {
    const Rat lo = max(a, t[i]);
    const Rat hi = min(b, t[i + 1]);
    if (lo < hi) total += (hi - lo) * d.values()[i];
  }
  return total;
}

}  // namespace avstab
