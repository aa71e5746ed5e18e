#include "avstab/piecewise.hpp"

#include <algorithm>
#include <ostream>

#include "avstab/error.hpp"

namespace avstab {

Interval::Interval(Rat lo_, Rat hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
  if (!(lo < hi)) {
    throw Error(ErrorCode::invalid_argument, "interval [" + lo.str() + ", " + hi.str() + "] is empty or degenerate");
  }
}

PiecewisePoly::PiecewisePoly(std::vector<Rat> breakpoints, std::vector<Poly> pieces,
                             std::optional<Interval> domain, std::optional<int> continuity_class)
    : domain_(std::move(domain)) {
  if (pieces.size() != breakpoints.size() + 1) {
    throw Error(ErrorCode::invalid_argument, "piece count must equal breakpoint count + 1");
  }
  for (std::size_t i = 1; i < breakpoints.size(); ++i) {
    if (!(breakpoints[i - 1] < breakpoints[i])) {
      throw Error(ErrorCode::invalid_argument, "breakpoints must be strictly increasing");
    }
  }
  if (domain_ && !breakpoints.empty() &&
      !(domain_->lo < breakpoints.front() && breakpoints.back() < domain_->hi)) {
    throw Error(ErrorCode::invalid_argument, "breakpoints must lie strictly inside the domain");
  }

  // Canonical merge of identical neighbours.
  pieces_.push_back(std::move(pieces.front()));
  for (std::size_t i = 0; i < breakpoints.size(); ++i) {
    if (pieces[i + 1] == pieces_.back()) continue;
    breakpoints_.push_back(std::move(breakpoints[i]));
    pieces_.push_back(std::move(pieces[i + 1]));
  }

  const int exact = exact_continuity_class();
  if (continuity_class) {
    if (*continuity_class < -1) throw Error(ErrorCode::invalid_argument, "continuity class must be >= -1");
    if (*continuity_class > exact) {
      throw Error(ErrorCode::invalid_argument,
                  "declared continuity class " + std::to_string(*continuity_class) +
                      " exceeds the exact class " + std::to_string(exact));
    }
    continuity_class_ = breakpoints_.empty() ? kSmooth : *continuity_class;
  } else {
    continuity_class_ = exact;
  }
}

std::size_t PiecewisePoly::piece_index(const Rat& x, Side side) const {
  const auto it = side == Side::left ? std::lower_bound(breakpoints_.begin(), breakpoints_.end(), x)
                                     : std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
  return static_cast<std::size_t>(it - breakpoints_.begin());
}

std::size_t PiecewisePoly::piece_index_between(const std::optional<Rat>& lo, const std::optional<Rat>& hi) const {
  Rat probe(0);
  if (lo && hi) {
    probe = (*lo + *hi) / Rat(2);
  } else if (lo) {
    probe = *lo + Rat(1);
  } else if (hi) {
    probe = *hi - Rat(1);
  } else {
    return 0;
  }
  return piece_index(probe, Side::point);
}

std::optional<Rat> PiecewisePoly::piece_lo(std::size_t i) const {
  if (i == 0) return domain_ ? std::optional<Rat>(domain_->lo) : std::nullopt;
  return breakpoints_[i - 1];
}

std::optional<Rat> PiecewisePoly::piece_hi(std::size_t i) const {
  if (i == breakpoints_.size()) return domain_ ? std::optional<Rat>(domain_->hi) : std::nullopt;
  return breakpoints_[i];
}

int PiecewisePoly::max_degree() const {
  int d = -1;
  for (const auto& p : pieces_) d = std::max(d, p.degree());
  return d;
}

int PiecewisePoly::exact_continuity_class() const {
  if (breakpoints_.empty()) return kSmooth;
  std::vector<Poly> left(pieces_.begin(), pieces_.end() - 1);
  std::vector<Poly> right(pieces_.begin() + 1, pieces_.end());
  for (int order = 0; order <= kSmooth; ++order) {
    for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
      if (left[i](breakpoints_[i]) != right[i](breakpoints_[i])) return order - 1;
    }
    for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
      left[i] = left[i].derivative();
      right[i] = right[i].derivative();
    }
  }
  return kSmooth;
}

PiecewisePoly PiecewisePoly::restricted(const Interval& iv) const {
  const auto dom = intersect_domains(domain_, iv);
  const std::size_t first = piece_index(dom->lo, Side::right);
  const std::size_t last = piece_index(dom->hi, Side::left);
  std::vector<Rat> bps(breakpoints_.begin() + static_cast<std::ptrdiff_t>(first),
                       breakpoints_.begin() + static_cast<std::ptrdiff_t>(last));
  std::vector<Poly> pcs(pieces_.begin() + static_cast<std::ptrdiff_t>(first),
                        pieces_.begin() + static_cast<std::ptrdiff_t>(last) + 1);
  return PiecewisePoly(std::move(bps), std::move(pcs), dom, continuity_class_);
}

PiecewisePoly PiecewisePoly::shifted(const Rat& c) const {
  std::vector<Rat> bps;
  bps.reserve(breakpoints_.size());
  for (const auto& b : breakpoints_) bps.push_back(b - c);
  std::vector<Poly> pcs;
  pcs.reserve(pieces_.size());
  for (const auto& p : pieces_) pcs.push_back(p.compose_affine(Rat(1), c));
  std::optional<Interval> dom;
  if (domain_) dom = Interval(domain_->lo - c, domain_->hi - c);
  return PiecewisePoly(std::move(bps), std::move(pcs), dom, continuity_class_);
}

PiecewisePoly PiecewisePoly::reflected() const {
  std::vector<Rat> bps;
  for (auto it = breakpoints_.rbegin(); it != breakpoints_.rend(); ++it) bps.push_back(-*it);
  std::vector<Poly> pcs;
  for (auto it = pieces_.rbegin(); it != pieces_.rend(); ++it) pcs.push_back(it->compose_affine(Rat(-1), Rat(0)));
  std::optional<Interval> dom;
  if (domain_) dom = Interval(-domain_->hi, -domain_->lo);
  return PiecewisePoly(std::move(bps), std::move(pcs), dom, continuity_class_);
}

std::ostream& operator<<(std::ostream& os, const PiecewisePoly& f) {
  os << "PiecewisePoly{";
  if (f.domain()) os << "domain=[" << f.domain()->lo << ", " << f.domain()->hi << "], ";
  os << "class=" << f.continuity_class() << ", ";
  for (std::size_t i = 0; i < f.pieces().size(); ++i) {
    if (i) os << " | " << f.breakpoints()[i - 1] << " | ";
    os << f.pieces()[i];
  }
  return os << '}';
}

std::optional<Interval> intersect_domains(const std::optional<Interval>& a, const std::optional<Interval>& b) {
  if (!a) return b;
  if (!b) return a;
  const Rat lo = max(a->lo, b->lo);
  const Rat hi = min(a->hi, b->hi);
  if (!(lo < hi)) throw Error(ErrorCode::empty_domain_intersection, "domains do not overlap");
  return Interval(lo, hi);
}

Rat pw_eval(const PiecewisePoly& f, const Rat& x, Side side) {
  if (!f.in_domain(x)) throw Error(ErrorCode::out_of_domain, x.str() + " is outside the domain");
  if (const auto& dom = f.domain()) {
    if ((side == Side::left && x == dom->lo) || (side == Side::right && x == dom->hi)) {
      throw Error(ErrorCode::out_of_domain, "one-sided limit at " + x.str() + " leaves the domain");
    }
    if (side == Side::point && x == dom->lo) return f.pieces().front()(x);
    if (side == Side::point && x == dom->hi) return f.pieces().back()(x);
  }
  if (side != Side::point) return f.pieces()[f.piece_index(x, side)](x);

  const Rat left = f.pieces()[f.piece_index(x, Side::left)](x);
  const Rat right = f.pieces()[f.piece_index(x, Side::right)](x);
  if (left != right) {
    throw Error(ErrorCode::ambiguous_at_jump, "jump at " + x.str() + ": " + left.str() + " vs " + right.str());
  }
  return right;
}

PiecewisePoly pw_combine(const Rat& a, const PiecewisePoly& f, const Rat& b, const PiecewisePoly& g) {
  const auto dom = intersect_domains(f.domain(), g.domain());

  std::vector<Rat> bps;
  std::merge(f.breakpoints().begin(), f.breakpoints().end(), g.breakpoints().begin(), g.breakpoints().end(),
             std::back_inserter(bps));
  bps.erase(std::unique(bps.begin(), bps.end()), bps.end());
  if (dom) {
    std::erase_if(bps, [&](const Rat& t) { return !(dom->lo < t && t < dom->hi); });
  }

  std::vector<Poly> pieces;
  pieces.reserve(bps.size() + 1);
  for (std::size_t i = 0; i <= bps.size(); ++i) {
    std::optional<Rat> lo = i == 0 ? (dom ? std::optional<Rat>(dom->lo) : std::nullopt) : std::optional<Rat>(bps[i - 1]);
    std::optional<Rat> hi = i == bps.size() ? (dom ? std::optional<Rat>(dom->hi) : std::nullopt) : std::optional<Rat>(bps[i]);
    const auto& pf = f.pieces()[f.piece_index_between(lo, hi)];
    const auto& pg = g.pieces()[g.piece_index_between(lo, hi)];
    pieces.push_back(a * pf + b * pg);
  }
  return PiecewisePoly(std::move(bps), std::move(pieces), dom, std::min(f.continuity_class(), g.continuity_class()));
}

PiecewisePoly pw_derivative(const PiecewisePoly& f) {
  if (f.continuity_class() < 0) {
    throw Error(ErrorCode::precondition, "derivative requires a continuous function");
  }
  std::vector<Poly> pieces;
  pieces.reserve(f.pieces().size());
  for (const auto& p : f.pieces()) pieces.push_back(p.derivative());
  return PiecewisePoly(f.breakpoints(), std::move(pieces), f.domain(), f.continuity_class() - 1);
}

PiecewisePoly pw_antiderivative(const PiecewisePoly& f, const Rat& base) {
  if (!f.in_domain(base)) throw Error(ErrorCode::out_of_domain, "base " + base.str() + " is outside the domain");
  const auto& bps = f.breakpoints();
  std::vector<Poly> out;
  out.reserve(f.pieces().size());
  for (const auto& p : f.pieces()) out.push_back(p.antiderivative());

  const std::size_t k = f.piece_index(base, Side::point);
  out[k] -= Poly::constant(out[k](base));
  for (std::size_t j = k + 1; j < out.size(); ++j) {
    const Rat& t = bps[j - 1];
    out[j] += Poly::constant(out[j - 1](t) - out[j](t));
  }
  for (std::size_t j = k; j-- > 0;) {
    const Rat& t = bps[j];
    out[j] += Poly::constant(out[j + 1](t) - out[j](t));
  }
  const int cls = std::min(PiecewisePoly::kSmooth, std::max(0, f.continuity_class() + 1));
  return PiecewisePoly(bps, std::move(out), f.domain(), cls);
}

}  // namespace avstab
