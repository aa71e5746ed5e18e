#include "avstab/topology.hpp"

#include <cstddef>

namespace avstab {

namespace {

struct Segment {
  std::optional<Rat> lo;
  std::optional<Rat> hi;
  int sign;  // of f' on the open segment
  std::size_t piece;
};

std::string describe(const Plateau& p) {
  return "function is constant (" + p.value.str() + ") on [" + (p.lo ? p.lo->str() : "-inf") + ", " +
         (p.hi ? p.hi->str() : "+inf") + "]";
}

bool inside(const std::optional<Rat>& lo, const std::optional<Rat>& hi, const Rat& v) {
  return (!lo || *lo < v) && (!hi || v < *hi);
}

std::vector<Segment> monotone_segments(const PiecewisePoly& f) {
  std::vector<Segment> segs;
  auto push = [&](Segment s) {
    if (!segs.empty() && segs.back().sign == s.sign) {
      segs.back().hi = s.hi;
    } else {
      segs.push_back(std::move(s));
    }
  };
  for (std::size_t i = 0; i < f.pieces().size(); ++i) {
    const auto& p = f.pieces()[i];
    const auto lo = f.piece_lo(i);
    const auto hi = f.piece_hi(i);
    if (p.degree() <= 0) {
      push({lo, hi, 0, i});
    } else if (p.degree() == 1) {
      push({lo, hi, p.coeff(1).sign(), i});
    } else {
      const Rat vertex = -p.coeff(1) / (Rat(2) * p.coeff(2));
      const int up = p.coeff(2).sign();
      if (inside(lo, hi, vertex)) {
        push({lo, vertex, -up, i});
        push({vertex, hi, up, i});
      } else if (lo && vertex <= *lo) {
        push({lo, hi, up, i});
      } else {
        push({lo, hi, -up, i});
      }
    }
  }
  return segs;
}

// Sign of f(x) as x -> +inf (toward_plus) or -inf for a nonconstant polynomial.
ExtendedValue tail_limit(const Poly& p, bool toward_plus) {
  int s = p.leading().sign();
  if (!toward_plus && p.degree() % 2 == 1) s = -s;
  return s > 0 ? ExtendedValue::pos_inf() : ExtendedValue::neg_inf();
}

int compare_sign(const ExtendedValue& a, const ExtendedValue& b) {
  const auto c = a <=> b;
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

void require_generic(const CriticalSequence& s) {
  for (std::size_t i = 0; i < s.extrema.size(); ++i) {
    for (std::size_t j = i + 1; j < s.extrema.size(); ++j) {
      if (s.extrema[i].value == s.extrema[j].value) {
        throw Error(ErrorCode::non_generic, "extreme values repeat: " + s.extrema[i].value.str());
      }
    }
  }
}

std::vector<ExtendedValue> ranked_values(const CriticalSequence& s) {
  std::vector<ExtendedValue> out{s.left_limit};
  for (const auto& e : s.extrema) out.push_back(ExtendedValue::finite(e.value));
  out.push_back(s.right_limit);
  return out;
}

}  // namespace

std::string_view to_string(ExtremumKind kind) noexcept { return kind == ExtremumKind::min ? "min" : "max"; }

std::string_view to_string(Trend trend) noexcept {
  return trend == Trend::increasing ? "increasing" : "decreasing";
}

std::string ExtendedValue::str() const {
  switch (kind_) {
    case Kind::neg_inf: return "-inf";
    case Kind::pos_inf: return "+inf";
    case Kind::finite: break;
  }
  return value_.str();
}

std::strong_ordering operator<=>(const ExtendedValue& a, const ExtendedValue& b) {
  if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
  if (a.kind_ != ExtendedValue::Kind::finite) return std::strong_ordering::equal;
  return a.value_ <=> b.value_;
}

PlateauDetected::PlateauDetected(Plateau plateau)
    : Error(ErrorCode::plateau_detected, describe(plateau)), plateau_(std::move(plateau)) {}

CriticalSequence critical_sequence(const PiecewisePoly& f, const std::optional<Interval>& interval) {
  const PiecewisePoly g = interval ? f.restricted(*interval) : f;
  if (g.exact_continuity_class() < 0) throw Error(ErrorCode::precondition, "critical_sequence needs a continuous function");
  if (g.max_degree() > 2) {
    throw Error(ErrorCode::degree_too_high,
                "exact extrema need pieces of degree <= 2, got " + std::to_string(g.max_degree()));
  }

  const auto segs = monotone_segments(g);
  for (const auto& s : segs) {
    if (s.sign == 0) throw PlateauDetected(Plateau{s.lo, s.hi, g.pieces()[s.piece].coeff(0)});
  }

  CriticalSequence out;
  for (std::size_t k = 1; k < segs.size(); ++k) {
    const Rat& pos = *segs[k].lo;
    out.extrema.push_back(
        Extremum{pos, pw_eval(g, pos), segs[k - 1].sign > 0 ? ExtremumKind::max : ExtremumKind::min});
  }
  out.left_trend = segs.front().sign > 0 ? Trend::increasing : Trend::decreasing;
  out.right_trend = segs.back().sign > 0 ? Trend::increasing : Trend::decreasing;
  if (const auto& dom = g.domain()) {
    out.left_limit = ExtendedValue::finite(pw_eval(g, dom->lo));
    out.right_limit = ExtendedValue::finite(pw_eval(g, dom->hi));
  } else {
    out.left_limit = tail_limit(g.pieces().front(), false);
    out.right_limit = tail_limit(g.pieces().back(), true);
  }
  return out;
}

bool topologically_equivalent(const CriticalSequence& a, const CriticalSequence& b) {
  require_generic(a);
  require_generic(b);
  if (a.extrema.size() != b.extrema.size()) return false;
  if (a.left_trend != b.left_trend || a.right_trend != b.right_trend) return false;
  for (std::size_t i = 0; i < a.extrema.size(); ++i) {
    if (a.extrema[i].kind != b.extrema[i].kind) return false;
  }
  const auto va = ranked_values(a);
  const auto vb = ranked_values(b);
  for (std::size_t i = 0; i < va.size(); ++i) {
    for (std::size_t j = i + 1; j < va.size(); ++j) {
      if (compare_sign(va[i], va[j]) != compare_sign(vb[i], vb[j])) return false;
    }
  }
  return true;
}

bool is_strictly_convex(const PiecewisePoly& f, const Interval& iv) {
  const PiecewisePoly g = f.restricted(iv);
  if (g.max_degree() > 3) {
    throw Error(ErrorCode::degree_too_high, "convexity check needs pieces of degree <= 3");
  }
  if (g.exact_continuity_class() < 0) throw Error(ErrorCode::precondition, "convexity check needs a continuous function");

  std::vector<Poly> slopes;
  for (const auto& p : g.pieces()) slopes.push_back(p.derivative());

  for (std::size_t i = 0; i < slopes.size(); ++i) {
    const auto& q = slopes[i];
    if (q.degree() <= 0) return false;
    if (q.degree() == 1 && q.coeff(1).sign() <= 0) return false;
    if (q.degree() == 2) {
      const Poly q2 = q.derivative();
      if (q2(*g.piece_lo(i)).sign() < 0 || q2(*g.piece_hi(i)).sign() < 0) return false;
    }
  }
  for (std::size_t i = 0; i < g.breakpoints().size(); ++i) {
    const Rat& t = g.breakpoints()[i];
    if (slopes[i + 1](t) < slopes[i](t)) return false;
  }
  return true;
}

std::optional<Rat> unique_minimum(const PiecewisePoly& f, const Interval& iv) {
  const auto cs = critical_sequence(f, iv);
  if (cs.extrema.size() != 1 || cs.extrema.front().kind != ExtremumKind::min) return std::nullopt;
  if (cs.left_trend != Trend::decreasing || cs.right_trend != Trend::increasing) return std::nullopt;
  return cs.extrema.front().position;
}

}  // namespace avstab
