#include "cli/json_io.hpp"

#include <set>

#include "avstab/error.hpp"

namespace avstab::cli {

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::parse_error, where + ": " + what);
}

void only_keys(const Json& j, const std::string& where, std::initializer_list<const char*> allowed) {
  if (!j.is_object()) bad(where, "expected an object");
  const std::set<std::string> keys(allowed.begin(), allowed.end());
  for (const auto& [k, _] : j.items()) {
    if (!keys.contains(k)) bad(where, "unexpected key '" + k + "'");
  }
}

const Json& required(const Json& j, const std::string& where, const char* key) {
  if (!j.contains(key)) bad(where, std::string("missing key '") + key + "'");
  return j.at(key);
}

}  // namespace

Rat rat_from_json(const Json& j, const std::string& where) {
  if (j.is_string()) {
    try {
      return Rat::parse(j.get<std::string>());
    } catch (const Error& e) {
      bad(where, e.what());
    }
  }
  if (j.is_number_integer()) return Rat(j.get<std::int64_t>());
  if (j.is_number_float()) bad(where, "floating-point literals are not accepted; quote the value as an exact string");
  bad(where, "expected a rational string or integer");
}

Json rat_to_json(const Rat& r) { return r.str(); }

std::vector<Rat> rats_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) bad(where, "expected an array");
  std::vector<Rat> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(rat_from_json(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

Json rats_to_json(const std::vector<Rat>& v) {
  Json out = Json::array();
  for (const auto& r : v) out.push_back(rat_to_json(r));
  return out;
}

std::vector<Rat> rats_from_list(const std::string& text) {
  std::vector<Rat> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto token = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    out.push_back(Rat::parse(token));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

Interval interval_from_json(const Json& j, const std::string& where) {
  const auto ends = rats_from_json(j, where);
  if (ends.size() != 2) bad(where, "expected [lo, hi]");
  return Interval(ends[0], ends[1]);
}

PiecewisePoly function_from_json(const Json& j) {
  const std::string where = "function";
  only_keys(j, where, {"breakpoints", "pieces", "domain", "continuity_class"});
  auto bps = j.contains("breakpoints") ? rats_from_json(j.at("breakpoints"), where + ".breakpoints") : std::vector<Rat>{};
  const auto& pieces_json = required(j, where, "pieces");
  if (!pieces_json.is_array()) bad(where + ".pieces", "expected an array");
  std::vector<Poly> pieces;
  for (std::size_t i = 0; i < pieces_json.size(); ++i) {
    const std::string pw = where + ".pieces[" + std::to_string(i) + "]";
    only_keys(pieces_json[i], pw, {"coeffs"});
    pieces.emplace_back(rats_from_json(required(pieces_json[i], pw, "coeffs"), pw + ".coeffs"));
  }
  std::optional<Interval> domain;
  if (j.contains("domain")) domain = interval_from_json(j.at("domain"), where + ".domain");
  std::optional<int> cls;
  if (j.contains("continuity_class")) {
    if (!j.at("continuity_class").is_number_integer()) bad(where + ".continuity_class", "expected an integer");
    cls = j.at("continuity_class").get<int>();
  }
  return PiecewisePoly(std::move(bps), std::move(pieces), std::move(domain), cls);
}

Json function_to_json(const PiecewisePoly& f) {
  Json out;
  out["breakpoints"] = rats_to_json(f.breakpoints());
  Json pieces = Json::array();
  for (const auto& p : f.pieces()) pieces.push_back(Json{{"coeffs", rats_to_json(p.coeffs())}});
  out["pieces"] = std::move(pieces);
  if (f.domain()) out["domain"] = Json::array({rat_to_json(f.domain()->lo), rat_to_json(f.domain()->hi)});
  out["continuity_class"] = f.continuity_class();
  return out;
}

StepDensity density_from_json(const Json& j) {
  only_keys(j, "density", {"knots", "values"});
  return StepDensity(rats_from_json(required(j, "density", "knots"), "density.knots"),
                     rats_from_json(required(j, "density", "values"), "density.values"));
}

Json density_to_json(const StepDensity& d) {
  return Json{{"knots", rats_to_json(d.knots())}, {"values", rats_to_json(d.values())}};
}

Json to_json(const ExtendedValue& v) { return v.str(); }

Json to_json(const CriticalSequence& cs) {
  Json ex = Json::array();
  for (const auto& e : cs.extrema) {
    ex.push_back(Json{{"position", rat_to_json(e.position)},
                      {"value", rat_to_json(e.value)},
                      {"kind", std::string(to_string(e.kind))}});
  }
  return Json{{"extrema", std::move(ex)},
              {"left_trend", std::string(to_string(cs.left_trend))},
              {"right_trend", std::string(to_string(cs.right_trend))},
              {"left_limit", to_json(cs.left_limit)},
              {"right_limit", to_json(cs.right_limit)}};
}

Json to_json(const Plateau& p) {
  return Json{{"lo", p.lo ? Json(p.lo->str()) : Json("-inf")},
              {"hi", p.hi ? Json(p.hi->str()) : Json("+inf")},
              {"value", rat_to_json(p.value)}};
}

Json to_json(const StabilityVerdict& v) {
  return Json{{"position", rat_to_json(v.germ.position)},
              {"L", rat_to_json(v.germ.left)},
              {"R", rat_to_json(v.germ.right)},
              {"x_chain", rats_to_json(v.x_chain)},
              {"curvature_c", rat_to_json(v.curvature_c)},
              {"status", std::string(to_string(v.status))},
              {"witness", v.witness ? Json(*v.witness) : Json(nullptr)}};
}

Json to_json(const WindowRecord& w) {
  Json out{{"source_position", rat_to_json(w.source_position)}};
  if (w.window) {
    out["c"] = Json::array({rat_to_json(w.window->c1), rat_to_json(w.window->c2)});
    out["d"] = Json::array({rat_to_json(w.window->d1), rat_to_json(w.window->d2)});
    out["extremum_position"] = rat_to_json(w.window->extremum_position);
  } else {
    out["violation"] = w.violation;
  }
  return out;
}

}  // namespace avstab::cli
