#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "avstab/density.hpp"
#include "avstab/piecewise.hpp"
#include "avstab/rational.hpp"
#include "avstab/stability.hpp"
#include "avstab/sweep.hpp"
#include "avstab/topology.hpp"

namespace avstab::cli {

using Json = nlohmann::ordered_json;

/// Exact scalar from a JSON string ("p", "p/q", "d.ddd") or JSON integer.
/// Floating-point JSON numbers are rejected.
Rat rat_from_json(const Json& j, const std::string& where);
Json rat_to_json(const Rat& r);

std::vector<Rat> rats_from_json(const Json& j, const std::string& where);
Json rats_to_json(const std::vector<Rat>& v);

/// Comma separated rational list, e.g. "1/10,1/4,0.4".
std::vector<Rat> rats_from_list(const std::string& text);

/// {"breakpoints": [...], "pieces": [{"coeffs": [...]}, ...],
///  "domain": [a, b] (optional), "continuity_class": k (optional)}
PiecewisePoly function_from_json(const Json& j);
Json function_to_json(const PiecewisePoly& f);

/// {"knots": [...], "values": [...]}
StepDensity density_from_json(const Json& j);
Json density_to_json(const StepDensity& d);

Interval interval_from_json(const Json& j, const std::string& where);

Json to_json(const ExtendedValue& v);
Json to_json(const CriticalSequence& cs);
Json to_json(const Plateau& p);
Json to_json(const StabilityVerdict& v);
Json to_json(const WindowRecord& w);

}  // namespace avstab::cli
