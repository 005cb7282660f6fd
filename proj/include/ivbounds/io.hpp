#pragma once

// JSON encodings of the model and report types. Probabilities are always exact "a/b" strings.

#include <json.hpp>

#include "ivbounds/analysis.hpp"

namespace ivbounds::io {

using Json = nlohmann::ordered_json;

/// Parses { "z0": {"y0d0": s, ...}, "z1": {...} }. Values are strings ("3/10", "0.3") or JSON numbers.
/// Throws ValidationError for anything malformed.
DataDistribution data_from_json(const Json& j);
Json to_json(const DataDistribution& p);

/// Array of [y0,y1] pairs sorted by cell index.
Json to_json(const Event& event);
Event event_from_json(const Json& j);

Json to_json(const Interval& interval);
Interval interval_from_json(const Json& j);

/// {"event": [...], "E": {"lo","hi"}, "EM": {...}, "strict": bool}
Json to_json(const EventBounds& row);
EventBounds event_bounds_from_json(const Json& j);

/// Array of the 16 rows in mask order.
Json to_json(const BoundsTable& table);
BoundsTable bounds_table_from_json(const Json& j);

/// Keyed by response type label "y0y1d0d1".
Json to_json(const MassFunction& q);
MassFunction mass_from_json(const Json& j);

Json to_json(const ContentReport& report);
Json to_json(const ConsistencyReport& report);
Json to_json(const InfeasibilityCertificate& certificate);

Json rational_array(const std::vector<Rational>& values);

}  // namespace ivbounds::io
