#include "ivbounds/io.hpp"

#include <stdexcept>

#include "ivbounds/errors.hpp"

namespace ivbounds::io {

namespace {

std::string value_text(const Json& v, const std::string& where) {
    if (v.is_string()) return v.get<std::string>();
    // JSON numbers are taken by their literal spelling, so 0.3 reads as 3/10
    if (v.is_number()) return v.dump();
    throw ValidationError(ValidationKind::MalformedNumber, where + ": expected a number or a string");
}

Rational rational_from(const Json& v, const std::string& where) {
    if (!v.is_string() && !v.is_number()) {
        throw ValidationError(ValidationKind::MalformedNumber, where + ": expected a number or a string");
    }
    return parse_rational(value_text(v, where));
}

const Json& member(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) {
        throw ValidationError(ValidationKind::MissingEntry, std::string("missing \"") + key + "\"");
    }
    return j.at(key);
}

}  // namespace

Json rational_array(const std::vector<Rational>& values) {
    Json out = Json::array();
    for (const auto& v : values) out.push_back(to_string(v));
    return out;
}

DataDistribution data_from_json(const Json& j) {
    if (!j.is_object()) throw ValidationError(ValidationKind::MissingEntry, "data must be a JSON object with z0 and z1");
    RawDistribution raw;
    for (const auto& [zkey, block] : j.items()) {
        if (zkey != "z0" && zkey != "z1") {
            throw ValidationError(ValidationKind::UnknownEntry, "unknown instrument key \"" + zkey + "\"");
        }
        if (!block.is_object()) {
            throw ValidationError(ValidationKind::MissingEntry, "\"" + zkey + "\" must be an object");
        }
        for (const auto& [cell, v] : block.items()) {
            const std::string label = cell + "|" + zkey;
            raw[label] = value_text(v, label);
        }
    }
    for (const char* zkey : {"z0", "z1"}) {
        if (!j.contains(zkey)) throw ValidationError(ValidationKind::MissingEntry, std::string("missing \"") + zkey + "\"");
    }
    return parse_data_distribution(raw);
}

Json to_json(const DataDistribution& p) {
    Json out = Json::object();
    for (int z = 0; z < 2; ++z) {
        Json block = Json::object();
        for (int d = 0; d < 2; ++d) {
            for (int y = 0; y < 2; ++y) {
                block["y" + std::to_string(y) + "d" + std::to_string(d)] = to_string(p(y, d, z));
            }
        }
        out["z" + std::to_string(z)] = block;
    }
    return out;
}

Json to_json(const Event& event) {
    Json out = Json::array();
    for (const auto& c : event.cells()) out.push_back(Json::array({c.y0(), c.y1()}));
    return out;
}

Event event_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("event must be an array of [y0,y1] pairs");
    std::vector<OutcomeCell> cells;
    for (const auto& pair : j) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() || !pair[1].is_number_integer()) {
            throw std::invalid_argument("event cells must be [y0,y1] pairs of 0/1");
        }
        cells.emplace_back(pair[0].get<int>(), pair[1].get<int>());
    }
    return Event(cells);
}

Json to_json(const Interval& interval) {
    return Json{{"lo", to_string(interval.lo())}, {"hi", to_string(interval.hi())}};
}

Interval interval_from_json(const Json& j) {
    return Interval(rational_from(member(j, "lo"), "lo"), rational_from(member(j, "hi"), "hi"));
}

Json to_json(const EventBounds& row) {
    return Json{{"event", to_json(row.event)},
                {"E", to_json(row.exogeneity)},
                {"EM", to_json(row.monotone)},
                {"strict", row.strict()}};
}

EventBounds event_bounds_from_json(const Json& j) {
    auto row = make_event_bounds(event_from_json(member(j, "event")), interval_from_json(member(j, "E")),
                                 interval_from_json(member(j, "EM")));
    const auto& strict = member(j, "strict");
    if (!strict.is_boolean() || strict.get<bool>() != row.strict()) {
        throw std::invalid_argument("strict flag does not match the intervals of " + row.event.label());
    }
    return row;
}

Json to_json(const BoundsTable& table) {
    Json out = Json::array();
    for (const auto& row : table.rows) out.push_back(to_json(row));
    return out;
}

BoundsTable bounds_table_from_json(const Json& j) {
    if (!j.is_array() || j.size() != kNumEvents) throw std::invalid_argument("bounds table must list all 16 events");
    BoundsTable table{};
    std::array<bool, kNumEvents> seen{};
    for (const auto& item : j) {
        auto row = event_bounds_from_json(item);
        const auto mask = row.event.mask();
        if (seen[mask]) throw std::invalid_argument("event listed twice: " + row.event.label());
        seen[mask] = true;
        table.rows[mask] = std::move(row);
    }
    return table;
}

Json to_json(const MassFunction& q) {
    Json out = Json::object();
    for (const auto& w : all_response_types()) out[w.label()] = to_string(q[w]);
    return out;
}

MassFunction mass_from_json(const Json& j) {
    if (!j.is_object()) throw ValidationError(ValidationKind::MissingEntry, "mass function must be a JSON object");
    std::array<Rational, kNumResponseTypes> values;
    std::array<bool, kNumResponseTypes> seen{};
    for (const auto& [key, v] : j.items()) {
        int index = -1;
        for (const auto& w : all_response_types()) {
            if (w.label() == key) index = w.index();
        }
        if (index < 0) throw ValidationError(ValidationKind::UnknownEntry, "unknown response type \"" + key + "\"");
        values[index] = rational_from(v, key);
        seen[index] = true;
    }
    for (const auto& w : all_response_types()) {
        if (!seen[w.index()]) throw ValidationError(ValidationKind::MissingEntry, "missing response type " + w.label());
    }
    return MassFunction::from_values(values);
}

namespace {

Json pair_json(const ContentPair& pair) {
    return Json{{"i", pair.i},
                {"j", pair.j},
                {"noncompliance", to_string(pair.noncompliance)},
                {"base_sum", to_string(pair.base_sum)},
                {"witness", pair.is_witness()}};
}

}  // namespace

Json to_json(const ContentReport& report) {
    Json pairs = Json::array();
    Json witnesses = Json::array();
    for (const auto& pair : report.pairs) pairs.push_back(pair_json(pair));
    for (const auto& pair : report.witnesses) witnesses.push_back(pair_json(pair));
    return Json{{"verdict", report.verdict},
                {"two_sided_noncompliance", report.two_sided_noncompliance},
                {"witnesses", witnesses},
                {"pairs", pairs}};
}

Json to_json(const InfeasibilityCertificate& certificate) {
    return Json{{"multipliers", rational_array(certificate.multipliers)},
                {"residual", to_string(certificate.residual)}};
}

Json to_json(const ConsistencyReport& report) {
    Json out{{"margins", rational_array({report.margins.begin(), report.margins.end()})},
             {"em_consistent", report.em_consistent},
             {"e_feasible", report.e_feasible},
             {"two_sided_noncompliance", report.two_sided_noncompliance}};
    if (report.e_infeasibility) out["e_infeasibility"] = to_json(*report.e_infeasibility);
    return out;
}

}  // namespace ivbounds::io
