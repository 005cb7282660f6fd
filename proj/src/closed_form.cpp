#include "ivbounds/closed_form.hpp"

#include <algorithm>

#include "ivbounds/errors.hpp"

namespace ivbounds {

std::array<Rational, 4> consistency_margins(const DataDistribution& p) {
    return {p(0, 1, 1) - p(0, 1, 0), p(0, 0, 0) - p(0, 0, 1), p(1, 1, 1) - p(1, 1, 0), p(1, 0, 0) - p(1, 0, 1)};
}

bool is_em_consistent(const DataDistribution& p) {
    const auto margins = consistency_margins(p);
    return std::all_of(margins.begin(), margins.end(), [](const Rational& m) { return m >= 0; });
}

namespace {

// Indexed by event mask; bit k is the cell with index 2*y0 + y1.
constexpr std::array<ShapeInfo, kNumEvents> kShapes{{
    {EventShape::Empty, 0, 0},      // 0000 {}
    {EventShape::Singleton, 0, 0},  // 0001 {(0,0)}
    {EventShape::Singleton, 0, 1},  // 0010 {(0,1)}
    {EventShape::Row, 0, 0},        // 0011 {(0,0),(0,1)}
    {EventShape::Singleton, 1, 0},  // 0100 {(1,0)}
    {EventShape::Column, 0, 0},     // 0101 {(0,0),(1,0)}
    {EventShape::Diagonal, 1, 0},   // 0110 {(0,1),(1,0)}
    {EventShape::Triple, 0, 0},     // 0111 missing (1,1)
    {EventShape::Singleton, 1, 1},  // 1000 {(1,1)}
    {EventShape::Diagonal, 0, 0},   // 1001 {(0,0),(1,1)}
    {EventShape::Column, 1, 0},     // 1010 {(0,1),(1,1)}
    {EventShape::Triple, 0, 1},     // 1011 missing (1,0)
    {EventShape::Row, 1, 0},        // 1100 {(1,0),(1,1)}
    {EventShape::Triple, 1, 0},     // 1101 missing (0,1)
    {EventShape::Triple, 1, 1},     // 1110 missing (0,0)
    {EventShape::Full, 0, 0},       // 1111
}};

Rational min_of(const Rational& a, const Rational& b) {
    return a < b ? a : b;
}

}  // namespace

ShapeInfo classify(const Event& event) {
    return kShapes[event.mask()];
}

Rational upper_bound(const DataDistribution& p, const Event& event, AssumptionSet assumptions,
                     ConsistencyMode mode) {
    if (mode == ConsistencyMode::Strict && !is_em_consistent(p)) {
        throw ConsistencyViolated("closed-form bounds need nonnegative consistency margins; use LP-only bounds");
    }
    const auto [shape, i, j] = classify(event);
    switch (shape) {
        case EventShape::Empty:
            return 0;
        case EventShape::Full:
            return 1;
        case EventShape::Singleton:
            return min_of(p(i, 0, 0) + p(j, 1, 0), p(i, 0, 1) + p(j, 1, 1));
        case EventShape::Row:
            return p(i, 0, 0) + p(0, 1, 0) + p(1, 1, 0);
        case EventShape::Column:
            return p(i, 1, 1) + p(0, 0, 1) + p(1, 0, 1);
        case EventShape::Diagonal: {
            const Rational first = p(0, 0, 0) + p(1, 0, 1) + p(i, 1, 0) + p(1 - i, 1, 1);
            const Rational second = p(0, 0, 1) + p(1, 0, 0) + p(i, 1, 1) + p(1 - i, 1, 0);
            return min_of(Rational(1), min_of(first, second));
        }
        case EventShape::Triple: {
            Rational base = p(i, 0, 0) + p(1 - i, 0, 1) + p(1 - j, 1, 0) + p(j, 1, 1);
            if (assumptions == AssumptionSet::ExogeneityOnly) base += min_of(p(i, 0, 1), p(j, 1, 0));
            return min_of(Rational(1), base);
        }
    }
    return 0;  // unreachable
}

Rational lower_bound(const DataDistribution& p, const Event& event, AssumptionSet assumptions,
                     ConsistencyMode mode) {
    return 1 - upper_bound(p, complement(event), assumptions, mode);
}

EventBounds make_event_bounds(const Event& event, Interval exogeneity, Interval monotone) {
    const bool upper = monotone.hi() < exogeneity.hi();
    const bool lower = monotone.lo() > exogeneity.lo();
    return EventBounds{event, std::move(exogeneity), std::move(monotone), upper, lower};
}

bool BoundsTable::any_strict() const {
    return std::any_of(rows.begin(), rows.end(), [](const EventBounds& b) { return b.strict(); });
}

BoundsTable bounds_table(const DataDistribution& p) {
    if (!is_em_consistent(p)) {
        throw ConsistencyViolated("closed-form bounds need nonnegative consistency margins; use LP-only bounds");
    }
    auto interval = [&](const Event& a, AssumptionSet s) {
        return Interval(lower_bound(p, a, s), upper_bound(p, a, s));
    };
    BoundsTable table{};
    for (const auto& a : all_events()) {
        table.rows[a.mask()] = make_event_bounds(a, interval(a, AssumptionSet::ExogeneityOnly),
                                                 interval(a, AssumptionSet::ExogeneityPlusMonotonicity));
    }
    return table;
}

}  // namespace ivbounds
