#pragma once

#include <array>

#include "ivbounds/model.hpp"

namespace ivbounds {

/**
 * The four margins whose nonnegativity makes the monotone model nonempty, in the order
 *   P(0,1|1) - P(0,1|0),  P(0,0|0) - P(0,0|1),  P(1,1|1) - P(1,1|0),  P(1,0|0) - P(1,0|1).
 * Zero margins count as consistent.
 */
std::array<Rational, 4> consistency_margins(const DataDistribution& p);
bool is_em_consistent(const DataDistribution& p);

enum class EventShape { Empty, Singleton, Row, Column, Diagonal, Triple, Full };

/**
 * Shape of an event with its parameters:
 *   Singleton {(i,j)}, Row {(i,0),(i,1)}, Column {(0,i),(1,i)}, Diagonal {(0,i),(1,1-i)},
 *   Triple {(i,j),(i,1-j),(1-i,j)} (the missing cell is (1-i,1-j)).
 * Unused parameters are zero.
 */
struct ShapeInfo {
    EventShape shape;
    int i;
    int j;
};

ShapeInfo classify(const Event& event);

enum class ConsistencyMode {
    Strict,      ///< refuse data failing the margin condition (ConsistencyViolated)
    Permissive,  ///< evaluate the formulas anyway; the result carries no sharpness guarantee
};

Rational upper_bound(const DataDistribution& p, const Event& event, AssumptionSet assumptions,
                     ConsistencyMode mode = ConsistencyMode::Strict);

/// 1 - upper_bound of the complement.
Rational lower_bound(const DataDistribution& p, const Event& event, AssumptionSet assumptions,
                     ConsistencyMode mode = ConsistencyMode::Strict);

struct EventBounds {
    Event event;
    Interval exogeneity;
    Interval monotone;
    bool upper_strict;  ///< monotone upper endpoint strictly below the exogeneity one
    bool lower_strict;  ///< monotone lower endpoint strictly above the exogeneity one

    bool strict() const noexcept { return upper_strict || lower_strict; }
    const Interval& interval(AssumptionSet assumptions) const {
        return assumptions == AssumptionSet::ExogeneityOnly ? exogeneity : monotone;
    }
    bool operator==(const EventBounds&) const = default;
};

EventBounds make_event_bounds(const Event& event, Interval exogeneity, Interval monotone);

/// Per-event intervals under both assumption sets, indexed by event mask.
struct BoundsTable {
    std::array<EventBounds, kNumEvents> rows;

    const EventBounds& operator[](const Event& event) const { return rows[event.mask()]; }
    bool any_strict() const;
    bool operator==(const BoundsTable&) const = default;
};

BoundsTable bounds_table(const DataDistribution& p);

}  // namespace ivbounds
