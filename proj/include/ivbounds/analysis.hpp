#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "ivbounds/closed_form.hpp"
#include "ivbounds/lp_engine.hpp"

namespace ivbounds {

struct ConsistencyReport {
    /// Same order as consistency_margins().
    std::array<Rational, 4> margins;
    bool em_consistent = false;
    bool e_feasible = false;
    /// P(D=1|Z=0) > 0 and P(D=0|Z=1) > 0.
    bool two_sided_noncompliance = false;
    /// Farkas certificate when the exogeneity-only model is empty.
    std::optional<InfeasibilityCertificate> e_infeasibility;
};

bool has_two_sided_noncompliance(const DataDistribution& p);

ConsistencyReport consistency_report(const DataDistribution& p);

/// Both sides of the content conditions for one (i, j).
struct ContentPair {
    int i;
    int j;
    Rational noncompliance;  ///< min{P(i,0|1), P(j,1|0)}
    Rational base_sum;       ///< P(i,0|0) + P(1-i,0|1) + P(1-j,1|0) + P(j,1|1)

    bool is_witness() const { return noncompliance > 0 && base_sum < 1; }
};

struct ContentReport {
    bool verdict = false;  ///< monotonicity shrinks the identified set
    bool two_sided_noncompliance = false;
    std::array<ContentPair, 4> pairs;  ///< (i,j) = (0,0), (0,1), (1,0), (1,1)
    std::vector<ContentPair> witnesses;
};

/// Throws ConsistencyViolated when the margins are not all nonnegative.
ContentReport identifying_content(const DataDistribution& p);

/**
 * A mass function in the feasible set with event probability exactly t, found by
 * adding the row "event mass = t" to the bound problem. Throws ConsistencyViolated
 * or TargetOutsideInterval.
 */
MassFunction sharpness_witness(const DataDistribution& p, const Event& event, AssumptionSet assumptions,
                               const Rational& t);

/// Closed-form table; its strictness verdict agrees with identifying_content().
BoundsTable compare_assumption_sets(const DataDistribution& p);

/// LP optimum of every event under one assumption set, indexed by event mask. Throws InfeasibleProgram.
std::array<Interval, kNumEvents> lp_intervals(const DataDistribution& p, AssumptionSet assumptions);

/// Bounds table computed by the LP engine alone. Throws InfeasibleProgram when the monotone model is empty.
BoundsTable lp_bounds_table(const DataDistribution& p);

struct EndpointMismatch {
    Event event;
    AssumptionSet assumptions;
    bool upper;
    Rational closed_form;
    Rational lp;
};

/// Every closed-form endpoint compared against the LP optimum; empty when all 32 agree.
std::vector<EndpointMismatch> verify_against_lp(const DataDistribution& p);

struct SampledDistribution {
    DataDistribution p;
    MassFunction q;
};

/// Derive an independent stream seed (splitmix64 finalizer over seed and index).
std::uint64_t split_seed(std::uint64_t seed, std::uint64_t index);

/**
 * Deterministic random mass function whose entries are multiples of 1/denominator
 * (a uniform composition of the denominator over the 16 response types, or the 12
 * non-defier types for the monotone class), together with its push-forward.
 */
SampledDistribution sample_consistent_P(std::uint64_t seed, std::uint64_t denominator, AssumptionSet cls);

}  // namespace ivbounds
