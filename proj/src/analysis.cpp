#include "ivbounds/analysis.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <set>
#include <stdexcept>

#include "ivbounds/errors.hpp"

namespace ivbounds {

bool has_two_sided_noncompliance(const DataDistribution& p) {
    return p.treatment_probability(1, 0) > 0 && p.treatment_probability(0, 1) > 0;
}

ConsistencyReport consistency_report(const DataDistribution& p) {
    ConsistencyReport report;
    report.margins = consistency_margins(p);
    report.em_consistent = is_em_consistent(p);
    report.two_sided_noncompliance = has_two_sided_noncompliance(p);
    auto check = feasibility(build_lp(p, AssumptionSet::ExogeneityOnly));
    if (auto* cert = std::get_if<InfeasibilityCertificate>(&check)) {
        report.e_infeasibility = std::move(*cert);
    } else {
        report.e_feasible = true;
    }
    return report;
}

ContentReport identifying_content(const DataDistribution& p) {
    if (!is_em_consistent(p)) {
        throw ConsistencyViolated("identifying content is only defined when the monotone model is nonempty");
    }
    ContentReport report;
    report.two_sided_noncompliance = has_two_sided_noncompliance(p);
    std::size_t k = 0;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            ContentPair pair{i, j, std::min(p(i, 0, 1), p(j, 1, 0)),
                             p(i, 0, 0) + p(1 - i, 0, 1) + p(1 - j, 1, 0) + p(j, 1, 1)};
            if (pair.is_witness()) report.witnesses.push_back(pair);
            report.pairs[k++] = std::move(pair);
        }
    }
    report.verdict = !report.witnesses.empty();
    return report;
}

MassFunction sharpness_witness(const DataDistribution& p, const Event& event, AssumptionSet assumptions,
                               const Rational& t) {
    const Interval interval(lower_bound(p, event, assumptions), upper_bound(p, event, assumptions));
    if (!interval.contains(t)) {
        throw TargetOutsideInterval("target " + to_string(t) + " lies outside [" + to_string(interval.lo()) + ", " +
                                    to_string(interval.hi()) + "] for " + event.label() + " under " +
                                    to_string(assumptions));
    }
    EqualityRow row{event_functional(event).coefficients(), t, "target"};
    auto result = feasibility(build_lp(p, assumptions).with_row(std::move(row)));
    if (std::holds_alternative<InfeasibilityCertificate>(result)) {
        throw std::logic_error("no witness for a target inside the sharp interval");
    }
    return std::get<MassFunction>(result);
}

BoundsTable compare_assumption_sets(const DataDistribution& p) {
    auto table = bounds_table(p);
    if (table.any_strict() != identifying_content(p).verdict) {
        throw std::logic_error("strict containment disagrees with the content conditions");
    }
    return table;
}

std::array<Interval, kNumEvents> lp_intervals(const DataDistribution& p, AssumptionSet assumptions) {
    const BoundSolver solver(build_lp(p, assumptions));
    if (!solver.feasible()) throw InfeasibleProgram(std::get<InfeasibilityCertificate>(solver.feasibility()));
    std::array<Interval, kNumEvents> out;
    for (const auto& a : all_events()) {
        const auto f = event_functional(a);
        out[a.mask()] =
            Interval(solver.optimize(f, Direction::Minimize).value, solver.optimize(f, Direction::Maximize).value);
    }
    return out;
}

BoundsTable lp_bounds_table(const DataDistribution& p) {
    const auto e = lp_intervals(p, AssumptionSet::ExogeneityOnly);
    const auto em = lp_intervals(p, AssumptionSet::ExogeneityPlusMonotonicity);
    BoundsTable table{};
    for (const auto& a : all_events()) table.rows[a.mask()] = make_event_bounds(a, e[a.mask()], em[a.mask()]);
    return table;
}

std::vector<EndpointMismatch> verify_against_lp(const DataDistribution& p) {
    std::vector<EndpointMismatch> out;
    for (auto s : kAssumptionSets) {
        const auto lp = lp_intervals(p, s);
        for (const auto& a : all_events()) {
            const Rational lo = lower_bound(p, a, s);
            const Rational hi = upper_bound(p, a, s);
            if (lo != lp[a.mask()].lo()) out.push_back({a, s, false, lo, lp[a.mask()].lo()});
            if (hi != lp[a.mask()].hi()) out.push_back({a, s, true, hi, lp[a.mask()].hi()});
        }
    }
    return out;
}

// ---------------------------------------------------------------- sampler

std::uint64_t split_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

namespace {

// Uniform integer in [0, bound) by rejection; independent of the standard library's distributions.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    for (;;) {
        const std::uint64_t x = rng();
        if (x < limit) return x % bound;
    }
}

}  // namespace

SampledDistribution sample_consistent_P(std::uint64_t seed, std::uint64_t denominator, AssumptionSet cls) {
    if (denominator == 0) throw std::invalid_argument("denominator must be positive");
    std::vector<ResponseType> support;
    for (const auto& w : all_response_types()) {
        if (cls == AssumptionSet::ExogeneityOnly || !w.is_defier()) support.push_back(w);
    }
    const std::uint64_t parts = support.size();

    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
    std::mt19937_64 rng(seq);

    // Stars and bars: choose parts-1 bar positions among denominator+parts-1 slots (Floyd's algorithm).
    const std::uint64_t slots = denominator + parts - 1;
    std::set<std::uint64_t> bars;
    for (std::uint64_t j = slots - (parts - 1); j < slots; ++j) {
        const std::uint64_t t = uniform_below(rng, j + 1);
        if (!bars.insert(t).second) bars.insert(j);
    }

    std::array<Rational, kNumResponseTypes> q;
    std::uint64_t previous = 0;
    std::size_t k = 0;
    for (auto bar : bars) {
        q[support[k++].index()] = Rational(Integer(bar - previous), Integer(denominator));
        previous = bar + 1;
    }
    q[support[k].index()] = Rational(Integer(slots - previous), Integer(denominator));

    auto mass = MassFunction::from_values(q);
    return SampledDistribution{push_forward(mass), mass};
}

}  // namespace ivbounds
