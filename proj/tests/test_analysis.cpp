#include <catch_amalgamated.hpp>

#include "ivbounds/analysis.hpp"
#include "ivbounds/errors.hpp"
#include "oracles.hpp"

using namespace ivbounds;

namespace {

constexpr auto E = AssumptionSet::ExogeneityOnly;
constexpr auto EM = AssumptionSet::ExogeneityPlusMonotonicity;

}  // namespace

TEST_CASE("consistency reports", "[analysis]") {
    auto star = consistency_report(testing::p_star());
    CHECK(star.margins == std::array<Rational, 4>{Rational(1, 10), Rational(1, 5), Rational(1, 5), Rational(1, 10)});
    CHECK(star.em_consistent);
    CHECK(star.e_feasible);
    CHECK(star.two_sided_noncompliance);
    CHECK_FALSE(star.e_infeasibility);

    auto defier = consistency_report(testing::p_defier());
    CHECK_FALSE(defier.em_consistent);
    CHECK(defier.e_feasible);

    auto bad = consistency_report(testing::p_bad());
    CHECK_FALSE(bad.em_consistent);
    CHECK_FALSE(bad.e_feasible);
    REQUIRE(bad.e_infeasibility);
    CHECK(certifies(build_lp(testing::p_bad(), E), *bad.e_infeasibility));

    CHECK_FALSE(consistency_report(testing::p_perfect_compliance()).two_sided_noncompliance);
}

TEST_CASE("margins agree with the LP feasibility of the monotone model", "[analysis][property]") {
    for (std::uint64_t s = 0; s < 100; ++s) {
        const auto p = sample_consistent_P(split_seed(19, s), 12, E).p;
        const bool lp_feasible = std::holds_alternative<MassFunction>(feasibility(build_lp(p, EM)));
        CHECK(is_em_consistent(p) == lp_feasible);
    }
}

TEST_CASE("identifying content on the worked example", "[analysis]") {
    const auto report = identifying_content(testing::p_star());
    CHECK(report.verdict);
    CHECK(report.two_sided_noncompliance);
    REQUIRE(report.witnesses.size() == 1);
    const auto& w = report.witnesses.front();
    CHECK(w.i == 1);
    CHECK(w.j == 0);
    CHECK(w.noncompliance == Rational(1, 10));
    CHECK(w.base_sum == Rational(9, 10));
    for (std::size_t k = 0; k < 4; ++k) {
        CHECK(report.pairs[k].i == static_cast<int>(k / 2));
        CHECK(report.pairs[k].j == static_cast<int>(k % 2));
    }
}

TEST_CASE("no identifying content", "[analysis]") {
    const auto pc = identifying_content(testing::p_perfect_compliance());
    CHECK_FALSE(pc.verdict);
    CHECK_FALSE(pc.two_sided_noncompliance);
    for (const auto& pair : pc.pairs) CHECK(pair.noncompliance == 0);

    const auto diamond = identifying_content(testing::p_diamond());
    CHECK_FALSE(diamond.verdict);
    CHECK(diamond.two_sided_noncompliance);
    for (const auto& pair : diamond.pairs) CHECK(pair.base_sum == 1);

    CHECK_THROWS_AS(identifying_content(testing::p_defier()), ConsistencyViolated);
}

TEST_CASE("content verdict equals strictness found by the LP alone", "[analysis][property]") {
    for (std::uint64_t s = 0; s < 40; ++s) {
        const auto p = sample_consistent_P(split_seed(31, s), 1 + split_seed(32, s) % 50, EM).p;
        CHECK(identifying_content(p).verdict == lp_bounds_table(p).any_strict());
        CHECK(compare_assumption_sets(p) == lp_bounds_table(p));
    }
}

TEST_CASE("sharpness witnesses", "[analysis]") {
    const auto p = testing::p_star();
    auto q = sharpness_witness(p, Event::singleton(0, 0), E, Rational(1, 4));
    CHECK(push_forward(q) == p);
    CHECK(event_functional(Event::singleton(0, 0)).evaluate(q) == Rational(1, 4));

    auto m = sharpness_witness(p, Event::singleton(0, 1), EM, Rational(1, 10));
    CHECK(m.defier_mass() == 0);
    CHECK(event_functional(Event::singleton(0, 1)).evaluate(m) == Rational(1, 10));

    CHECK_THROWS_AS(sharpness_witness(p, Event::singleton(0, 1), EM, 0), TargetOutsideInterval);
    CHECK_NOTHROW(sharpness_witness(p, Event::singleton(0, 1), E, 0));
    CHECK_THROWS_AS(sharpness_witness(testing::p_defier(), Event::singleton(0, 1), E, 0), ConsistencyViolated);
}

TEST_CASE("witnesses exist at both endpoints and the midpoint", "[analysis][property]") {
    for (std::uint64_t s = 0; s < 10; ++s) {
        const auto p = sample_consistent_P(split_seed(8, s), 50, EM).p;
        const auto table = bounds_table(p);
        for (const auto& a : all_events()) {
            for (auto as : kAssumptionSets) {
                const auto& iv = table[a].interval(as);
                for (const auto& t : {iv.lo(), iv.midpoint(), iv.hi()}) {
                    auto q = sharpness_witness(p, a, as, t);
                    CHECK(push_forward(q) == p);
                    CHECK(event_functional(a).evaluate(q) == t);
                    if (as == EM) CHECK(q.defier_mass() == 0);
                }
            }
        }
    }
}

TEST_CASE("marginals and ATE carry no identifying content", "[analysis]") {
    for (std::uint64_t s = 0; s < 30; ++s) {
        const auto p = s == 0 ? testing::p_star() : sample_consistent_P(split_seed(3, s), 40, EM).p;
        const auto e = build_lp(p, E);
        const auto em = build_lp(p, EM);
        for (const auto& f : {marginal_functional(0), marginal_functional(1), ate_functional()}) {
            for (auto dir : {Direction::Maximize, Direction::Minimize}) {
                CHECK(solve(e, f, dir).value == solve(em, f, dir).value);
            }
        }
    }
    const auto e = build_lp(testing::p_star(), E);
    CHECK(solve(e, marginal_functional(0), Direction::Minimize).value == Rational(1, 5));
    CHECK(solve(e, marginal_functional(0), Direction::Maximize).value == Rational(1, 2));
    CHECK(solve(e, marginal_functional(1), Direction::Minimize).value == Rational(2, 5));
    CHECK(solve(e, marginal_functional(1), Direction::Maximize).value == Rational(4, 5));
}

TEST_CASE("sampler", "[analysis]") {
    const auto a = sample_consistent_P(42, 100, EM);
    const auto b = sample_consistent_P(42, 100, EM);
    CHECK(a.p == b.p);
    CHECK(a.q == b.q);
    CHECK(a.q.defier_mass() == 0);
    CHECK(push_forward(a.q) == a.p);
    CHECK_FALSE(sample_consistent_P(43, 100, EM).q == a.q);
    CHECK(split_seed(1, 0) != split_seed(1, 1));
    CHECK(split_seed(1, 0) != split_seed(2, 0));
    CHECK_THROWS(sample_consistent_P(1, 0, E));

    for (std::uint64_t s = 0; s < 200; ++s) {
        const std::uint64_t den = 1 + s % 17;
        const auto sample = sample_consistent_P(split_seed(9, s), den, EM);
        CHECK(is_em_consistent(sample.p));
        for (const auto& v : sample.q.values()) {
            CHECK(v >= 0);
            CHECK(den % boost::multiprecision::denominator(v) == 0);
        }
    }

    bool saw_defiers = false;
    for (std::uint64_t s = 0; s < 50 && !saw_defiers; ++s) saw_defiers = sample_consistent_P(s, 20, E).q.defier_mass() > 0;
    CHECK(saw_defiers);
}

TEST_CASE("verify_against_lp", "[analysis]") {
    CHECK(verify_against_lp(testing::p_star()).empty());
    CHECK(verify_against_lp(testing::p_perfect_compliance()).empty());
}
