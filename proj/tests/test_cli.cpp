#include <catch_amalgamated.hpp>

#include <sstream>

#include "ivbounds/cli.hpp"
#include "ivbounds/io.hpp"
#include "oracles.hpp"

using namespace ivbounds;
using namespace ivbounds::cli;

namespace {

std::string data_file(const std::string& name) { return std::string(IVBOUNDS_DATA_DIR) + "/" + name; }

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = main_entry(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("data JSON round trip", "[io]") {
    const auto p = testing::p_star();
    CHECK(io::data_from_json(io::to_json(p)) == p);
    auto j = io::Json::parse(R"({"z0":{"y0d0":"0.5","y1d0":0.2,"y0d1":"1/10","y1d1":"1/5"},
                                 "z1":{"y0d0":"3/10","y1d0":"1/10","y0d1":"1/5","y1d1":"2/5"}})");
    CHECK(io::data_from_json(j) == p);

    j["z0"]["y0d0"] = "-1/10";
    CHECK_THROWS_AS(io::data_from_json(j), ValidationError);
    j = io::to_json(p);
    j["z2"] = io::Json::object();
    CHECK_THROWS_AS(io::data_from_json(j), ValidationError);
    j = io::to_json(p);
    j.erase("z1");
    CHECK_THROWS_AS(io::data_from_json(j), ValidationError);
    j = io::to_json(p);
    j["z0"]["y0d0"] = true;
    CHECK_THROWS_AS(io::data_from_json(j), ValidationError);
}

TEST_CASE("event JSON is deduplicated and sorted", "[io]") {
    auto e = io::event_from_json(io::Json::parse("[[1,0],[0,1],[1,0]]"));
    CHECK(e == Event::parse("01,10"));
    CHECK(io::to_json(e).dump() == "[[0,1],[1,0]]");
    CHECK(io::to_json(Event::empty()).dump() == "[]");
    CHECK_THROWS(io::event_from_json(io::Json::parse("[[2,0]]")));
    CHECK_THROWS(io::event_from_json(io::Json::parse("[[0]]")));
}

TEST_CASE("mass function JSON round trip", "[io]") {
    const auto q = sample_consistent_P(5, 37, AssumptionSet::ExogeneityOnly).q;
    CHECK(io::mass_from_json(io::to_json(q)) == q);
    CHECK(io::to_json(MassFunction::point_mass(ResponseType(0, 1, 0, 1)))["0101"] == "1");
}

TEST_CASE("bounds table JSON round trip", "[io][property]") {
    for (std::uint64_t s = 0; s < 25; ++s) {
        const auto p = s == 0 ? testing::p_star()
                              : sample_consistent_P(split_seed(61, s), 1 + s * 13, AssumptionSet::ExogeneityPlusMonotonicity).p;
        const auto table = bounds_table(p);
        const auto text = io::to_json(table).dump();
        CHECK(io::bounds_table_from_json(io::Json::parse(text)) == table);
    }
    auto j = io::to_json(bounds_table(testing::p_star()));
    j[2]["strict"] = false;  // (0,1) is strict
    CHECK_THROWS(io::bounds_table_from_json(j));
}

TEST_CASE("content report JSON lists witness pairs with exact values", "[io]") {
    const auto j = io::to_json(identifying_content(testing::p_star()));
    CHECK(j["verdict"] == true);
    REQUIRE(j["witnesses"].size() == 1);
    CHECK(j["witnesses"][0]["i"] == 1);
    CHECK(j["witnesses"][0]["j"] == 0);
    CHECK(j["witnesses"][0]["noncompliance"] == "1/10");
    CHECK(j["witnesses"][0]["base_sum"] == "9/10");
}

TEST_CASE("check command", "[cli]") {
    auto r = invoke({"check", data_file("p_star.json")});
    CHECK(r.code == 0);
    CHECK(r.out.find("P(0,1|1) - P(0,1|0)  1/10") != std::string::npos);
    CHECK(r.out.find("P(0,0|0) - P(0,0|1)  1/5") != std::string::npos);

    r = invoke({"check", "--json", data_file("p_star.json")});
    CHECK(r.code == 0);
    const auto j = io::Json::parse(r.out);
    CHECK(j["margins"] == io::Json::array({"1/10", "1/5", "1/5", "1/10"}));

    CHECK(invoke({"check", data_file("p_bad.json")}).code == exit_code::e_infeasible);
    CHECK(invoke({"check", data_file("defier.json")}).code == exit_code::em_inconsistent);
    CHECK(invoke({"check", data_file("p_pc.json")}).code == 0);
}

TEST_CASE("content command", "[cli]") {
    auto r = invoke({"content", data_file("p_pc.json")});
    CHECK(r.code == 0);
    CHECK(r.out.find("identifying content: false") != std::string::npos);
    CHECK(r.out.find("no two-sided noncompliance") != std::string::npos);

    r = invoke({"content", data_file("p_star.json")});
    CHECK(r.code == 0);
    CHECK(r.out.find("identifying content: true") != std::string::npos);

    CHECK(invoke({"content", data_file("defier.json")}).code == exit_code::em_inconsistent);
    CHECK(invoke({"content", data_file("p_bad.json")}).code == exit_code::e_infeasible);
}

TEST_CASE("bounds command", "[cli]") {
    auto r = invoke({"bounds", "--json", data_file("p_star.json")});
    REQUIRE(r.code == 0);
    CHECK(io::bounds_table_from_json(io::Json::parse(r.out)) == bounds_table(testing::p_star()));

    r = invoke({"bounds", "--json", "--event", "01", data_file("p_star.json")});
    REQUIRE(r.code == 0);
    const auto row = io::event_bounds_from_json(io::Json::parse(r.out));
    CHECK(row.monotone == Interval(Rational(1, 10), Rational(7, 10)));
    CHECK(row.exogeneity == Interval(0, Rational(7, 10)));

    r = invoke({"bounds", data_file("p_star.json")});
    CHECK(r.code == 0);
    CHECK(r.out.find("[0, 7/10]") != std::string::npos);
    CHECK(r.out.find("lower") != std::string::npos);

    r = invoke({"bounds", "--decimal", "--event", "01", data_file("p_star.json")});
    CHECK(r.out.find("approximate") != std::string::npos);
    CHECK(r.out.find("1/10 (~0.1000)") != std::string::npos);

    // defier data: exogeneity-only bounds from the LP, exit 2
    r = invoke({"bounds", "--json", data_file("defier.json")});
    CHECK(r.code == exit_code::em_inconsistent);
    const auto rows = io::Json::parse(r.out);
    REQUIRE(rows.size() == 16);
    CHECK(rows[2]["EM"].is_null());
    CHECK(io::interval_from_json(rows[2]["E"]) == Interval(1, 1));  // the defier has y0=0, y1=1
    CHECK(invoke({"bounds", "--permissive", data_file("defier.json")}).code == exit_code::em_inconsistent);

    CHECK(invoke({"bounds", data_file("p_bad.json")}).code == exit_code::e_infeasible);
}

TEST_CASE("witness command", "[cli]") {
    auto r = invoke({"witness", "--json", "--event", "00", "--value", "1/4", "--assumptions", "E",
                     data_file("p_star.json")});
    REQUIRE(r.code == 0);
    const auto q = io::mass_from_json(io::Json::parse(r.out));
    CHECK(push_forward(q) == testing::p_star());
    CHECK(event_functional(Event::singleton(0, 0)).evaluate(q) == Rational(1, 4));

    r = invoke({"witness", "--event", "01", "--value", "0", data_file("p_star.json")});
    CHECK(r.code == exit_code::input_error);
    CHECK(r.err.find("outside") != std::string::npos);

    CHECK(invoke({"witness", "--event", "01", "--value", "0", "--assumptions", "E", data_file("p_star.json")}).code ==
          0);
}

TEST_CASE("sample command", "[cli]") {
    auto a = invoke({"sample", "--seed", "7", "--denominator", "360", "--with-q"});
    auto b = invoke({"sample", "--seed", "7", "--denominator", "360", "--with-q"});
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    const auto j = io::Json::parse(a.out);
    const auto p = io::data_from_json(j["p"]);
    const auto q = io::mass_from_json(j["q"]);
    CHECK(push_forward(q) == p);
    CHECK(q.defier_mass() == 0);

    auto many = invoke({"sample", "--seed", "7", "--denominator", "10", "--count", "3"});
    CHECK(io::Json::parse(many.out).size() == 3);
}

TEST_CASE("verify command", "[cli]") {
    auto r = invoke({"verify", "--seed", "7", "--denominator", "360", "--count", "20"});
    CHECK(r.code == 0);
    CHECK(r.out.find("0 mismatch") != std::string::npos);
    CHECK(invoke({"verify", data_file("p_star.json")}).code == 0);
    CHECK(invoke({"verify", data_file("defier.json")}).code == exit_code::em_inconsistent);
}

TEST_CASE("dual command", "[cli]") {
    auto r = invoke({"dual", "--json", "--event", "01", data_file("p_star.json")});
    REQUIRE(r.code == 0);
    const auto j = io::Json::parse(r.out);
    REQUIRE(j["directions"].size() == 2);
    CHECK(j["directions"][0]["direction"] == "min");
    CHECK(j["directions"][0]["bound"] == "1/10");
    CHECK(j["directions"][0]["primal_optimum"] == "1/10");
    CHECK(j["directions"][1]["bound"] == "7/10");

    r = invoke({"dual", "--event", "01", "--assumptions", "E", "--direction", "min", data_file("p_star.json")});
    CHECK(r.code == 0);
    CHECK(r.out.find("bound 0") != std::string::npos);
    CHECK(invoke({"dual", "--event", "01", data_file("defier.json")}).code == exit_code::em_inconsistent);
    CHECK(invoke({"dual", "--event", "01", data_file("p_bad.json")}).code == exit_code::e_infeasible);
}

TEST_CASE("input errors exit with 4", "[cli]") {
    CHECK(invoke({}).code == exit_code::input_error);
    CHECK(invoke({"check"}).code == exit_code::input_error);
    CHECK(invoke({"check", "--value", "1/2", data_file("p_star.json")}).code == exit_code::input_error);
    CHECK(invoke({"check", data_file("missing.json")}).code == exit_code::input_error);
    CHECK(invoke({"bounds", "--event", "02", data_file("p_star.json")}).code == exit_code::input_error);
    CHECK(invoke({"witness", "--event", "01", data_file("p_star.json")}).code == exit_code::input_error);
    CHECK(invoke({"sample", "--seed", "1", "--denominator", "0"}).code == exit_code::input_error);
    CHECK(invoke({"verify", "--seed", "1", data_file("p_star.json")}).code == exit_code::input_error);
    CHECK(invoke({"dual", "--event", "01", "--assumptions", "M", data_file("p_star.json")}).code ==
          exit_code::input_error);
    CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("validate enforces per-command arguments", "[cli]") {
    CliConfig c;
    c.command = Command::Check;
    CHECK_THROWS_AS(validate(c), UsageError);
    c.input_path = "x.json";
    CHECK_NOTHROW(validate(c));
    c.event = Event::singleton(0, 1);
    CHECK_THROWS_AS(validate(c), UsageError);
    c.command = Command::Bounds;
    CHECK_NOTHROW(validate(c));
    c.command = Command::Witness;
    CHECK_THROWS_AS(validate(c), UsageError);
    c.value = Rational(1, 2);
    CHECK_NOTHROW(validate(c));

    std::ostringstream out, err;
    CliConfig bad;
    bad.command = Command::Sample;
    CHECK(run(bad, out, err) == exit_code::input_error);
}
