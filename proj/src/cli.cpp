#include "ivbounds/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "ivbounds/analysis.hpp"
#include "ivbounds/io.hpp"

namespace ivbounds::cli {

using io::Json;
using ivbounds::to_string;

std::string to_string(Command command) {
    switch (command) {
        case Command::Check: return "check";
        case Command::Bounds: return "bounds";
        case Command::Content: return "content";
        case Command::Witness: return "witness";
        case Command::Sample: return "sample";
        case Command::Verify: return "verify";
        case Command::Dual: return "dual";
    }
    return "?";
}

void validate(const CliConfig& c) {
    const auto name = to_string(c.command);
    const bool takes_event = c.command == Command::Bounds || c.command == Command::Witness || c.command == Command::Dual;
    if ((c.event || c.value) && !takes_event) throw UsageError("--event/--value are not accepted by " + name);
    if (c.direction && c.command != Command::Dual) throw UsageError("--direction is only accepted by dual");
    if (c.with_q && c.command != Command::Sample) throw UsageError("--with-q is only accepted by sample");
    if (c.permissive && c.command != Command::Bounds) throw UsageError("--permissive is only accepted by bounds");

    const bool sampling = c.command == Command::Sample || (c.command == Command::Verify && c.count);
    if (!sampling && (c.seed || c.denominator || c.count)) {
        throw UsageError("--seed/--denominator/--count are only accepted by sample and verify --count");
    }
    if (sampling) {
        if (!c.seed || !c.denominator) throw UsageError(name + " needs --seed and --denominator");
        if (*c.denominator == 0) throw UsageError("--denominator must be positive");
        if (c.input_path) throw UsageError(name + " with sampling takes no input file");
    } else if (!c.input_path) {
        throw UsageError(name + " needs an input file (use - for standard input)");
    }
    if ((c.command == Command::Witness || c.command == Command::Dual) && !c.event) {
        throw UsageError(name + " needs --event");
    }
    if (c.command == Command::Witness && !c.value) throw UsageError("witness needs --value");
}

namespace {

// ------------------------------------------------------------------ helpers

DataDistribution read_input(const std::string& path) {
    Json j;
    try {
        if (path == "-") {
            j = Json::parse(std::cin);
        } else {
            std::ifstream file(path);
            if (!file) throw UsageError("cannot open " + path);
            j = Json::parse(file);
        }
    } catch (const Json::parse_error& e) {
        throw UsageError(path + ": " + e.what());
    }
    return io::data_from_json(j);
}

class Formatter {
public:
    explicit Formatter(bool decimal) : decimal_(decimal) {}
    std::string operator()(const Rational& r) const {
        auto s = to_string(r);
        if (decimal_ && boost::multiprecision::denominator(r) != 1) s += " (~" + to_decimal(r, 4) + ")";
        return s;
    }
    std::string operator()(const Interval& iv) const { return "[" + (*this)(iv.lo()) + ", " + (*this)(iv.hi()) + "]"; }
    void footer(std::ostream& out) const {
        if (decimal_) out << "(~ values are approximate decimal renderings; fractions are exact)\n";
    }

private:
    bool decimal_;
};

void print_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width;
    for (const auto& row : rows) {
        width.resize(std::max(width.size(), row.size()));
        for (std::size_t k = 0; k < row.size(); ++k) width[k] = std::max(width[k], row[k].size());
    }
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t k = 0; k < row.size(); ++k) {
            line += row[k];
            if (k + 1 < row.size()) line += std::string(width[k] - row[k].size() + 2, ' ');
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out << line << '\n';
    }
}

int status_code(const ConsistencyReport& report) {
    if (!report.e_feasible) return exit_code::e_infeasible;
    return report.em_consistent ? exit_code::ok : exit_code::em_inconsistent;
}

void explain_status(const ConsistencyReport& report, std::ostream& err) {
    if (!report.e_feasible) {
        err << "data are incompatible with exogeneity alone (no mass function reproduces them)\n";
    } else if (!report.em_consistent) {
        err << "data are incompatible with exogeneity plus monotonicity (a margin is negative)\n";
    }
}

const char* kMarginNames[4] = {"P(0,1|1) - P(0,1|0)", "P(0,0|0) - P(0,0|1)", "P(1,1|1) - P(1,1|0)",
                               "P(1,0|0) - P(1,0|1)"};

const char* yes_no(bool b) { return b ? "yes" : "no"; }

// ---------------------------------------------------------------- commands

int cmd_check(const CliConfig& c, std::ostream& out) {
    const auto p = read_input(*c.input_path);
    const auto report = consistency_report(p);
    if (c.json) {
        out << io::to_json(report).dump(2) << '\n';
        return status_code(report);
    }
    const Formatter fmt(c.decimal);
    std::vector<std::vector<std::string>> rows{{"margin", "value", "ok"}};
    for (int k = 0; k < 4; ++k) rows.push_back({kMarginNames[k], fmt(report.margins[k]), yes_no(report.margins[k] >= 0)});
    print_table(out, rows);
    out << "consistent with exogeneity + monotonicity: " << yes_no(report.em_consistent) << '\n';
    out << "consistent with exogeneity alone: " << yes_no(report.e_feasible) << '\n';
    out << "two-sided noncompliance: " << yes_no(report.two_sided_noncompliance) << '\n';
    if (report.e_infeasibility) {
        out << "infeasibility certificate (row multipliers, residual " << to_string(report.e_infeasibility->residual)
            << "):";
        for (const auto& y : report.e_infeasibility->multipliers) out << ' ' << to_string(y);
        out << '\n';
    }
    fmt.footer(out);
    return status_code(report);
}

std::vector<std::string> bounds_row(const EventBounds& row, const Formatter& fmt, bool have_em) {
    std::string flags;
    if (row.lower_strict) flags = "lower";
    if (row.upper_strict) flags += flags.empty() ? "upper" : "+upper";
    return {row.event.label(), fmt(row.exogeneity), have_em ? fmt(row.monotone) : "-", flags};
}

int cmd_bounds(const CliConfig& c, std::ostream& out, std::ostream& err) {
    const auto p = read_input(*c.input_path);
    const auto report = consistency_report(p);
    const int code = status_code(report);
    const Formatter fmt(c.decimal);

    std::vector<Event> events;
    if (c.event) {
        events.push_back(*c.event);
    } else {
        for (const auto& a : all_events()) events.push_back(a);
    }

    if (code == exit_code::ok) {
        const auto table = bounds_table(p);
        if (c.json) {
            out << (c.event ? io::to_json(table[*c.event]) : io::to_json(table)).dump(2) << '\n';
        } else {
            std::vector<std::vector<std::string>> rows{{"event", "E", "EM", "strict"}};
            for (const auto& a : events) rows.push_back(bounds_row(table[a], fmt, true));
            print_table(out, rows);
            fmt.footer(out);
        }
        return code;
    }

    if (c.permissive) {
        // raw formula values; they need not form valid intervals here
        explain_status(report, err);
        err << "warning: --permissive closed forms carry no sharpness guarantee for these data\n";
        Json rows_json = Json::array();
        std::vector<std::vector<std::string>> rows{{"event", "E lo", "E hi", "EM lo", "EM hi"}};
        for (const auto& a : events) {
            std::array<Rational, 4> v;
            std::size_t k = 0;
            for (auto s : kAssumptionSets) {
                v[k++] = lower_bound(p, a, s, ConsistencyMode::Permissive);
                v[k++] = upper_bound(p, a, s, ConsistencyMode::Permissive);
            }
            rows_json.push_back(Json{{"event", io::to_json(a)},
                                     {"E", {{"lo", to_string(v[0])}, {"hi", to_string(v[1])}}},
                                     {"EM", {{"lo", to_string(v[2])}, {"hi", to_string(v[3])}}},
                                     {"permissive", true}});
            rows.push_back({a.label(), fmt(v[0]), fmt(v[1]), fmt(v[2]), fmt(v[3])});
        }
        if (c.json) {
            out << (c.event ? rows_json[0] : rows_json).dump(2) << '\n';
        } else {
            print_table(out, rows);
            fmt.footer(out);
        }
        return code;
    }

    explain_status(report, err);
    if (code == exit_code::e_infeasible) {
        if (c.json) out << Json{{"e_infeasibility", io::to_json(*report.e_infeasibility)}}.dump(2) << '\n';
        return code;
    }

    // exogeneity-only bounds from the LP; the monotone model is empty
    err << "showing exogeneity-only bounds from the linear program\n";
    const auto e = lp_intervals(p, AssumptionSet::ExogeneityOnly);
    if (c.json) {
        Json rows = Json::array();
        for (const auto& a : events) {
            rows.push_back(Json{{"event", io::to_json(a)}, {"E", io::to_json(e[a.mask()])}, {"EM", nullptr},
                                {"strict", nullptr}});
        }
        out << (c.event ? rows[0] : rows).dump(2) << '\n';
    } else {
        std::vector<std::vector<std::string>> rows{{"event", "E", "EM", "strict"}};
        for (const auto& a : events) rows.push_back({a.label(), fmt(e[a.mask()]), "-", ""});
        print_table(out, rows);
        fmt.footer(out);
    }
    return code;
}

int cmd_content(const CliConfig& c, std::ostream& out, std::ostream& err) {
    const auto p = read_input(*c.input_path);
    const auto status = consistency_report(p);
    if (const int code = status_code(status); code != exit_code::ok) {
        explain_status(status, err);
        return code;
    }
    const auto report = identifying_content(p);
    if (c.json) {
        out << io::to_json(report).dump(2) << '\n';
        return exit_code::ok;
    }
    const Formatter fmt(c.decimal);
    out << "monotonicity has identifying content: " << (report.verdict ? "true" : "false") << '\n';
    if (!report.two_sided_noncompliance) out << "no two-sided noncompliance\n";
    std::vector<std::vector<std::string>> rows{
        {"(i,j)", "min{P(i,0|1), P(j,1|0)}", "P(i,0|0)+P(1-i,0|1)+P(1-j,1|0)+P(j,1|1)", "witness"}};
    for (const auto& pair : report.pairs) {
        rows.push_back({"(" + std::to_string(pair.i) + "," + std::to_string(pair.j) + ")", fmt(pair.noncompliance),
                        fmt(pair.base_sum), pair.is_witness() ? "yes" : ""});
    }
    print_table(out, rows);
    fmt.footer(out);
    return exit_code::ok;
}

int cmd_witness(const CliConfig& c, std::ostream& out, std::ostream& err) {
    const auto p = read_input(*c.input_path);
    const auto status = consistency_report(p);
    if (const int code = status_code(status); code != exit_code::ok) {
        explain_status(status, err);
        return code;
    }
    const auto q = sharpness_witness(p, *c.event, c.assumptions, *c.value);
    if (c.json) {
        out << io::to_json(q).dump(2) << '\n';
        return exit_code::ok;
    }
    const Formatter fmt(c.decimal);
    out << "mass function with P" << c.event->label() << " = " << fmt(*c.value) << " under " << to_string(c.assumptions)
        << " (nonzero entries):\n";
    std::vector<std::vector<std::string>> rows{{"type y0y1d0d1", "mass"}};
    for (const auto& w : all_response_types()) {
        if (q[w] != 0) rows.push_back({w.label(), fmt(q[w])});
    }
    print_table(out, rows);
    fmt.footer(out);
    return exit_code::ok;
}

int cmd_sample(const CliConfig& c, std::ostream& out) {
    const std::uint64_t count = c.count.value_or(1);
    Json all = Json::array();
    for (std::uint64_t k = 0; k < count; ++k) {
        const auto seed = count == 1 ? *c.seed : split_seed(*c.seed, k);
        const auto sample = sample_consistent_P(seed, *c.denominator, c.assumptions);
        all.push_back(c.with_q ? Json{{"p", io::to_json(sample.p)}, {"q", io::to_json(sample.q)}}
                               : io::to_json(sample.p));
    }
    out << (count == 1 ? all[0] : all).dump(2) << '\n';
    return exit_code::ok;
}

int cmd_verify(const CliConfig& c, std::ostream& out, std::ostream& err) {
    std::vector<DataDistribution> data;
    if (c.input_path) {
        const auto p = read_input(*c.input_path);
        const auto status = consistency_report(p);
        if (const int code = status_code(status); code != exit_code::ok) {
            explain_status(status, err);
            return code;
        }
        data.push_back(p);
    } else {
        for (std::uint64_t k = 0; k < *c.count; ++k) {
            data.push_back(
                sample_consistent_P(split_seed(*c.seed, k), *c.denominator, AssumptionSet::ExogeneityPlusMonotonicity).p);
        }
    }
    Json mismatches = Json::array();
    std::vector<std::vector<std::string>> rows{{"sample", "event", "set", "end", "closed form", "LP"}};
    for (std::size_t k = 0; k < data.size(); ++k) {
        for (const auto& m : verify_against_lp(data[k])) {
            mismatches.push_back(Json{{"sample", k},
                                      {"event", io::to_json(m.event)},
                                      {"assumptions", to_string(m.assumptions)},
                                      {"endpoint", m.upper ? "hi" : "lo"},
                                      {"closed_form", to_string(m.closed_form)},
                                      {"lp", to_string(m.lp)}});
            rows.push_back({std::to_string(k), m.event.label(), to_string(m.assumptions), m.upper ? "hi" : "lo",
                            to_string(m.closed_form), to_string(m.lp)});
        }
    }
    const std::size_t endpoints = data.size() * 2 * 2 * kNumEvents;
    if (c.json) {
        out << Json{{"distributions", data.size()}, {"endpoints", endpoints}, {"mismatches", mismatches}}.dump(2)
            << '\n';
    } else {
        out << "checked " << data.size() << " distribution(s), " << endpoints << " endpoints: " << mismatches.size()
            << " mismatch(es)\n";
        if (!mismatches.empty()) print_table(out, rows);
    }
    return mismatches.empty() ? exit_code::ok : exit_code::mismatch;
}

int cmd_dual(const CliConfig& c, std::ostream& out, std::ostream& err) {
    const auto p = read_input(*c.input_path);
    const auto spec = build_lp(p, c.assumptions);
    const BoundSolver solver(spec);
    if (!solver.feasible()) {
        const auto status = consistency_report(p);
        explain_status(status, err);
        return status.e_feasible ? exit_code::em_inconsistent : exit_code::e_infeasible;
    }
    const auto f = event_functional(*c.event);
    std::vector<Direction> directions;
    if (c.direction) {
        directions.push_back(*c.direction);
    } else {
        directions = {Direction::Minimize, Direction::Maximize};
    }
    const Formatter fmt(c.decimal);
    Json result = Json::array();
    for (auto dir : directions) {
        const auto vertices = enumerate_dual_vertices(spec, f, dir);
        const auto bound = dual_bound(vertices, dir);
        const auto primal = solver.optimize(f, dir).value;
        const char* name = dir == Direction::Maximize ? "max" : "min";
        if (c.json) {
            Json vs = Json::array();
            for (const auto& v : vertices) {
                vs.push_back(Json{{"u", io::rational_array(v.u)}, {"objective_value", to_string(v.objective_value)}});
            }
            result.push_back(Json{{"direction", name},
                                  {"bound", to_string(bound)},
                                  {"primal_optimum", to_string(primal)},
                                  {"vertices", vs}});
            continue;
        }
        out << name << " P" << c.event->label() << " under " << to_string(c.assumptions) << ": " << vertices.size()
            << " dual vertices, bound " << fmt(bound) << ", primal optimum " << fmt(primal) << '\n';
        std::vector<std::vector<std::string>> rows{{"value", "u (one entry per inequality row)"}};
        for (const auto& v : vertices) {
            std::string u;
            for (const auto& x : v.u) u += (u.empty() ? "" : " ") + to_string(x);
            rows.push_back({fmt(v.objective_value), u});
        }
        print_table(out, rows);
    }
    if (c.json) {
        out << Json{{"event", io::to_json(*c.event)}, {"assumptions", to_string(c.assumptions)}, {"directions", result}}
                   .dump(2)
            << '\n';
    } else {
        fmt.footer(out);
    }
    return exit_code::ok;
}

}  // namespace

int run(const CliConfig& config, std::ostream& out, std::ostream& err) {
    try {
        validate(config);
        switch (config.command) {
            case Command::Check: return cmd_check(config, out);
            case Command::Bounds: return cmd_bounds(config, out, err);
            case Command::Content: return cmd_content(config, out, err);
            case Command::Witness: return cmd_witness(config, out, err);
            case Command::Sample: return cmd_sample(config, out);
            case Command::Verify: return cmd_verify(config, out, err);
            case Command::Dual: return cmd_dual(config, out, err);
        }
    } catch (const ValidationError& e) {
        err << "invalid input: " << e.what() << '\n';
        return exit_code::input_error;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::input_error;
    } catch (const TargetOutsideInterval& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::input_error;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::input_error;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return exit_code::internal_error;
    }
    return exit_code::internal_error;
}

std::optional<CliConfig> parse_command_line(const std::vector<std::string>& args, std::ostream& out) {
    CLI::App app{"Sharp bounds on joint potential-outcome probabilities with a binary instrument", "ivbounds"};
    app.require_subcommand(1);

    std::string input, assumptions = "EM", event, value, direction;
    std::uint64_t seed = 0, denominator = 0, count = 0;
    bool json = false, decimal = false, permissive = false, with_q = false;

    struct Spec {
        Command command;
        const char* help;
    };
    const Spec specs[] = {
        {Command::Check, "consistency margins and feasibility of both models"},
        {Command::Bounds, "sharp intervals for every event (or --event) under both assumption sets"},
        {Command::Content, "whether monotonicity narrows any event interval"},
        {Command::Witness, "a mass function attaining --value for --event"},
        {Command::Sample, "seeded random data distribution with denominator --denominator"},
        {Command::Verify, "compare closed forms with the linear program on the input or on --count samples"},
        {Command::Dual, "dual vertices of the bound problem for --event"},
    };
    std::vector<std::pair<CLI::App*, Command>> subs;
    for (const auto& s : specs) {
        auto* sub = app.add_subcommand(to_string(s.command), s.help);
        subs.emplace_back(sub, s.command);
        const bool needs_input = s.command != Command::Sample;
        if (needs_input) sub->add_option("input", input, "data JSON file, - for standard input");
        sub->add_flag("--json", json, "JSON output");
        sub->add_flag("--decimal", decimal, "add approximate decimals to text output");
        switch (s.command) {
            case Command::Bounds:
                sub->add_option("--event", event, "comma-separated cells y0y1, e.g. 01,10");
                sub->add_flag("--permissive", permissive, "evaluate closed forms even when the margins fail");
                break;
            case Command::Witness:
                sub->add_option("--event", event, "comma-separated cells y0y1")->required();
                sub->add_option("--value", value, "target probability, e.g. 1/10")->required();
                sub->add_option("--assumptions", assumptions, "E or EM")->capture_default_str();
                break;
            case Command::Dual:
                sub->add_option("--event", event, "comma-separated cells y0y1")->required();
                sub->add_option("--assumptions", assumptions, "E or EM")->capture_default_str();
                sub->add_option("--direction", direction, "min or max (default both)")
                    ->check(CLI::IsMember({"min", "max"}));
                break;
            case Command::Sample:
                sub->add_option("--seed", seed, "seed")->required();
                sub->add_option("--denominator", denominator, "lattice denominator")->required();
                sub->add_option("--count", count, "number of samples");
                sub->add_option("--assumptions", assumptions, "sampling class, E or EM")->capture_default_str();
                sub->add_flag("--with-q", with_q, "include the generating mass function");
                break;
            case Command::Verify:
                sub->add_option("--seed", seed, "seed for sampled distributions");
                sub->add_option("--denominator", denominator, "lattice denominator for sampled distributions");
                sub->add_option("--count", count, "number of sampled distributions");
                break;
            default:
                break;
        }
    }

    auto reversed = args;
    std::reverse(reversed.begin(), reversed.end());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return std::nullopt;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return std::nullopt;
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    CliConfig c;
    CLI::App* chosen = nullptr;
    for (const auto& [sub, command] : subs) {
        if (sub->parsed()) {
            chosen = sub;
            c.command = command;
        }
    }
    const auto given = [chosen](const char* name) {
        const auto* opt = chosen->get_option_no_throw(name);
        return opt != nullptr && opt->count() > 0;
    };
    if (given("input")) c.input_path = input;
    c.assumptions = parse_assumption_set(assumptions);
    if (given("--event")) c.event = Event::parse(event);
    if (given("--value")) c.value = parse_rational(value);
    if (given("--seed")) c.seed = seed;
    if (given("--denominator")) c.denominator = denominator;
    if (given("--count")) c.count = count;
    if (given("--direction")) c.direction = direction == "max" ? Direction::Maximize : Direction::Minimize;
    c.json = json;
    c.decimal = decimal;
    c.permissive = permissive;
    c.with_q = with_q;
    return c;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::optional<CliConfig> config;
    try {
        config = parse_command_line(args, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\nrun with --help for usage\n";
        return exit_code::input_error;
    }
    if (!config) return exit_code::ok;
    return run(*config, out, err);
}

}  // namespace ivbounds::cli
