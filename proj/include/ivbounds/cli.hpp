#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ivbounds/errors.hpp"
#include "ivbounds/model.hpp"
#include "ivbounds/simplex.hpp"

namespace ivbounds::cli {

enum class Command { Check, Bounds, Content, Witness, Sample, Verify, Dual };

std::string to_string(Command command);

struct CliConfig {
    Command command = Command::Check;
    std::optional<std::string> input_path;  ///< "-" reads standard input
    AssumptionSet assumptions = AssumptionSet::ExogeneityPlusMonotonicity;
    std::optional<Event> event;
    std::optional<Rational> value;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> denominator;
    std::optional<std::uint64_t> count;
    bool json = false;
    bool decimal = false;     ///< add approximate decimal renderings to text output
    bool permissive = false;  ///< bounds: evaluate closed forms even when the margins fail
    std::optional<Direction> direction;  ///< dual: one direction only
    bool with_q = false;                 ///< sample: include the generating mass function
};

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int em_inconsistent = 2;
inline constexpr int e_infeasible = 3;
inline constexpr int input_error = 4;
inline constexpr int mismatch = 5;
inline constexpr int internal_error = 1;
}  // namespace exit_code

class UsageError : public Error {
public:
    using Error::Error;
};

/// Throws UsageError when a command lacks a required argument or gets one it does not accept.
void validate(const CliConfig& config);

/// Parse argv (CLI11). Throws UsageError; returns nullopt after printing help.
std::optional<CliConfig> parse_command_line(const std::vector<std::string>& args, std::ostream& out);

int run(const CliConfig& config, std::ostream& out, std::ostream& err);

/// parse_command_line + run, mapping every input problem to exit code 4.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ivbounds::cli
