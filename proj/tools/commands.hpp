#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tribch::cli {

enum class OutputFormat { Table, Json, Csv };

struct RunConfig {
    std::string command;
    std::vector<unsigned> n_values; // empty: batch over {5, 7, 9}
    std::string family = "gold2";
    std::optional<unsigned> k;
    std::optional<unsigned> t;
    std::uint64_t seed = 1;
    std::size_t trials = 1000;
    std::size_t samples = 10000;
    unsigned workers = 1;
    OutputFormat format = OutputFormat::Table;
    std::string out;
    std::vector<unsigned> errors{0, 1, 2, 3};
    bool allow_large = false;
    std::string word;    // decode
    std::string message; // encode
};

struct CommandResult {
    int exit_code = 0;
    std::string output;
};

// Exit codes: 0 success, 1 a verification stage failed, 2 an error was raised
// (bad parameters, violated family condition, ...). Errors are always
// reported as a record in the chosen format, never as an uncaught exception.
inline constexpr int kExitFail = 1;
inline constexpr int kExitError = 2;

CommandResult cmd_verify(const RunConfig& cfg);
CommandResult cmd_spectrum(const RunConfig& cfg);
CommandResult cmd_kernel(const RunConfig& cfg);
CommandResult cmd_build(const RunConfig& cfg);
CommandResult cmd_distance(const RunConfig& cfg);
CommandResult cmd_macwilliams(const RunConfig& cfg);
CommandResult cmd_decode_sim(const RunConfig& cfg);
CommandResult cmd_encode(const RunConfig& cfg);
CommandResult cmd_decode(const RunConfig& cfg);

CommandResult run_command(const RunConfig& cfg);

OutputFormat parse_format(const std::string& s);

} // namespace tribch::cli
