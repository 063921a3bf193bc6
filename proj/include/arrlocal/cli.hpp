#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace arrlocal::cli {

struct CommandRequest {
    std::string command;
    std::string source; // file path or builtin name
    std::optional<std::string> weights; // file path or inline "a,b,c"
    std::optional<std::string> endos;   // file path or inline JSON
    std::optional<std::string> condition;
    std::optional<std::size_t> hyperplane;
    std::optional<long> k;
    std::optional<std::size_t> decone;
    std::string format = "text";
    std::uint64_t seed = 0;
    bool presentation = false;
};

struct CommandResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

inline constexpr int exit_ok = 0;
inline constexpr int exit_input = 1;
inline constexpr int exit_resource = 2;
inline constexpr int exit_internal = 3;

const std::vector<std::string>& command_names();

// Never throws; failures become exit codes with a message in `err`.
CommandResult execute(const CommandRequest& request);

// Parses argv (without the program name) and executes.
CommandResult run(const std::vector<std::string>& args);

} // namespace arrlocal::cli
