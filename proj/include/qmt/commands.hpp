#pragma once

// Subcommands of the qmt tool. Each returns the JSON document, a rendering
// in the requested format and an exit code (0 ok, 1 a check failed, 2 error).

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "qmt/serialize.hpp"

namespace qmt {

enum class OutputFormat { json, pretty, csv };

struct RunConfig {
    int d1 = 1;
    int d2 = 1;
    std::uint64_t seed = 0;
    std::uint64_t budget = default_node_budget;
    std::optional<std::size_t> kmax;
    OutputFormat format = OutputFormat::json;

    std::size_t trials = 100;                // verify
    bool tamper_weight = false;              // verify: flip one entry of W (negative control)
    std::optional<std::string> y;            // solve-amvc: JSON vector
    bool oracle = false;                     // solve-amvc
    std::optional<std::size_t> graded_kmax;  // chow, report
    std::optional<std::string> dialect;      // chow
    std::optional<std::string> script_path;  // chow
    std::string what = "weight";             // emit
};

struct CommandResult {
    json document;
    std::string text;
    int exit_code = 0;
};

CommandResult cmd_build(const RunConfig& cfg);
CommandResult cmd_verify(const RunConfig& cfg);
CommandResult cmd_solve_amvc(const RunConfig& cfg);
CommandResult cmd_count(const RunConfig& cfg);
CommandResult cmd_poincare(const RunConfig& cfg);
CommandResult cmd_chow(const RunConfig& cfg);
CommandResult cmd_report(const RunConfig& cfg);
CommandResult cmd_emit(const RunConfig& cfg);

/// Dispatches by name; errors become a JSON error document with exit code 2.
CommandResult run_command(std::string_view name, const RunConfig& cfg);

/// --budget beats QMT_BUDGET beats the built-in default.
std::uint64_t resolve_budget(std::optional<std::uint64_t> flag, const char* env_value);

}  // namespace qmt
