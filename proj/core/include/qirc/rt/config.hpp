#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qirc::rt {

enum class ExecutionMode { Nisq, Ftqc };

struct ExecutionConfig {
    ExecutionMode mode = ExecutionMode::Ftqc;
    std::int64_t shots = 1;          // nisq only
    std::string backend = "builtin";
    std::optional<std::uint64_t> seed;
    int max_qubits = 26;

    const char* mode_name() const { return mode == ExecutionMode::Nisq ? "nisq" : "ftqc"; }
};

/// Parses `-qrt`, `-shots`, `-qpu`, `-seed` out of a command-line argument
/// list; unrecognized tokens are ignored (the list is the raw argv tail).
/// Throws ConfigError on malformed values.
ExecutionConfig parse_runtime_args(const std::vector<std::string>& args);

/// True when `name` is served by the built-in statevector simulator under
/// one of its accepted aliases; false requests a fallback with a warning.
bool is_builtin_backend(const std::string& name);

}  // namespace qirc::rt
