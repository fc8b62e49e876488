#pragma once

#include <string>
#include <vector>

namespace qirc {

enum class Severity { Error, Warning };

/// A single validator/verifier finding. `line`/`column` are 1-based source
/// positions; both are 0 when the finding has no source location (IR-level
/// diagnostics reference ops instead, via the message).
struct Diagnostic {
    Severity severity = Severity::Error;
    std::string code;    // stable machine-readable tag, e.g. "out-of-bounds"
    std::string message;
    int line = 0;
    int column = 0;

    std::string str() const;
};

bool has_errors(const std::vector<Diagnostic>& diags);

/// Renders one line per diagnostic, prefixed with `file:` when nonempty.
std::string format_diagnostics(const std::vector<Diagnostic>& diags,
                               const std::string& file = "");

}  // namespace qirc
