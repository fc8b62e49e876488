#pragma once

#include <vector>

#include "qirc/qasm/ast.hpp"
#include "qirc/support/diagnostics.hpp"

namespace qirc::qasm {

/// Replaces every call to a user-defined gate with its body, substituting
/// formal qubits and evaluating formal parameters. Calls to the built-in
/// named-gate table stay named. Throws RecursionError when substitution
/// exceeds a depth of 128.
Program inline_user_gates(const Program& p);

/// Checks the Program invariants (name uniqueness, reference resolution,
/// bounds, arities, acyclic gate definitions). The result is empty iff the
/// program is valid; barrier statements contribute a warning.
std::vector<Diagnostic> validate(const Program& p);

}  // namespace qirc::qasm
