#pragma once

#include <optional>
#include <span>
#include <string>

#include "qirc/rt/statevector.hpp"

namespace qirc::rt {

struct GateInfo {
    int num_params = 0;
    int num_qubits = 0;
};

/// Arity of a supported instruction name (mz and reset included), or
/// nullopt when unknown.
std::optional<GateInfo> gate_info(const std::string& name);

/// 2x2 unitary of a single-qubit gate; `params` are rotation angles in
/// radians. Precondition: gate_info(name) matched.
Mat2 single_qubit_matrix(const std::string& name, std::span<const double> params);

}  // namespace qirc::rt
