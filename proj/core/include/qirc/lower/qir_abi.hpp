#pragma once

#include <string>

#include "qirc/ir/module.hpp"

namespace qirc::lower {

// Names and signatures of the QIR runtime surface targeted by the lowering.
inline constexpr const char* kInitialize = "__quantum__rt__initialize";
inline constexpr const char* kAllocateArray = "__quantum__rt__qubit_allocate_array";
inline constexpr const char* kGetElementPtr = "__quantum__rt__array_get_element_ptr_1d";
inline constexpr const char* kReleaseArray = "__quantum__rt__qubit_release_array";
inline constexpr const char* kFinalize = "__quantum__rt__finalize";
inline constexpr const char* kSetQreg = "__quantum__rt__set_qreg";
inline constexpr const char* kQisPrefix = "__quantum__qis__";

ir::ExternalDecl initialize_decl();
ir::ExternalDecl allocate_array_decl();
ir::ExternalDecl get_element_ptr_decl();
ir::ExternalDecl release_array_decl();
ir::ExternalDecl finalize_decl();
ir::ExternalDecl set_qreg_decl();

/// Declaration for `__quantum__qis__<gate>`: doubles first, then qubit
/// pointers; measurement returns a Result pointer.
ir::ExternalDecl qis_decl(const std::string& gate, std::size_t num_params,
                          std::size_t num_qubits);

/// Canonical QIR instruction name for a frontend gate name ("cx" becomes
/// "cnot", everything else passes through lowercased).
std::string canonical_gate_name(const std::string& frontend_name);

/// True when the symbol names a measurement instruction.
bool is_measurement(const std::string& gate);

/// Maps a quantum-dialect value type to its LLVM-dialect counterpart
/// (opaque values become pointers to opaque structs, argv becomes i8**).
ir::IrType lower_type(const ir::IrType& t);

}  // namespace qirc::lower
