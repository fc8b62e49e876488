#include "qirc/lower/qir_abi.hpp"

#include <cctype>

namespace qirc::lower {

using ir::IrType;

ir::ExternalDecl initialize_decl() {
    return {kInitialize, {IrType::i(32), IrType::i(8).ptr(2)}, IrType::i(32)};
}

ir::ExternalDecl allocate_array_decl() {
    return {kAllocateArray, {IrType::i(64)}, IrType::array().ptr()};
}

ir::ExternalDecl get_element_ptr_decl() {
    return {kGetElementPtr, {IrType::array().ptr(), IrType::i(64)}, IrType::i(8).ptr()};
}

ir::ExternalDecl release_array_decl() {
    return {kReleaseArray, {IrType::array().ptr()}, IrType::none()};
}

ir::ExternalDecl finalize_decl() { return {kFinalize, {}, IrType::none()}; }

ir::ExternalDecl set_qreg_decl() { return {kSetQreg, {IrType::qreg().ptr()}, IrType::none()}; }

ir::ExternalDecl qis_decl(const std::string& gate, std::size_t num_params,
                          std::size_t num_qubits) {
    ir::ExternalDecl decl;
    decl.name = kQisPrefix + gate;
    for (std::size_t i = 0; i < num_params; ++i) decl.params.push_back(IrType::f64());
    for (std::size_t i = 0; i < num_qubits; ++i) decl.params.push_back(IrType::qubit().ptr());
    decl.result = is_measurement(gate) ? IrType::result().ptr() : IrType::none();
    return decl;
}

std::string canonical_gate_name(const std::string& frontend_name) {
    std::string name = frontend_name;
    for (auto& c : name) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (name == "cx") return "cnot";
    return name;
}

bool is_measurement(const std::string& gate) { return gate == "mz" || gate == "measure"; }

ir::IrType lower_type(const ir::IrType& t) {
    if (t.ptr_depth > 0) return t;  // already lowered
    switch (t.kind) {
        case ir::TypeKind::ArrayOpaque:
        case ir::TypeKind::QubitOpaque:
        case ir::TypeKind::ResultOpaque:
        case ir::TypeKind::QregOpaque:
            return t.ptr();
        case ir::TypeKind::ArgvOpaque:
            return IrType::i(8).ptr(2);
        default:
            return t;
    }
}

}  // namespace qirc::lower
