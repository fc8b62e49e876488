#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qirc/ir/module.hpp"

namespace qirc::ir {

/// Infers the result types of an op from the signature table, checking
/// attribute keys/kinds and operand types. `externals` resolves llvm.call
/// callees; `result_override` is required by llvm.bitcast and rejected
/// everywhere else. Throws SignatureError naming the mismatch.
std::vector<IrType> infer_op_results(const std::string& dialect, const std::string& name,
                                     const AttrMap& attrs,
                                     const std::vector<IrType>& operand_types,
                                     const std::vector<ExternalDecl>* externals,
                                     const std::optional<IrType>& result_override);

/// Builds one module, one function at a time. Ops are appended to the
/// current function; result values get fresh SSA ids per the signature
/// table.
class ModuleBuilder {
public:
    ModuleBuilder() = default;

    /// Opens a function; returns its argument values.
    std::vector<Value> begin_function(const std::string& name,
                                      const std::vector<IrType>& argument_types,
                                      IrType return_type);
    void end_function();

    /// `full_name` is "dialect.opname", e.g. "quantum.qalloc".
    Op& build_op(const std::string& full_name, AttrMap attributes, std::vector<Value> operands,
                 std::optional<IrType> result_override = std::nullopt);

    /// Registers an external declaration once; re-declaration with a
    /// different signature is a SignatureError.
    void declare_external(const ExternalDecl& decl);

    Function& current_function();
    Module take_module();

private:
    Module module_;
    bool in_function_ = false;
};

}  // namespace qirc::ir
