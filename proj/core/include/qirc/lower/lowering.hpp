#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "qirc/ir/builder.hpp"
#include "qirc/ir/module.hpp"

namespace qirc::lower {

/// Build context handed to conversion patterns: creates replacement llvm-
/// dialect ops in the output function, maps matched-op results to their
/// replacements, and registers external declarations on first use.
class Rewriter {
public:
    Rewriter(ir::ModuleBuilder& builder, const ir::Function& source);

    ir::Value remap(ir::Value old) const;
    void map_result(ir::Value old, ir::Value replacement);

    ir::Value const_i64(std::int64_t value);
    ir::Value const_f64(double value);
    void ensure_declared(const ir::ExternalDecl& decl);

    /// Emits llvm.call; returns the result value (invalid for void callees).
    ir::Value call(const std::string& callee, std::vector<ir::Value> args);
    ir::Value bitcast(ir::Value operand, ir::IrType to);
    ir::Value load(ir::Value pointer);
    void return_op(ir::AttrMap attributes);

    const ir::Function& source() const { return source_; }

private:
    ir::ModuleBuilder& builder_;
    const ir::Function& source_;
    std::vector<ir::Value> value_map_;  // source id -> output value
};

/// One rewrite rule: replaces a matched op with llvm-dialect ops, erasing
/// the original and remapping its results.
class ConversionPattern {
public:
    virtual ~ConversionPattern() = default;

    /// Fully qualified op name this pattern matches, e.g. "quantum.qalloc".
    virtual std::string_view matches() const = 0;

    /// External runtime functions the pattern is known to require up front
    /// (instruction patterns derive theirs from the matched op instead).
    virtual std::vector<ir::ExternalDecl> declares() const { return {}; }

    virtual void rewrite(const ir::Op& op, Rewriter& rewriter) const = 0;
};

/// The full conversion pattern set for the quantum and std dialects.
const std::vector<std::unique_ptr<ConversionPattern>>& standard_patterns();

/// Applies the pattern set to every function. The result contains only
/// llvm-dialect ops; a quantum op without a pattern raises LoweringError,
/// and a quantum op surviving conversion raises LegalityError.
ir::Module run_lowering(const ir::Module& m);

}  // namespace qirc::lower
