#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qirc/gen/generator.hpp"
#include "qirc/ir/builder.hpp"
#include "qirc/qasm/parser.hpp"

namespace qirc::gen {

/// Walks an OpenQASM 2.0 program and emits quantum-dialect ops.
///
/// Quantum register declarations become qalloc ops recorded in a symbol
/// table; gate statements extract their qubits (cached per (register,
/// index)) and become one inst op each; measure becomes inst "mz".
class OpenQasmIrGenerator final : public QuantumIrGenerator {
public:
    OpenQasmIrGenerator() = default;
    explicit OpenQasmIrGenerator(qasm::IncludeResolver resolver)
        : resolver_(std::move(resolver)) {}

    void initialize_mlirgen(const GeneratorConfig& cfg) override;
    void mlirgen(const std::string& src) override;
    /// Same as mlirgen(src) for an already parsed and validated program.
    void mlirgen(const qasm::Program& program);
    void finalize_mlirgen() override;

private:
    ir::Value extract_qubit(const qasm::QubitRef& ref);
    void emit_inst(const std::string& name, const std::vector<double>& params,
                   const std::vector<qasm::QubitRef>& targets);

    qasm::IncludeResolver resolver_;
    GeneratorConfig cfg_;
    ir::ModuleBuilder builder_;

    // register name -> qalloc result, in allocation order
    std::vector<std::pair<std::string, ir::Value>> allocations_;
    std::map<std::string, ir::Value> symbol_table_;
    std::map<std::pair<std::string, std::int64_t>, ir::Value> extract_cache_;
};

}  // namespace qirc::gen
