#include "qirc/gen/qasm_generator.hpp"

#include <cctype>

#include "qirc/ir/verifier.hpp"
#include "qirc/qasm/passes.hpp"
#include "qirc/support/errors.hpp"

namespace qirc::gen {

const ir::Module& QuantumIrGenerator::get_module() const {
    require_phase(Phase::Finalized, "get_module");
    return module_;
}

void QuantumIrGenerator::require_phase(Phase expected, const char* operation) const {
    if (phase_ != expected) {
        throw StateError(std::string(operation) + ": called out of order");
    }
}

void OpenQasmIrGenerator::initialize_mlirgen(const GeneratorConfig& cfg) {
    require_phase(Phase::Created, "initialize_mlirgen");
    if (!cfg.add_entry_point && cfg.file_name.empty()) {
        throw StateError("initialize_mlirgen: library mode requires a file name");
    }
    cfg_ = cfg;

    if (cfg.add_entry_point) {
        auto args = builder_.begin_function("main", {ir::IrType::i(32), ir::IrType::argv()},
                                            ir::IrType::i(32));
        builder_.build_op("quantum.init", {}, {args[0], args[1]});
    } else {
        // Derive the exported function name from the file stem.
        std::string stem = cfg.file_name;
        if (auto slash = stem.find_last_of("/\\"); slash != std::string::npos) {
            stem = stem.substr(slash + 1);
        }
        if (auto dot = stem.find_last_of('.'); dot != std::string::npos && dot > 0) {
            stem = stem.substr(0, dot);
        }
        for (auto& c : stem) {
            if (!std::isalnum(static_cast<unsigned char>(c))) c = '_';
        }
        if (stem.empty() || std::isdigit(static_cast<unsigned char>(stem[0]))) {
            stem = "f" + stem;
        }
        auto args = builder_.begin_function(stem, {ir::IrType::qreg()}, ir::IrType::none());
        builder_.build_op("quantum.set_qreg", {}, {args[0]});
    }
    phase_ = Phase::Initialized;
}

void OpenQasmIrGenerator::mlirgen(const std::string& src) {
    require_phase(Phase::Initialized, "mlirgen");
    qasm::Program program = qasm::parse_program(src, resolver_);
    auto diags = qasm::validate(program);
    for (const auto& d : diags) {
        if (d.severity == Severity::Warning) warnings_.push_back(d);
    }
    if (has_errors(diags)) {
        std::string msg = "invalid program:";
        for (const auto& d : diags) {
            if (d.severity == Severity::Error) msg += "\n  " + d.str();
        }
        throw CompileError(msg);
    }
    mlirgen(program);
}

void OpenQasmIrGenerator::mlirgen(const qasm::Program& program) {
    require_phase(Phase::Initialized, "mlirgen");
    const qasm::Program inlined = qasm::inline_user_gates(program);

    for (const auto& decl : inlined.declarations) {
        const auto* reg = std::get_if<qasm::RegisterDecl>(&decl);
        if (!reg || !reg->quantum) continue;  // classical registers emit nothing
        auto& op = builder_.build_op(
            "quantum.qalloc",
            {{"name", ir::Attr{reg->name}}, {"size", ir::Attr{reg->size}}}, {});
        symbol_table_[reg->name] = op.results[0];
        allocations_.emplace_back(reg->name, op.results[0]);
    }

    for (const auto& stmt : inlined.statements) {
        std::visit(
            [&](const auto& s) {
                using T = std::decay_t<decltype(s)>;
                if constexpr (std::is_same_v<T, qasm::GateCall>) {
                    std::vector<double> params;
                    params.reserve(s.params.size());
                    for (const auto& p : s.params) params.push_back(p->evaluate());
                    emit_inst(s.gate_name, params, s.targets);
                } else if constexpr (std::is_same_v<T, qasm::UGate>) {
                    emit_inst("u3",
                              {s.theta->evaluate(), s.phi->evaluate(), s.lambda->evaluate()},
                              {s.target});
                } else if constexpr (std::is_same_v<T, qasm::CNOTGate>) {
                    emit_inst("cx", {}, {s.control, s.target});
                } else if constexpr (std::is_same_v<T, qasm::MeasureStmt>) {
                    emit_inst("mz", {}, {s.qubit});
                } else if constexpr (std::is_same_v<T, qasm::ResetStmt>) {
                    emit_inst("reset", {}, {s.target});
                }
                // BarrierStmt: dropped (validate() already warned).
            },
            stmt);
    }
    phase_ = Phase::Generated;
}

ir::Value OpenQasmIrGenerator::extract_qubit(const qasm::QubitRef& ref) {
    if (!ref.index) {
        throw CompileError("unresolved qubit reference '" + ref.reg + "'", ref.line, ref.column);
    }
    const auto key = std::make_pair(ref.reg, *ref.index);
    if (auto it = extract_cache_.find(key); it != extract_cache_.end()) {
        return it->second;
    }
    auto reg_it = symbol_table_.find(ref.reg);
    if (reg_it == symbol_table_.end()) {
        throw CompileError("unknown register '" + ref.reg + "'", ref.line, ref.column);
    }
    auto& index_op = builder_.build_op("std.constant", {{"value", ir::Attr{*ref.index}}}, {});
    auto& extract_op =
        builder_.build_op("quantum.qextract", {}, {reg_it->second, index_op.results[0]});
    extract_cache_[key] = extract_op.results[0];
    return extract_op.results[0];
}

void OpenQasmIrGenerator::emit_inst(const std::string& name, const std::vector<double>& params,
                                    const std::vector<qasm::QubitRef>& targets) {
    std::vector<ir::Value> qubits;
    qubits.reserve(targets.size());
    for (const auto& t : targets) qubits.push_back(extract_qubit(t));
    builder_.build_op("quantum.inst",
                      {{"name", ir::Attr{name}}, {"params", ir::Attr{params}}},
                      std::move(qubits));
}

void OpenQasmIrGenerator::finalize_mlirgen() {
    require_phase(Phase::Generated, "finalize_mlirgen");
    for (const auto& [name, value] : allocations_) {
        builder_.build_op("quantum.dealloc", {}, {value});
    }
    if (cfg_.add_entry_point) {
        builder_.build_op("quantum.finalize", {}, {});
        builder_.build_op("std.return", {{"value", ir::Attr{std::int64_t{0}}}}, {});
    } else {
        builder_.build_op("std.return", {}, {});
    }
    builder_.end_function();
    module_ = builder_.take_module();

    auto diags = ir::verify_module(module_);
    if (has_errors(diags)) {
        throw CompileError("generated module failed verification:\n" +
                           format_diagnostics(diags));
    }
    phase_ = Phase::Finalized;
}

}  // namespace qirc::gen
