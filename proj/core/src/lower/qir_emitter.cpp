#include <sstream>

#include "qirc/lower/qir_abi.hpp"
#include "qirc/lower/qir_text.hpp"
#include "qirc/support/errors.hpp"
#include "qirc/support/format.hpp"

namespace qirc::lower {

namespace {

bool mentions_kind(const ir::IrType& t, ir::TypeKind kind) { return t.kind == kind; }

bool module_uses_kind(const ir::Module& m, ir::TypeKind kind) {
    for (const auto& e : m.externals) {
        if (mentions_kind(e.result, kind)) return true;
        for (const auto& p : e.params) {
            if (mentions_kind(p, kind)) return true;
        }
    }
    for (const auto& f : m.functions) {
        for (const auto& t : f.value_types) {
            if (mentions_kind(t, kind)) return true;
        }
    }
    return false;
}

class Emitter {
public:
    explicit Emitter(const ir::Module& m) : m_(m) {}

    std::string run() {
        // Qubits and results live behind opaque struct types; Array and
        // Qubit are part of every program's ABI.
        os_ << "%Array = type opaque\n";
        os_ << "%Qubit = type opaque\n";
        if (module_uses_kind(m_, ir::TypeKind::ResultOpaque)) {
            os_ << "%Result = type opaque\n";
        }
        if (module_uses_kind(m_, ir::TypeKind::QregOpaque)) {
            os_ << "%qreg = type opaque\n";
        }
        os_ << "\n";

        for (const auto& e : m_.externals) {
            os_ << "declare " << llvm_ir_type_name(e.result) << " @" << e.name << "(";
            for (std::size_t i = 0; i < e.params.size(); ++i) {
                if (i) os_ << ", ";
                os_ << llvm_ir_type_name(e.params[i]);
            }
            os_ << ")\n";
        }

        for (const auto& f : m_.functions) {
            os_ << "\n";
            emit_function(f);
        }
        return os_.str();
    }

private:
    const ir::Module& m_;
    std::ostringstream os_;

    // value id -> rendered operand ("%3" or a folded literal like "2")
    std::vector<std::string> names_;

    std::string operand(const ir::Function& f, ir::Value v) {
        return llvm_ir_type_name(f.type_of(v)) + " " + names_.at(static_cast<std::size_t>(v.id));
    }

    void emit_function(const ir::Function& f) {
        names_.assign(static_cast<std::size_t>(f.num_values()), "");
        int next = 0;
        os_ << "define " << llvm_ir_type_name(f.return_type) << " @" << f.name << "(";
        for (std::size_t i = 0; i < f.arguments.size(); ++i) {
            if (i) os_ << ", ";
            names_[static_cast<std::size_t>(f.arguments[i].id)] = "%" + std::to_string(next);
            os_ << llvm_ir_type_name(f.type_of(f.arguments[i])) << " %" << next;
            ++next;
        }
        os_ << ") {\n";

        for (const auto& op : f.body) {
            if (op.dialect != "llvm") {
                throw LoweringError("cannot emit non-LLVM op '" + op.full_name() + "'");
            }
            if (op.name == "constant") {
                // Folded into the use sites as an immediate operand.
                const auto& value = op.attributes.at("value");
                names_[static_cast<std::size_t>(op.results[0].id)] =
                    std::holds_alternative<double>(value)
                        ? format_double(std::get<double>(value))
                        : std::to_string(std::get<std::int64_t>(value));
                continue;
            }

            os_ << "  ";
            if (!op.results.empty()) {
                const std::string name = "%" + std::to_string(next++);
                names_[static_cast<std::size_t>(op.results[0].id)] = name;
                os_ << name << " = ";
            }

            if (op.name == "call") {
                const auto& callee = std::get<std::string>(op.attributes.at("callee"));
                const ir::IrType ret =
                    op.results.empty() ? ir::IrType::none() : f.type_of(op.results[0]);
                os_ << "call " << llvm_ir_type_name(ret) << " @" << callee << "(";
                for (std::size_t i = 0; i < op.operands.size(); ++i) {
                    if (i) os_ << ", ";
                    os_ << operand(f, op.operands[i]);
                }
                os_ << ")\n";
            } else if (op.name == "bitcast") {
                os_ << "bitcast " << operand(f, op.operands[0]) << " to "
                    << llvm_ir_type_name(f.type_of(op.results[0])) << "\n";
            } else if (op.name == "load") {
                os_ << "load " << llvm_ir_type_name(f.type_of(op.results[0])) << ", "
                    << operand(f, op.operands[0]) << "\n";
            } else if (op.name == "return") {
                if (const auto it = op.attributes.find("value"); it != op.attributes.end()) {
                    os_ << "ret " << llvm_ir_type_name(f.return_type) << " "
                        << std::get<std::int64_t>(it->second) << "\n";
                } else {
                    os_ << "ret void\n";
                }
            } else {
                throw LoweringError("cannot emit llvm op '" + op.name + "'");
            }
        }
        os_ << "}\n";
    }
};

}  // namespace

std::string emit_llvm_ir(const ir::Module& m) { return Emitter(m).run(); }

}  // namespace qirc::lower
