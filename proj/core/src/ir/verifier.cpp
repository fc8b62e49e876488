#include "qirc/ir/verifier.hpp"

#include <set>
#include <sstream>

#include "qirc/ir/builder.hpp"
#include "qirc/support/errors.hpp"

namespace qirc::ir {

namespace {

class Verifier {
public:
    explicit Verifier(const Module& m) : m_(m) {}

    std::vector<Diagnostic> run() {
        std::set<std::string> names;
        for (const auto& f : m_.functions) {
            if (!names.insert(f.name).second) {
                error("duplicate-function", "function '" + f.name + "' is defined twice");
            }
            verify_function(f);
        }
        return std::move(diags_);
    }

private:
    const Module& m_;
    std::vector<Diagnostic> diags_;

    void error(const std::string& code, const std::string& msg) {
        diags_.push_back({Severity::Error, code, msg, 0, 0});
    }

    void warn(const std::string& code, const std::string& msg) {
        diags_.push_back({Severity::Warning, code, msg, 0, 0});
    }

    static std::string at(const Function& f, std::size_t index, const Op& op) {
        std::ostringstream os;
        os << "in @" << f.name << ", op #" << index << " ('" << op.full_name() << "')";
        return os.str();
    }

    void verify_function(const Function& f) {
        std::set<int> defined;
        for (const auto& arg : f.arguments) defined.insert(arg.id);

        // qalloc result id -> number of deallocs consuming it
        std::map<int, int> dealloc_uses;

        for (std::size_t i = 0; i < f.body.size(); ++i) {
            const Op& op = f.body[i];

            // Dominance and use-def closure.
            std::vector<IrType> operand_types;
            bool operands_ok = true;
            for (const auto& v : op.operands) {
                if (!v.valid() || v.id >= f.num_values()) {
                    error("use-def", at(f, i, op) + ": operand references an unknown value");
                    operands_ok = false;
                    continue;
                }
                if (!defined.count(v.id)) {
                    error("dominance",
                          at(f, i, op) + ": operand %" + std::to_string(v.id) +
                              " is used before its definition");
                    operands_ok = false;
                }
                operand_types.push_back(f.type_of(v));
            }

            // Signature table conformance.
            if (operands_ok) {
                try {
                    std::optional<IrType> override;
                    if (op.dialect == "llvm" && op.name == "bitcast" && op.results.size() == 1) {
                        override = f.type_of(op.results[0]);
                    }
                    const auto expected = infer_op_results(op.dialect, op.name, op.attributes,
                                                           operand_types, &m_.externals, override);
                    if (expected.size() != op.results.size()) {
                        error("signature", at(f, i, op) + ": wrong number of results");
                    } else {
                        for (std::size_t r = 0; r < expected.size(); ++r) {
                            if (f.type_of(op.results[r]) != expected[r]) {
                                error("signature",
                                      at(f, i, op) + ": result " + std::to_string(r) +
                                          " has the wrong type");
                            }
                        }
                    }
                } catch (const SignatureError& e) {
                    error("signature", at(f, i, op) + ": " + e.what());
                }
            }

            // Call resolution against externals and module functions.
            if (op.dialect == "llvm" && op.name == "call") {
                const auto it = op.attributes.find("callee");
                if (it != op.attributes.end()) {
                    if (const auto* callee = std::get_if<std::string>(&it->second)) {
                        if (!m_.find_external(*callee) && !m_.find_function(*callee)) {
                            error("unresolved-call",
                                  at(f, i, op) + ": callee '" + *callee + "' does not resolve");
                        }
                    }
                }
            }

            // Terminator discipline.
            if (op.is_return() && i + 1 != f.body.size()) {
                error("terminator", at(f, i, op) + ": return is not the last op");
            }

            for (const auto& v : op.results) {
                if (!defined.insert(v.id).second) {
                    error("use-def", at(f, i, op) + ": result value defined twice");
                }
            }

            if (op.dialect == "quantum" && op.name == "qalloc" && op.results.size() == 1) {
                dealloc_uses[op.results[0].id] = 0;
            }
            if (op.dialect == "quantum" && op.name == "dealloc" && op.operands.size() == 1) {
                auto it = dealloc_uses.find(op.operands[0].id);
                if (it != dealloc_uses.end()) ++it->second;
            }
        }

        if (f.body.empty() || !f.body.back().is_return()) {
            error("terminator", "function @" + f.name + " does not end with a return");
        } else {
            const Op& ret = f.body.back();
            const bool has_value = ret.attributes.count("value") > 0;
            if (f.return_type.is_void() && has_value) {
                error("terminator", "function @" + f.name + " returns a value but is void");
            }
            if (!f.return_type.is_void() && !has_value) {
                error("terminator", "function @" + f.name + " is missing its return value");
            }
        }

        for (const auto& [value_id, count] : dealloc_uses) {
            if (count == 0) {
                warn("leak", "in @" + f.name + ": qalloc result %" + std::to_string(value_id) +
                                 " is never deallocated");
            } else if (count > 1) {
                error("double-dealloc", "in @" + f.name + ": qalloc result %" +
                                            std::to_string(value_id) +
                                            " is deallocated more than once");
            }
        }
    }
};

}  // namespace

std::vector<Diagnostic> verify_module(const Module& m) { return Verifier(m).run(); }

}  // namespace qirc::ir
