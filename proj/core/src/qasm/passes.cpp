#include "qirc/qasm/passes.hpp"

#include <map>
#include <set>
#include <sstream>

#include "qirc/support/errors.hpp"

namespace qirc::qasm {

namespace {

constexpr int kMaxInlineDepth = 128;

using Bindings = std::map<std::string, double>;
using QubitMap = std::map<std::string, QubitRef>;

ParamExpr::Ptr close_expr(const ParamExpr::Ptr& e, const Bindings& bindings) {
    if (e->is_literal()) return e;
    return ParamExpr::literal(e->evaluate(bindings));
}

QubitRef map_ref(const QubitRef& r, const QubitMap& qubits) {
    if (r.index) return r;  // already concrete
    auto it = qubits.find(r.reg);
    if (it == qubits.end()) {
        throw CompileError("unbound formal qubit '" + r.reg + "'", r.line, r.column);
    }
    QubitRef mapped = it->second;
    mapped.line = r.line;
    mapped.column = r.column;
    return mapped;
}

void expand_stmt(const Program& p, const Stmt& stmt, const Bindings& bindings,
                 const QubitMap& qubits, int depth, std::vector<Stmt>& out);

void expand_call(const Program& p, const GateCall& call, const Bindings& bindings,
                 const QubitMap& qubits, int depth, std::vector<Stmt>& out) {
    if (depth > kMaxInlineDepth) {
        throw RecursionError("gate inlining exceeded depth " + std::to_string(kMaxInlineDepth) +
                                 " at '" + call.gate_name + "'",
                             call.line, call.column);
    }

    const GateDef* def = p.find_gate_def(call.gate_name);
    if (!def || find_builtin_gate(call.gate_name)) {
        // Built-in (or unknown; validate() reports the latter): keep named,
        // close any parameter expressions over the current bindings.
        GateCall kept = call;
        for (auto& param : kept.params) param = close_expr(param, bindings);
        for (auto& t : kept.targets) t = map_ref(t, qubits);
        out.emplace_back(std::move(kept));
        return;
    }

    if (def->formal_params.size() != call.params.size() ||
        def->formal_qubits.size() != call.targets.size()) {
        throw CompileError("wrong arity in call to gate '" + call.gate_name + "'", call.line,
                           call.column);
    }

    Bindings inner;
    for (std::size_t i = 0; i < def->formal_params.size(); ++i) {
        inner[def->formal_params[i]] = call.params[i]->evaluate(bindings);
    }
    QubitMap inner_qubits;
    for (std::size_t i = 0; i < def->formal_qubits.size(); ++i) {
        inner_qubits[def->formal_qubits[i]] = map_ref(call.targets[i], qubits);
    }
    for (const auto& s : def->body) {
        expand_stmt(p, s, inner, inner_qubits, depth + 1, out);
    }
}

void expand_stmt(const Program& p, const Stmt& stmt, const Bindings& bindings,
                 const QubitMap& qubits, int depth, std::vector<Stmt>& out) {
    std::visit(
        [&](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, GateCall>) {
                expand_call(p, s, bindings, qubits, depth, out);
            } else if constexpr (std::is_same_v<T, UGate>) {
                UGate g = s;
                g.theta = close_expr(g.theta, bindings);
                g.phi = close_expr(g.phi, bindings);
                g.lambda = close_expr(g.lambda, bindings);
                g.target = map_ref(g.target, qubits);
                out.emplace_back(std::move(g));
            } else if constexpr (std::is_same_v<T, CNOTGate>) {
                CNOTGate g = s;
                g.control = map_ref(g.control, qubits);
                g.target = map_ref(g.target, qubits);
                out.emplace_back(std::move(g));
            } else {
                out.emplace_back(s);  // measure / reset / barrier pass through
            }
        },
        stmt);
}

}  // namespace

Program inline_user_gates(const Program& p) {
    Program result;
    result.version = p.version;
    result.declarations = p.declarations;
    for (const auto& stmt : p.statements) {
        expand_stmt(p, stmt, {}, {}, 0, result.statements);
    }
    return result;
}

namespace {

class Validator {
public:
    explicit Validator(const Program& p) : p_(p) {}

    std::vector<Diagnostic> run() {
        check_declarations();
        for (const auto& stmt : p_.statements) check_statement(stmt);
        check_gate_bodies();
        check_recursion();
        return std::move(diags_);
    }

private:
    const Program& p_;
    std::vector<Diagnostic> diags_;

    void error(const std::string& code, const std::string& msg, int line, int column) {
        diags_.push_back({Severity::Error, code, msg, line, column});
    }

    void warning(const std::string& code, const std::string& msg, int line, int column) {
        diags_.push_back({Severity::Warning, code, msg, line, column});
    }

    void check_declarations() {
        std::set<std::string> reg_names;
        std::set<std::string> gate_names;
        for (const auto& d : p_.declarations) {
            if (const auto* reg = std::get_if<RegisterDecl>(&d)) {
                if (!reg_names.insert(reg->name).second) {
                    error("duplicate-name", "register '" + reg->name + "' is already declared",
                          reg->line, reg->column);
                }
                if (reg->size < 1) {
                    error("register-size", "register '" + reg->name + "' has size < 1",
                          reg->line, reg->column);
                }
            } else {
                const auto& def = std::get<GateDef>(d);
                if (find_builtin_gate(def.name)) {
                    error("duplicate-name",
                          "gate '" + def.name + "' collides with a built-in gate", def.line,
                          def.column);
                } else if (!gate_names.insert(def.name).second) {
                    error("duplicate-name", "gate '" + def.name + "' is already defined",
                          def.line, def.column);
                }
            }
        }
    }

    // kind: true = quantum required, false = classical required
    void check_ref(const QubitRef& r, bool quantum) {
        const RegisterDecl* reg = p_.find_register(r.reg);
        if (!reg) {
            error("unknown-register", "reference to undeclared register '" + r.reg + "'", r.line,
                  r.column);
            return;
        }
        if (reg->quantum != quantum) {
            error("register-kind",
                  std::string("register '") + r.reg + "' is not a " +
                      (quantum ? "quantum" : "classical") + " register",
                  r.line, r.column);
            return;
        }
        if (!r.index) {
            error("use-before-decl",
                  "whole-register use of '" + r.reg + "' precedes its declaration", r.line,
                  r.column);
            return;
        }
        if (*r.index < 0 || *r.index >= reg->size) {
            std::ostringstream os;
            os << "index " << *r.index << " is out of bounds for register '" << r.reg
               << "' of size " << reg->size;
            error("out-of-bounds", os.str(), r.line, r.column);
        }
    }

    void check_distinct(const std::vector<QubitRef>& targets, int line, int column) {
        for (std::size_t i = 0; i < targets.size(); ++i) {
            for (std::size_t j = i + 1; j < targets.size(); ++j) {
                if (targets[i] == targets[j] && targets[i].index) {
                    error("duplicate-operand", "gate operands must be distinct qubits", line,
                          column);
                    return;
                }
            }
        }
    }

    void check_statement(const Stmt& stmt) {
        std::visit(
            [&](const auto& s) {
                using T = std::decay_t<decltype(s)>;
                if constexpr (std::is_same_v<T, GateCall>) {
                    check_call(s);
                } else if constexpr (std::is_same_v<T, UGate>) {
                    check_ref(s.target, true);
                } else if constexpr (std::is_same_v<T, CNOTGate>) {
                    check_ref(s.control, true);
                    check_ref(s.target, true);
                    check_distinct({s.control, s.target}, s.line, s.column);
                } else if constexpr (std::is_same_v<T, MeasureStmt>) {
                    check_ref(s.qubit, true);
                    check_ref(s.bit, false);
                } else if constexpr (std::is_same_v<T, ResetStmt>) {
                    check_ref(s.target, true);
                } else if constexpr (std::is_same_v<T, BarrierStmt>) {
                    warning("barrier-ignored", "barrier has no effect and is dropped", s.line,
                            s.column);
                    for (const auto& t : s.targets) {
                        if (!p_.find_register(t.reg)) {
                            error("unknown-register",
                                  "reference to undeclared register '" + t.reg + "'", t.line,
                                  t.column);
                        }
                    }
                }
            },
            stmt);
    }

    void check_call(const GateCall& call) {
        int num_params = -1;
        int num_qubits = -1;
        if (const auto* builtin = find_builtin_gate(call.gate_name)) {
            num_params = builtin->num_params;
            num_qubits = builtin->num_qubits;
        } else if (const auto* def = p_.find_gate_def(call.gate_name)) {
            num_params = static_cast<int>(def->formal_params.size());
            num_qubits = static_cast<int>(def->formal_qubits.size());
        } else {
            error("unknown-gate", "call to unknown gate '" + call.gate_name + "'", call.line,
                  call.column);
            return;
        }
        if (static_cast<int>(call.params.size()) != num_params) {
            std::ostringstream os;
            os << "gate '" << call.gate_name << "' expects " << num_params << " parameter(s), got "
               << call.params.size();
            error("arity", os.str(), call.line, call.column);
        }
        if (static_cast<int>(call.targets.size()) != num_qubits) {
            std::ostringstream os;
            os << "gate '" << call.gate_name << "' expects " << num_qubits << " qubit(s), got "
               << call.targets.size();
            error("arity", os.str(), call.line, call.column);
        }
        for (const auto& t : call.targets) check_ref(t, true);
        check_distinct(call.targets, call.line, call.column);
    }

    void check_gate_bodies() {
        for (const auto& d : p_.declarations) {
            const auto* def = std::get_if<GateDef>(&d);
            if (!def) continue;
            std::set<std::string> qubits(def->formal_qubits.begin(), def->formal_qubits.end());
            for (const auto& stmt : def->body) {
                std::visit(
                    [&](const auto& s) {
                        using T = std::decay_t<decltype(s)>;
                        if constexpr (std::is_same_v<T, GateCall>) {
                            if (!find_builtin_gate(s.gate_name) &&
                                !p_.find_gate_def(s.gate_name)) {
                                error("unknown-gate",
                                      "call to unknown gate '" + s.gate_name + "' in body of '" +
                                          def->name + "'",
                                      s.line, s.column);
                            }
                            for (const auto& t : s.targets) check_formal(t, qubits, def->name);
                        } else if constexpr (std::is_same_v<T, UGate>) {
                            check_formal(s.target, qubits, def->name);
                        } else if constexpr (std::is_same_v<T, CNOTGate>) {
                            check_formal(s.control, qubits, def->name);
                            check_formal(s.target, qubits, def->name);
                        }
                    },
                    stmt);
            }
        }
    }

    void check_formal(const QubitRef& r, const std::set<std::string>& qubits,
                      const std::string& gate) {
        if (r.index || !qubits.count(r.reg)) {
            error("unknown-formal",
                  "body of gate '" + gate + "' references '" + r.reg +
                      "' which is not a formal qubit",
                  r.line, r.column);
        }
    }

    void check_recursion() {
        // DFS over the user-gate call graph.
        std::map<std::string, const GateDef*> defs;
        for (const auto& d : p_.declarations) {
            if (const auto* def = std::get_if<GateDef>(&d)) defs[def->name] = def;
        }
        std::set<std::string> done;
        std::set<std::string> path;
        for (const auto& [name, def] : defs) {
            visit_gate(name, defs, done, path);
        }
    }

    void visit_gate(const std::string& name, const std::map<std::string, const GateDef*>& defs,
                    std::set<std::string>& done, std::set<std::string>& path) {
        if (done.count(name)) return;
        auto it = defs.find(name);
        if (it == defs.end()) return;
        if (!path.insert(name).second) {
            error("recursion", "gate '" + name + "' is defined recursively", it->second->line,
                  it->second->column);
            return;
        }
        for (const auto& stmt : it->second->body) {
            if (const auto* call = std::get_if<GateCall>(&stmt)) {
                if (!find_builtin_gate(call->gate_name)) {
                    visit_gate(call->gate_name, defs, done, path);
                }
            }
        }
        path.erase(name);
        done.insert(name);
    }
};

}  // namespace

std::vector<Diagnostic> validate(const Program& p) { return Validator(p).run(); }

}  // namespace qirc::qasm
