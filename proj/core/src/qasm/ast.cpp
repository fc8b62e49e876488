#include "qirc/qasm/ast.hpp"

#include <cmath>
#include <sstream>

#include "qirc/support/errors.hpp"
#include "qirc/support/format.hpp"

namespace qirc::qasm {

ParamExpr::Ptr ParamExpr::literal(double value) {
    auto e = std::shared_ptr<ParamExpr>(new ParamExpr());
    e->kind_ = Kind::Literal;
    e->value_ = value;
    return e;
}

ParamExpr::Ptr ParamExpr::param(const std::string& name) {
    auto e = std::shared_ptr<ParamExpr>(new ParamExpr());
    e->kind_ = Kind::Param;
    e->name_ = name;
    return e;
}

ParamExpr::Ptr ParamExpr::binary(Kind op, Ptr lhs, Ptr rhs) {
    auto e = std::shared_ptr<ParamExpr>(new ParamExpr());
    e->kind_ = op;
    e->lhs_ = std::move(lhs);
    e->rhs_ = std::move(rhs);
    return e;
}

ParamExpr::Ptr ParamExpr::neg(Ptr operand) {
    auto e = std::shared_ptr<ParamExpr>(new ParamExpr());
    e->kind_ = Kind::Neg;
    e->lhs_ = std::move(operand);
    return e;
}

double ParamExpr::evaluate(const std::map<std::string, double>& bindings) const {
    double result = 0.0;
    switch (kind_) {
        case Kind::Literal:
            result = value_;
            break;
        case Kind::Param: {
            auto it = bindings.find(name_);
            if (it != bindings.end()) {
                result = it->second;
            } else if (name_ == "pi") {
                result = M_PI;
            } else {
                throw CompileError("unbound parameter '" + name_ + "'");
            }
            break;
        }
        case Kind::Add:
            result = lhs_->evaluate(bindings) + rhs_->evaluate(bindings);
            break;
        case Kind::Sub:
            result = lhs_->evaluate(bindings) - rhs_->evaluate(bindings);
            break;
        case Kind::Mul:
            result = lhs_->evaluate(bindings) * rhs_->evaluate(bindings);
            break;
        case Kind::Div:
            result = lhs_->evaluate(bindings) / rhs_->evaluate(bindings);
            break;
        case Kind::Neg:
            result = -lhs_->evaluate(bindings);
            break;
    }
    if (!std::isfinite(result)) {
        throw CompileError("parameter expression does not evaluate to a finite value");
    }
    return result;
}

bool ParamExpr::equals(const ParamExpr& other) const {
    if (kind_ != other.kind_) return false;
    switch (kind_) {
        case Kind::Literal: return value_ == other.value_;
        case Kind::Param: return name_ == other.name_;
        case Kind::Neg: return lhs_->equals(*other.lhs_);
        default: return lhs_->equals(*other.lhs_) && rhs_->equals(*other.rhs_);
    }
}

std::string ParamExpr::str() const {
    switch (kind_) {
        case Kind::Literal: return format_double(value_);
        case Kind::Param: return name_;
        case Kind::Neg: return "(-" + lhs_->str() + ")";
        case Kind::Add: return "(" + lhs_->str() + "+" + rhs_->str() + ")";
        case Kind::Sub: return "(" + lhs_->str() + "-" + rhs_->str() + ")";
        case Kind::Mul: return "(" + lhs_->str() + "*" + rhs_->str() + ")";
        case Kind::Div: return "(" + lhs_->str() + "/" + rhs_->str() + ")";
    }
    return "";
}

namespace {

bool params_equal(const std::vector<ParamExpr::Ptr>& a, const std::vector<ParamExpr::Ptr>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]->equals(*b[i])) return false;
    }
    return true;
}

}  // namespace

bool operator==(const QubitRef& a, const QubitRef& b) {
    return a.reg == b.reg && a.index == b.index;
}

bool operator==(const RegisterDecl& a, const RegisterDecl& b) {
    return a.name == b.name && a.size == b.size && a.quantum == b.quantum;
}

bool operator==(const GateCall& a, const GateCall& b) {
    return a.gate_name == b.gate_name && params_equal(a.params, b.params) && a.targets == b.targets;
}

bool operator==(const UGate& a, const UGate& b) {
    return a.theta->equals(*b.theta) && a.phi->equals(*b.phi) && a.lambda->equals(*b.lambda) &&
           a.target == b.target;
}

bool operator==(const CNOTGate& a, const CNOTGate& b) {
    return a.control == b.control && a.target == b.target;
}

bool operator==(const MeasureStmt& a, const MeasureStmt& b) {
    return a.qubit == b.qubit && a.bit == b.bit;
}

bool operator==(const ResetStmt& a, const ResetStmt& b) { return a.target == b.target; }

bool operator==(const BarrierStmt& a, const BarrierStmt& b) { return a.targets == b.targets; }

bool operator==(const GateDef& a, const GateDef& b) {
    return a.name == b.name && a.formal_params == b.formal_params &&
           a.formal_qubits == b.formal_qubits && a.body == b.body;
}

bool operator==(const Program& a, const Program& b) {
    return a.version == b.version && a.declarations == b.declarations &&
           a.statements == b.statements;
}

const RegisterDecl* Program::find_register(const std::string& name) const {
    for (const auto& d : declarations) {
        if (const auto* reg = std::get_if<RegisterDecl>(&d); reg && reg->name == name) {
            return reg;
        }
    }
    return nullptr;
}

const GateDef* Program::find_gate_def(const std::string& name) const {
    for (const auto& d : declarations) {
        if (const auto* def = std::get_if<GateDef>(&d); def && def->name == name) {
            return def;
        }
    }
    return nullptr;
}

namespace {

constexpr BuiltinGate kBuiltinGates[] = {
    {"h", 0, 1},   {"x", 0, 1},    {"y", 0, 1},  {"z", 0, 1},  {"s", 0, 1},  {"sdg", 0, 1},
    {"t", 0, 1},   {"tdg", 0, 1},  {"id", 0, 1}, {"rx", 1, 1}, {"ry", 1, 1}, {"rz", 1, 1},
    {"u1", 1, 1},  {"u2", 2, 1},   {"u3", 3, 1}, {"cx", 0, 2}, {"cz", 0, 2}, {"swap", 0, 2},
};

void print_ref(std::ostringstream& os, const QubitRef& r) {
    os << r.reg;
    if (r.index) os << "[" << *r.index << "]";
}

void print_stmt(std::ostringstream& os, const Stmt& stmt, const std::string& indent) {
    os << indent;
    std::visit(
        [&](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, GateCall>) {
                os << s.gate_name;
                if (!s.params.empty()) {
                    os << "(";
                    for (std::size_t i = 0; i < s.params.size(); ++i) {
                        if (i) os << ",";
                        os << s.params[i]->str();
                    }
                    os << ")";
                }
                os << " ";
                for (std::size_t i = 0; i < s.targets.size(); ++i) {
                    if (i) os << ",";
                    print_ref(os, s.targets[i]);
                }
            } else if constexpr (std::is_same_v<T, UGate>) {
                os << "U(" << s.theta->str() << "," << s.phi->str() << "," << s.lambda->str()
                   << ") ";
                print_ref(os, s.target);
            } else if constexpr (std::is_same_v<T, CNOTGate>) {
                os << "CX ";
                print_ref(os, s.control);
                os << ",";
                print_ref(os, s.target);
            } else if constexpr (std::is_same_v<T, MeasureStmt>) {
                os << "measure ";
                print_ref(os, s.qubit);
                os << " -> ";
                print_ref(os, s.bit);
            } else if constexpr (std::is_same_v<T, ResetStmt>) {
                os << "reset ";
                print_ref(os, s.target);
            } else if constexpr (std::is_same_v<T, BarrierStmt>) {
                os << "barrier ";
                for (std::size_t i = 0; i < s.targets.size(); ++i) {
                    if (i) os << ",";
                    print_ref(os, s.targets[i]);
                }
            }
        },
        stmt);
    os << ";\n";
}

}  // namespace

const BuiltinGate* find_builtin_gate(const std::string& name) {
    for (const auto& g : kBuiltinGates) {
        if (name == g.name) return &g;
    }
    return nullptr;
}

std::string print_program(const Program& p) {
    std::ostringstream os;
    os << "OPENQASM " << p.version << ";\n";
    for (const auto& d : p.declarations) {
        if (const auto* reg = std::get_if<RegisterDecl>(&d)) {
            os << (reg->quantum ? "qreg " : "creg ") << reg->name << "[" << reg->size << "];\n";
        } else {
            const auto& def = std::get<GateDef>(d);
            os << "gate " << def.name;
            if (!def.formal_params.empty()) {
                os << "(";
                for (std::size_t i = 0; i < def.formal_params.size(); ++i) {
                    if (i) os << ",";
                    os << def.formal_params[i];
                }
                os << ")";
            }
            os << " ";
            for (std::size_t i = 0; i < def.formal_qubits.size(); ++i) {
                if (i) os << ",";
                os << def.formal_qubits[i];
            }
            os << " {\n";
            for (const auto& s : def.body) print_stmt(os, s, "  ");
            os << "}\n";
        }
    }
    for (const auto& s : p.statements) print_stmt(os, s, "");
    return os.str();
}

}  // namespace qirc::qasm
