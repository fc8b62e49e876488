#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace qirc::qasm {

/// Constant angle expression. Top-level statements hold fully evaluated
/// literals; gate-definition bodies keep trees over the formal parameters,
/// closed at inline time. Trees are immutable and shared.
class ParamExpr {
public:
    enum class Kind { Literal, Param, Add, Sub, Mul, Div, Neg };

    using Ptr = std::shared_ptr<const ParamExpr>;

    static Ptr literal(double value);
    static Ptr param(const std::string& name);
    static Ptr binary(Kind op, Ptr lhs, Ptr rhs);
    static Ptr neg(Ptr operand);

    Kind kind() const { return kind_; }
    bool is_literal() const { return kind_ == Kind::Literal; }
    double literal_value() const { return value_; }
    const std::string& param_name() const { return name_; }

    /// Evaluates with `pi` bound implicitly; throws CompileError on an
    /// unbound parameter or a non-finite result.
    double evaluate(const std::map<std::string, double>& bindings = {}) const;

    bool equals(const ParamExpr& other) const;
    std::string str() const;

private:
    ParamExpr() = default;

    Kind kind_ = Kind::Literal;
    double value_ = 0.0;
    std::string name_;
    Ptr lhs_;
    Ptr rhs_;
};

/// Reference to one qubit or classical bit. At the top level `index` is
/// always present after parsing (whole-register uses are expanded); inside
/// gate bodies it is empty and `reg` names a formal qubit.
struct QubitRef {
    std::string reg;
    std::optional<std::int64_t> index;
    int line = 0;
    int column = 0;
};

bool operator==(const QubitRef& a, const QubitRef& b);

struct RegisterDecl {
    std::string name;
    std::int64_t size = 0;
    bool quantum = true;
    int line = 0;
    int column = 0;
};

struct GateCall {
    std::string gate_name;
    std::vector<ParamExpr::Ptr> params;
    std::vector<QubitRef> targets;
    int line = 0;
    int column = 0;
};

struct UGate {
    ParamExpr::Ptr theta;
    ParamExpr::Ptr phi;
    ParamExpr::Ptr lambda;
    QubitRef target;
    int line = 0;
    int column = 0;
};

struct CNOTGate {
    QubitRef control;
    QubitRef target;
    int line = 0;
    int column = 0;
};

struct MeasureStmt {
    QubitRef qubit;
    QubitRef bit;
    int line = 0;
    int column = 0;
};

struct ResetStmt {
    QubitRef target;
    int line = 0;
    int column = 0;
};

struct BarrierStmt {
    std::vector<QubitRef> targets;
    int line = 0;
    int column = 0;
};

using Stmt = std::variant<GateCall, UGate, CNOTGate, MeasureStmt, ResetStmt, BarrierStmt>;

struct GateDef {
    std::string name;
    std::vector<std::string> formal_params;
    std::vector<std::string> formal_qubits;
    std::vector<Stmt> body;  // UGate | CNOTGate | GateCall only
    int line = 0;
    int column = 0;
};

using Decl = std::variant<RegisterDecl, GateDef>;

struct Program {
    std::string version = "2.0";
    std::vector<Decl> declarations;
    std::vector<Stmt> statements;

    const RegisterDecl* find_register(const std::string& name) const;
    const GateDef* find_gate_def(const std::string& name) const;
};

/// Structural equality, insensitive to source positions.
bool operator==(const RegisterDecl& a, const RegisterDecl& b);
bool operator==(const GateCall& a, const GateCall& b);
bool operator==(const UGate& a, const UGate& b);
bool operator==(const CNOTGate& a, const CNOTGate& b);
bool operator==(const MeasureStmt& a, const MeasureStmt& b);
bool operator==(const ResetStmt& a, const ResetStmt& b);
bool operator==(const BarrierStmt& a, const BarrierStmt& b);
bool operator==(const GateDef& a, const GateDef& b);
bool operator==(const Program& a, const Program& b);

/// Canonical source form. Reparsing the output yields a structurally
/// equal Program.
std::string print_program(const Program& p);

/// Built-in named-gate table (the qelib1.inc surface kept as named calls).
struct BuiltinGate {
    const char* name;
    int num_params;
    int num_qubits;
};

const BuiltinGate* find_builtin_gate(const std::string& name);

}  // namespace qirc::qasm
