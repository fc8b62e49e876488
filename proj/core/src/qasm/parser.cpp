#include "qirc/qasm/parser.hpp"

#include <cmath>
#include <set>
#include <unordered_map>

#include "qirc/qasm/token.hpp"
#include "qirc/support/errors.hpp"

namespace qirc::qasm {

namespace {

constexpr int kMaxIncludeDepth = 16;

std::int64_t parse_integer(const Token& t) {
    try {
        return std::stoll(t.text);
    } catch (const std::exception&) {
        throw ParseError("integer literal '" + t.text + "' is out of range", t.line, t.column);
    }
}

double parse_real(const Token& t) {
    try {
        return std::stod(t.text);
    } catch (const std::exception&) {
        throw ParseError("numeric literal '" + t.text + "' is out of range", t.line, t.column);
    }
}

class Parser {
public:
    Parser(std::vector<Token> tokens, const IncludeResolver& resolver, Program& program,
           int include_depth)
        : tokens_(std::move(tokens)),
          resolver_(resolver),
          program_(program),
          include_depth_(include_depth) {}

    void parse_translation_unit() {
        expect_keyword("OPENQASM");
        const Token& version = expect(TokenKind::Real, "a version number");
        if (version.text != "2.0") {
            throw VersionError("unsupported OpenQASM version '" + version.text + "'",
                               version.line, version.column);
        }
        program_.version = version.text;
        expect_symbol(";");
        parse_items(/*include_fragment=*/false);
    }

    // Included files carry gate definitions (and nested includes) only.
    void parse_fragment() { parse_items(/*include_fragment=*/true); }

private:
    std::vector<Token> tokens_;
    const IncludeResolver& resolver_;
    Program& program_;
    int include_depth_;
    std::size_t pos_ = 0;

    // ---- token plumbing ----------------------------------------------

    bool at_end() const { return pos_ >= tokens_.size(); }

    const Token& peek() const {
        if (at_end()) {
            static Token eof{TokenKind::Symbol, "<end of input>", 0, 0};
            return eof;
        }
        return tokens_[pos_];
    }

    const Token& next() {
        if (at_end()) {
            throw ParseError("unexpected end of input",
                             tokens_.empty() ? 1 : tokens_.back().line,
                             tokens_.empty() ? 1 : tokens_.back().column);
        }
        return tokens_[pos_++];
    }

    bool check_symbol(const std::string& s) const {
        return !at_end() && peek().kind == TokenKind::Symbol && peek().text == s;
    }

    bool check_keyword(const std::string& s) const {
        return !at_end() && peek().kind == TokenKind::Keyword && peek().text == s;
    }

    bool accept_symbol(const std::string& s) {
        if (check_symbol(s)) {
            ++pos_;
            return true;
        }
        return false;
    }

    const Token& expect(TokenKind kind, const std::string& what) {
        if (at_end() || peek().kind != kind) {
            const Token& t = peek();
            throw ParseError(what, describe(t), t.line, t.column);
        }
        return tokens_[pos_++];
    }

    const Token& expect_symbol(const std::string& s) {
        if (!check_symbol(s)) {
            const Token& t = peek();
            throw ParseError("'" + s + "'", describe(t), t.line, t.column);
        }
        return tokens_[pos_++];
    }

    const Token& expect_keyword(const std::string& s) {
        if (!check_keyword(s)) {
            const Token& t = peek();
            throw ParseError("'" + s + "'", describe(t), t.line, t.column);
        }
        return tokens_[pos_++];
    }

    static std::string describe(const Token& t) {
        if (t.line == 0) return "end of input";
        return std::string(token_kind_name(t.kind)) + " '" + t.text + "'";
    }

    // ---- top-level structure -----------------------------------------

    void parse_items(bool include_fragment) {
        while (!at_end()) {
            const Token& t = peek();
            if (t.kind == TokenKind::Keyword) {
                if (t.text == "include") {
                    parse_include();
                    continue;
                }
                if (t.text == "gate") {
                    parse_gate_def();
                    continue;
                }
                if (include_fragment) {
                    throw ParseError("only gate definitions are allowed in included files",
                                     t.line, t.column);
                }
                if (t.text == "qreg" || t.text == "creg") {
                    parse_register_decl();
                    continue;
                }
                if (t.text == "if") {
                    throw ParseError(
                        "'if' statements are not supported: the target dialect has no "
                        "classical-control operation",
                        t.line, t.column);
                }
                if (t.text == "opaque") {
                    throw ParseError("opaque gates are not supported", t.line, t.column);
                }
                if (t.text == "measure") {
                    parse_measure();
                    continue;
                }
                if (t.text == "reset") {
                    parse_reset();
                    continue;
                }
                if (t.text == "barrier") {
                    parse_barrier();
                    continue;
                }
                if (t.text == "U") {
                    parse_u_gate();
                    continue;
                }
                if (t.text == "CX") {
                    parse_cnot_gate();
                    continue;
                }
                if (t.text == "OPENQASM") {
                    throw ParseError("duplicate OPENQASM header", t.line, t.column);
                }
                throw ParseError("a statement", describe(t), t.line, t.column);
            }
            if (t.kind == TokenKind::Identifier) {
                if (include_fragment) {
                    throw ParseError("only gate definitions are allowed in included files",
                                     t.line, t.column);
                }
                parse_named_gate_call();
                continue;
            }
            throw ParseError("a statement", describe(t), t.line, t.column);
        }
    }

    void parse_include() {
        const Token& kw = expect_keyword("include");
        const Token& name = expect(TokenKind::String, "an include file name");
        expect_symbol(";");
        if (name.text == "qelib1.inc") {
            return;  // built-in gate table
        }
        if (include_depth_ + 1 > kMaxIncludeDepth) {
            throw IncludeError("include depth limit exceeded at '" + name.text + "'", kw.line,
                               kw.column);
        }
        std::optional<std::string> text;
        if (resolver_) text = resolver_(name.text);
        if (!text) {
            throw IncludeError("cannot resolve include '" + name.text + "'", name.line,
                               name.column);
        }
        Parser sub(tokenize(*text), resolver_, program_, include_depth_ + 1);
        sub.parse_fragment();
    }

    void parse_register_decl() {
        const Token& kw = next();  // qreg | creg
        RegisterDecl decl;
        decl.quantum = kw.text == "qreg";
        decl.line = kw.line;
        decl.column = kw.column;
        decl.name = expect(TokenKind::Identifier, "a register name").text;
        expect_symbol("[");
        const Token& size = expect(TokenKind::Integer, "a register size");
        decl.size = parse_integer(size);
        if (decl.size < 1) {
            throw ParseError("register size must be at least 1", size.line, size.column);
        }
        expect_symbol("]");
        expect_symbol(";");
        register_sizes_[decl.name] = {decl.size, decl.quantum};
        program_.declarations.emplace_back(std::move(decl));
    }

    // ---- gate definitions --------------------------------------------

    void parse_gate_def() {
        const Token& kw = expect_keyword("gate");
        GateDef def;
        def.line = kw.line;
        def.column = kw.column;
        def.name = expect(TokenKind::Identifier, "a gate name").text;
        if (accept_symbol("(")) {
            if (!check_symbol(")")) {
                do {
                    def.formal_params.push_back(
                        expect(TokenKind::Identifier, "a parameter name").text);
                } while (accept_symbol(","));
            }
            expect_symbol(")");
        }
        do {
            def.formal_qubits.push_back(expect(TokenKind::Identifier, "a qubit name").text);
        } while (accept_symbol(","));
        expect_symbol("{");

        std::set<std::string> params(def.formal_params.begin(), def.formal_params.end());
        std::set<std::string> qubits(def.formal_qubits.begin(), def.formal_qubits.end());
        while (!check_symbol("}")) {
            def.body.push_back(parse_body_stmt(params, qubits));
        }
        expect_symbol("}");
        program_.declarations.emplace_back(std::move(def));
    }

    Stmt parse_body_stmt(const std::set<std::string>& params, const std::set<std::string>& qubits) {
        const Token& t = peek();
        if (t.kind == TokenKind::Keyword && t.text == "U") {
            next();
            UGate g;
            g.line = t.line;
            g.column = t.column;
            expect_symbol("(");
            g.theta = parse_expr(&params);
            expect_symbol(",");
            g.phi = parse_expr(&params);
            expect_symbol(",");
            g.lambda = parse_expr(&params);
            expect_symbol(")");
            g.target = parse_formal_ref(qubits);
            expect_symbol(";");
            return g;
        }
        if (t.kind == TokenKind::Keyword && t.text == "CX") {
            next();
            CNOTGate g;
            g.line = t.line;
            g.column = t.column;
            g.control = parse_formal_ref(qubits);
            expect_symbol(",");
            g.target = parse_formal_ref(qubits);
            expect_symbol(";");
            return g;
        }
        if (t.kind == TokenKind::Identifier) {
            next();
            GateCall call;
            call.gate_name = t.text;
            call.line = t.line;
            call.column = t.column;
            if (accept_symbol("(")) {
                if (!check_symbol(")")) {
                    do {
                        call.params.push_back(parse_expr(&params));
                    } while (accept_symbol(","));
                }
                expect_symbol(")");
            }
            do {
                call.targets.push_back(parse_formal_ref(qubits));
            } while (accept_symbol(","));
            expect_symbol(";");
            return call;
        }
        throw ParseError("a gate-body statement (U, CX, or a gate call)", describe(t), t.line,
                         t.column);
    }

    QubitRef parse_formal_ref(const std::set<std::string>& qubits) {
        const Token& name = expect(TokenKind::Identifier, "a formal qubit name");
        if (check_symbol("[")) {
            throw ParseError("formal qubits cannot be indexed", peek().line, peek().column);
        }
        if (!qubits.count(name.text)) {
            throw ParseError("unknown formal qubit '" + name.text + "'", name.line, name.column);
        }
        return QubitRef{name.text, std::nullopt, name.line, name.column};
    }

    // ---- statements ---------------------------------------------------

    struct Arg {
        QubitRef ref;           // index empty for whole-register use
        std::int64_t size = 0;  // register size when known, else 0
    };

    Arg parse_argument() {
        const Token& name = expect(TokenKind::Identifier, "a register name");
        Arg arg;
        arg.ref = QubitRef{name.text, std::nullopt, name.line, name.column};
        if (accept_symbol("[")) {
            const Token& idx = expect(TokenKind::Integer, "an index");
            arg.ref.index = parse_integer(idx);
            expect_symbol("]");
        } else if (auto it = register_sizes_.find(name.text); it != register_sizes_.end()) {
            arg.size = it->second.first;
        }
        return arg;
    }

    // Expands whole-register arguments: every whole register must have the
    // same length and single qubits broadcast against it.
    std::vector<std::vector<QubitRef>> broadcast(const std::vector<Arg>& args, int line,
                                                 int column) {
        std::int64_t width = 0;
        bool unresolved = false;
        for (const auto& a : args) {
            if (a.ref.index) continue;
            if (a.size == 0) {
                unresolved = true;  // undeclared register; validate() reports it
                continue;
            }
            if (width == 0) {
                width = a.size;
            } else if (width != a.size) {
                throw ParseError("mismatched register sizes in broadcast statement", line,
                                 column);
            }
        }
        std::vector<std::vector<QubitRef>> result;
        if (width == 0 || unresolved) {
            std::vector<QubitRef> row;
            for (const auto& a : args) row.push_back(a.ref);
            result.push_back(std::move(row));
            return result;
        }
        for (std::int64_t i = 0; i < width; ++i) {
            std::vector<QubitRef> row;
            for (const auto& a : args) {
                QubitRef r = a.ref;
                if (!r.index && a.size > 0) r.index = i;
                row.push_back(std::move(r));
            }
            result.push_back(std::move(row));
        }
        return result;
    }

    void parse_u_gate() {
        const Token& kw = expect_keyword("U");
        expect_symbol("(");
        auto theta = parse_expr(nullptr);
        expect_symbol(",");
        auto phi = parse_expr(nullptr);
        expect_symbol(",");
        auto lambda = parse_expr(nullptr);
        expect_symbol(")");
        Arg target = parse_argument();
        expect_symbol(";");
        for (auto& row : broadcast({target}, kw.line, kw.column)) {
            UGate g;
            g.theta = theta;
            g.phi = phi;
            g.lambda = lambda;
            g.target = row[0];
            g.line = kw.line;
            g.column = kw.column;
            program_.statements.emplace_back(std::move(g));
        }
    }

    void parse_cnot_gate() {
        const Token& kw = expect_keyword("CX");
        Arg control = parse_argument();
        expect_symbol(",");
        Arg target = parse_argument();
        expect_symbol(";");
        for (auto& row : broadcast({control, target}, kw.line, kw.column)) {
            CNOTGate g;
            g.control = row[0];
            g.target = row[1];
            g.line = kw.line;
            g.column = kw.column;
            program_.statements.emplace_back(std::move(g));
        }
    }

    void parse_named_gate_call() {
        const Token& name = expect(TokenKind::Identifier, "a gate name");
        GateCall call;
        call.gate_name = name.text;
        call.line = name.line;
        call.column = name.column;
        if (accept_symbol("(")) {
            if (!check_symbol(")")) {
                do {
                    call.params.push_back(parse_expr(nullptr));
                } while (accept_symbol(","));
            }
            expect_symbol(")");
        }
        std::vector<Arg> args;
        do {
            args.push_back(parse_argument());
        } while (accept_symbol(","));
        expect_symbol(";");
        for (auto& row : broadcast(args, name.line, name.column)) {
            GateCall c = call;
            c.targets = row;
            program_.statements.emplace_back(std::move(c));
        }
    }

    void parse_measure() {
        const Token& kw = expect_keyword("measure");
        Arg qubit = parse_argument();
        expect_symbol("->");
        Arg bit = parse_argument();
        expect_symbol(";");

        const bool q_whole = !qubit.ref.index.has_value();
        const bool b_whole = !bit.ref.index.has_value();
        if (q_whole != b_whole && (qubit.size > 0 || bit.size > 0)) {
            throw ParseError("measure requires both sides indexed or both whole registers",
                             kw.line, kw.column);
        }
        if (q_whole && b_whole && qubit.size > 0 && bit.size > 0 && qubit.size != bit.size) {
            throw ParseError("measure register sizes do not match", kw.line, kw.column);
        }
        for (auto& row : broadcast({qubit, bit}, kw.line, kw.column)) {
            MeasureStmt m;
            m.qubit = row[0];
            m.bit = row[1];
            m.line = kw.line;
            m.column = kw.column;
            program_.statements.emplace_back(std::move(m));
        }
    }

    void parse_reset() {
        const Token& kw = expect_keyword("reset");
        Arg target = parse_argument();
        expect_symbol(";");
        for (auto& row : broadcast({target}, kw.line, kw.column)) {
            ResetStmt r;
            r.target = row[0];
            r.line = kw.line;
            r.column = kw.column;
            program_.statements.emplace_back(std::move(r));
        }
    }

    void parse_barrier() {
        const Token& kw = expect_keyword("barrier");
        BarrierStmt b;
        b.line = kw.line;
        b.column = kw.column;
        do {
            b.targets.push_back(parse_argument().ref);
        } while (accept_symbol(","));
        expect_symbol(";");
        program_.statements.emplace_back(std::move(b));
    }

    // ---- constant expressions ------------------------------------------
    //
    // expr := term (('+'|'-') term)*
    // term := unary (('*'|'/') unary)*
    // unary := '-' unary | primary
    // primary := real | integer | identifier | '(' expr ')'
    //
    // At the top level (formals == nullptr) the expression must be constant
    // and is evaluated immediately; in gate bodies identifiers must name a
    // formal parameter (or pi) and the tree is kept.

    ParamExpr::Ptr parse_expr(const std::set<std::string>* formals) {
        auto e = parse_additive(formals);
        if (!formals) {
            return ParamExpr::literal(e->evaluate());
        }
        return e;
    }

    ParamExpr::Ptr parse_additive(const std::set<std::string>* formals) {
        auto lhs = parse_term(formals);
        while (check_symbol("+") || check_symbol("-")) {
            const bool add = peek().text == "+";
            ++pos_;
            auto rhs = parse_term(formals);
            lhs = ParamExpr::binary(add ? ParamExpr::Kind::Add : ParamExpr::Kind::Sub,
                                    std::move(lhs), std::move(rhs));
        }
        return lhs;
    }

    ParamExpr::Ptr parse_term(const std::set<std::string>* formals) {
        auto lhs = parse_unary(formals);
        while (check_symbol("*") || check_symbol("/")) {
            const bool mul = peek().text == "*";
            ++pos_;
            auto rhs = parse_unary(formals);
            lhs = ParamExpr::binary(mul ? ParamExpr::Kind::Mul : ParamExpr::Kind::Div,
                                    std::move(lhs), std::move(rhs));
        }
        return lhs;
    }

    ParamExpr::Ptr parse_unary(const std::set<std::string>* formals) {
        if (accept_symbol("-")) {
            return ParamExpr::neg(parse_unary(formals));
        }
        return parse_primary(formals);
    }

    ParamExpr::Ptr parse_primary(const std::set<std::string>* formals) {
        const Token& t = peek();
        if (t.kind == TokenKind::Real || t.kind == TokenKind::Integer) {
            ++pos_;
            return ParamExpr::literal(parse_real(t));
        }
        if (t.kind == TokenKind::Identifier) {
            ++pos_;
            if (t.text == "pi") {
                return ParamExpr::literal(M_PI);
            }
            if (formals && formals->count(t.text)) {
                return ParamExpr::param(t.text);
            }
            throw ParseError("unknown identifier '" + t.text + "' in constant expression",
                             t.line, t.column);
        }
        if (accept_symbol("(")) {
            auto e = parse_additive(formals);
            expect_symbol(")");
            return e;
        }
        throw ParseError("a constant expression", describe(t), t.line, t.column);
    }

    // register name -> (size, quantum); filled as declarations are parsed.
    std::unordered_map<std::string, std::pair<std::int64_t, bool>> register_sizes_;
};

}  // namespace

Program parse_program(const std::string& source, const IncludeResolver& resolver) {
    Program program;
    Parser parser(tokenize(source), resolver, program, 0);
    parser.parse_translation_unit();
    return program;
}

}  // namespace qirc::qasm
