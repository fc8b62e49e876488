#include <cctype>
#include <map>
#include <optional>
#include <vector>

#include "qirc/ir/builder.hpp"
#include "qirc/lower/qir_text.hpp"
#include "qirc/support/errors.hpp"

namespace qirc::lower {

namespace {

struct TextToken {
    enum class Kind { Word, Local, Global, Number, Symbol, End };
    Kind kind = Kind::End;
    std::string text;
    int line = 0;
};

class TextLexer {
public:
    explicit TextLexer(const std::string& text) : text_(text) {}

    std::vector<TextToken> run() {
        std::vector<TextToken> tokens;
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (c == '\n') {
                ++line_;
                ++pos_;
                continue;
            }
            if (c == ' ' || c == '\t' || c == '\r') {
                ++pos_;
                continue;
            }
            if (c == ';') {  // LLVM comment
                while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
                continue;
            }
            if (c == '%' || c == '@') {
                ++pos_;
                std::string name = read_name();
                if (name.empty()) {
                    throw QirParseError("dangling '" + std::string(1, c) + "'", line_);
                }
                tokens.push_back({c == '%' ? TextToken::Kind::Local : TextToken::Kind::Global,
                                  std::move(name), line_});
                continue;
            }
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                tokens.push_back({TextToken::Kind::Word, read_name(), line_});
                continue;
            }
            if (std::isdigit(static_cast<unsigned char>(c)) ||
                (c == '-' && pos_ + 1 < text_.size() &&
                 std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))) {
                tokens.push_back({TextToken::Kind::Number, read_number(), line_});
                continue;
            }
            switch (c) {
                case '(': case ')': case ',': case '=': case '{': case '}': case '*':
                    tokens.push_back({TextToken::Kind::Symbol, std::string(1, c), line_});
                    ++pos_;
                    continue;
                default:
                    throw QirParseError(std::string("unexpected character '") + c + "'", line_);
            }
        }
        tokens.push_back({TextToken::Kind::End, "<end>", line_});
        return tokens;
    }

private:
    std::string read_name() {
        std::size_t start = pos_;
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.') {
                ++pos_;
            } else {
                break;
            }
        }
        return text_.substr(start, pos_ - start);
    }

    std::string read_number() {
        std::size_t start = pos_;
        if (text_[pos_] == '-') ++pos_;
        auto digits = [&] {
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
        };
        digits();
        if (pos_ < text_.size() && text_[pos_] == '.') {
            ++pos_;
            digits();
        }
        if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
            ++pos_;
            if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
            digits();
        }
        return text_.substr(start, pos_ - start);
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    int line_ = 1;
};

class TextParser {
public:
    explicit TextParser(const std::string& text) : tokens_(TextLexer(text).run()) {}

    ir::Module run() {
        while (!at(TextToken::Kind::End)) {
            if (at(TextToken::Kind::Local)) {
                parse_opaque_def();
            } else if (at_word("declare")) {
                parse_declare();
            } else if (at_word("define")) {
                parse_define();
            } else {
                fail("expected a type definition, declare, or define");
            }
        }
        return builder_.take_module();
    }

private:
    std::vector<TextToken> tokens_;
    std::size_t pos_ = 0;
    ir::ModuleBuilder builder_;

    [[noreturn]] void fail(const std::string& message) {
        throw QirParseError(message + " (near '" + peek().text + "')", peek().line);
    }

    const TextToken& peek() const { return tokens_[pos_]; }
    bool at(TextToken::Kind kind) const { return peek().kind == kind; }
    bool at_word(const std::string& w) const {
        return peek().kind == TextToken::Kind::Word && peek().text == w;
    }
    bool at_symbol(const std::string& s) const {
        return peek().kind == TextToken::Kind::Symbol && peek().text == s;
    }

    TextToken next() { return tokens_[pos_ == tokens_.size() - 1 ? pos_ : pos_++]; }

    void expect_symbol(const std::string& s) {
        if (!at_symbol(s)) fail("expected '" + s + "'");
        ++pos_;
    }

    void expect_word(const std::string& w) {
        if (!at_word(w)) fail("expected '" + w + "'");
        ++pos_;
    }

    void parse_opaque_def() {
        const TextToken name = next();
        expect_symbol("=");
        expect_word("type");
        expect_word("opaque");
        if (name.text != "Array" && name.text != "Qubit" && name.text != "Result" &&
            name.text != "qreg") {
            throw QirParseError("unknown opaque type '%" + name.text + "'", name.line);
        }
    }

    ir::IrType parse_type() {
        ir::IrType t;
        if (at(TextToken::Kind::Local)) {
            const TextToken tok = next();
            if (tok.text == "Array") {
                t = ir::IrType::array();
            } else if (tok.text == "Qubit") {
                t = ir::IrType::qubit();
            } else if (tok.text == "Result") {
                t = ir::IrType::result();
            } else if (tok.text == "qreg") {
                t = ir::IrType::qreg();
            } else {
                throw QirParseError("unknown type '%" + tok.text + "'", tok.line);
            }
        } else if (at(TextToken::Kind::Word)) {
            const TextToken tok = next();
            if (tok.text == "i1") {
                t = ir::IrType::i(1);
            } else if (tok.text == "i8") {
                t = ir::IrType::i(8);
            } else if (tok.text == "i32") {
                t = ir::IrType::i(32);
            } else if (tok.text == "i64") {
                t = ir::IrType::i(64);
            } else if (tok.text == "double") {
                t = ir::IrType::f64();
            } else if (tok.text == "void") {
                t = ir::IrType::none();
            } else {
                throw QirParseError("unknown type '" + tok.text + "'", tok.line);
            }
        } else {
            fail("expected a type");
        }
        while (at_symbol("*")) {
            ++pos_;
            t = t.ptr();
        }
        return t;
    }

    void parse_declare() {
        expect_word("declare");
        const ir::IrType result = parse_type();
        if (!at(TextToken::Kind::Global)) fail("expected a function name");
        const TextToken name = next();
        expect_symbol("(");
        std::vector<ir::IrType> params;
        if (!at_symbol(")")) {
            params.push_back(parse_type());
            while (at_symbol(",")) {
                ++pos_;
                params.push_back(parse_type());
            }
        }
        expect_symbol(")");
        try {
            builder_.declare_external({name.text, params, result});
        } catch (const SignatureError& e) {
            throw QirParseError(e.what(), name.line);
        }
    }

    void parse_define() {
        expect_word("define");
        const ir::IrType return_type = parse_type();
        if (!at(TextToken::Kind::Global)) fail("expected a function name");
        const TextToken name = next();

        std::vector<ir::IrType> arg_types;
        std::vector<std::string> arg_names;
        expect_symbol("(");
        if (!at_symbol(")")) {
            do {
                arg_types.push_back(parse_type());
                if (!at(TextToken::Kind::Local)) fail("expected an argument name");
                arg_names.push_back(next().text);
            } while (at_symbol(",") && (++pos_, true));
        }
        expect_symbol(")");
        expect_symbol("{");

        std::map<std::string, ir::Value> locals;
        std::vector<ir::Value> args;
        try {
            args = builder_.begin_function(name.text, arg_types, return_type);
        } catch (const std::logic_error& e) {
            throw QirParseError(e.what(), name.line);
        }
        for (std::size_t i = 0; i < arg_names.size(); ++i) {
            locals[arg_names[i]] = args[i];
        }

        while (!at_symbol("}")) {
            parse_instruction(locals);
        }
        expect_symbol("}");
        builder_.end_function();
    }

    // value in an argument/operand position: %local or an immediate of the
    // given type (immediates materialize a constant op)
    ir::Value parse_value(const ir::IrType& type, std::map<std::string, ir::Value>& locals) {
        if (at(TextToken::Kind::Local)) {
            const TextToken tok = next();
            auto it = locals.find(tok.text);
            if (it == locals.end()) {
                throw QirParseError("use of undefined value '%" + tok.text + "'", tok.line);
            }
            return it->second;
        }
        if (at(TextToken::Kind::Number)) {
            const TextToken tok = next();
            ir::Attr value;
            try {
                if (type == ir::IrType::f64()) {
                    value = std::stod(tok.text);
                } else if (type == ir::IrType::i(64)) {
                    if (tok.text.find_first_of(".eE") != std::string::npos) {
                        throw QirParseError("expected an integer immediate", tok.line);
                    }
                    value = static_cast<std::int64_t>(std::stoll(tok.text));
                } else {
                    throw QirParseError("immediate operand of unsupported type", tok.line);
                }
            } catch (const QirParseError&) {
                throw;
            } catch (const std::exception&) {
                throw QirParseError("numeric literal '" + tok.text + "' is out of range",
                                    tok.line);
            }
            return builder_.build_op("llvm.constant", {{"value", value}}, {}).results[0];
        }
        fail("expected a value");
    }

    void parse_instruction(std::map<std::string, ir::Value>& locals) {
        const int line = peek().line;
        try {
            if (at_word("call")) {
                parse_call(std::nullopt, locals);
                return;
            }
            if (at_word("ret")) {
                ++pos_;
                if (at_word("void")) {
                    ++pos_;
                    builder_.build_op("llvm.return", {}, {});
                } else {
                    parse_type();
                    if (!at(TextToken::Kind::Number)) fail("expected a return value");
                    const TextToken tok = next();
                    std::int64_t value = 0;
                    try {
                        value = static_cast<std::int64_t>(std::stoll(tok.text));
                    } catch (const std::exception&) {
                        throw QirParseError("return value '" + tok.text + "' is out of range",
                                            tok.line);
                    }
                    builder_.build_op("llvm.return", {{"value", ir::Attr{value}}}, {});
                }
                return;
            }
            if (at(TextToken::Kind::Local)) {
                const TextToken result = next();
                expect_symbol("=");
                if (at_word("call")) {
                    parse_call(result.text, locals);
                } else if (at_word("bitcast")) {
                    ++pos_;
                    const ir::IrType src = parse_type();
                    ir::Value operand = parse_value(src, locals);
                    expect_word("to");
                    const ir::IrType dst = parse_type();
                    auto& op = builder_.build_op("llvm.bitcast", {}, {operand}, dst);
                    locals[result.text] = op.results[0];
                } else if (at_word("load")) {
                    ++pos_;
                    const ir::IrType loaded = parse_type();
                    expect_symbol(",");
                    const ir::IrType pointer = parse_type();
                    if (pointer.pointee() != loaded) {
                        fail("load result type does not match the pointer");
                    }
                    ir::Value operand = parse_value(pointer, locals);
                    auto& op = builder_.build_op("llvm.load", {}, {operand});
                    locals[result.text] = op.results[0];
                } else {
                    fail("unknown instruction opcode");
                }
                return;
            }
            fail("unknown instruction opcode");
        } catch (const SignatureError& e) {
            throw QirParseError(e.what(), line);
        }
    }

    void parse_call(std::optional<std::string> result_name,
                    std::map<std::string, ir::Value>& locals) {
        expect_word("call");
        const ir::IrType ret = parse_type();
        if (!at(TextToken::Kind::Global)) fail("expected a callee name");
        const TextToken callee = next();
        expect_symbol("(");
        std::vector<ir::Value> args;
        if (!at_symbol(")")) {
            do {
                const ir::IrType type = parse_type();
                args.push_back(parse_value(type, locals));
            } while (at_symbol(",") && (++pos_, true));
        }
        expect_symbol(")");

        auto& op = builder_.build_op("llvm.call", {{"callee", ir::Attr{callee.text}}},
                                     std::move(args));
        if (result_name) {
            if (op.results.empty()) {
                throw QirParseError("void call cannot define '%" + *result_name + "'",
                                    callee.line);
            }
            locals[*result_name] = op.results[0];
        } else if (!op.results.empty() && !ret.is_void()) {
            // Non-void call in statement position: result stays unused.
        }
    }
};

}  // namespace

ir::Module parse_qir_text(const std::string& text) { return TextParser(text).run(); }

}  // namespace qirc::lower
