#include <array>
#include <cctype>
#include <string_view>

#include "qirc/qasm/token.hpp"
#include "qirc/support/errors.hpp"

namespace qirc::qasm {

namespace {

constexpr std::array<std::string_view, 12> kKeywords = {
    "OPENQASM", "include", "qreg",    "creg", "gate", "measure",
    "reset",    "barrier", "if",      "opaque", "U",  "CX",
};

bool is_keyword(std::string_view word) {
    for (auto kw : kKeywords) {
        if (kw == word) return true;
    }
    return false;
}

bool is_ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

}  // namespace

const char* token_kind_name(TokenKind kind) {
    switch (kind) {
        case TokenKind::Keyword: return "keyword";
        case TokenKind::Identifier: return "identifier";
        case TokenKind::Integer: return "integer";
        case TokenKind::Real: return "real";
        case TokenKind::Symbol: return "symbol";
        case TokenKind::String: return "string";
    }
    return "unknown";
}

std::vector<Token> tokenize(const std::string& source) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    const std::size_t n = source.size();
    int line = 1;
    int column = 1;

    auto advance = [&] {
        if (source[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
        ++i;
    };

    while (i < n) {
        const char c = source[i];
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            advance();
            continue;
        }
        if (c == '/' && i + 1 < n && source[i + 1] == '/') {
            while (i < n && source[i] != '\n') advance();
            continue;
        }

        Token tok;
        tok.line = line;
        tok.column = column;

        if (is_ident_start(c)) {
            std::size_t start = i;
            while (i < n && is_ident_char(source[i])) advance();
            tok.text = source.substr(start, i - start);
            tok.kind = is_keyword(tok.text) ? TokenKind::Keyword : TokenKind::Identifier;
            tokens.push_back(std::move(tok));
            continue;
        }

        if (is_digit(c) || (c == '.' && i + 1 < n && is_digit(source[i + 1]))) {
            std::size_t start = i;
            bool is_real = false;
            while (i < n && is_digit(source[i])) advance();
            if (i < n && source[i] == '.') {
                is_real = true;
                advance();
                while (i < n && is_digit(source[i])) advance();
            }
            if (i < n && (source[i] == 'e' || source[i] == 'E')) {
                std::size_t mark = i;
                int mark_line = line, mark_col = column;
                advance();
                if (i < n && (source[i] == '+' || source[i] == '-')) advance();
                if (i < n && is_digit(source[i])) {
                    is_real = true;
                    while (i < n && is_digit(source[i])) advance();
                } else {
                    // Not an exponent after all; 'e...' belongs to the next token.
                    i = mark;
                    line = mark_line;
                    column = mark_col;
                }
            }
            tok.text = source.substr(start, i - start);
            tok.kind = is_real ? TokenKind::Real : TokenKind::Integer;
            tokens.push_back(std::move(tok));
            continue;
        }

        if (c == '"') {
            advance();
            std::size_t start = i;
            while (i < n && source[i] != '"' && source[i] != '\n') advance();
            if (i >= n || source[i] != '"') {
                throw LexError("unterminated string literal", tok.line, tok.column);
            }
            tok.text = source.substr(start, i - start);
            advance();  // closing quote
            tok.kind = TokenKind::String;
            tokens.push_back(std::move(tok));
            continue;
        }

        // Multi-character symbols first.
        if (c == '-' && i + 1 < n && source[i + 1] == '>') {
            tok.kind = TokenKind::Symbol;
            tok.text = "->";
            advance();
            advance();
            tokens.push_back(std::move(tok));
            continue;
        }
        if (c == '=' && i + 1 < n && source[i + 1] == '=') {
            tok.kind = TokenKind::Symbol;
            tok.text = "==";
            advance();
            advance();
            tokens.push_back(std::move(tok));
            continue;
        }

        switch (c) {
            case ';': case ',': case '(': case ')': case '[': case ']':
            case '{': case '}': case '+': case '-': case '*': case '/':
            case '=':
                tok.kind = TokenKind::Symbol;
                tok.text = std::string(1, c);
                advance();
                tokens.push_back(std::move(tok));
                continue;
            default:
                throw LexError(std::string("unexpected character '") + c + "'", line, column);
        }
    }

    return tokens;
}

}  // namespace qirc::qasm
