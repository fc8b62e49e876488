#pragma once

#include <string>
#include <vector>

namespace qirc::qasm {

enum class TokenKind { Keyword, Identifier, Integer, Real, Symbol, String };

/// One lexical unit. `line`/`column` are 1-based and locate the first
/// character of `text` in the original source.
struct Token {
    TokenKind kind = TokenKind::Symbol;
    std::string text;
    int line = 1;
    int column = 1;
};

const char* token_kind_name(TokenKind kind);

/// Splits `source` into tokens. `//` line comments and whitespace are
/// discarded; every other character must start a valid token.
/// Throws LexError for characters outside the grammar.
std::vector<Token> tokenize(const std::string& source);

}  // namespace qirc::qasm
