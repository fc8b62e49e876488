#pragma once

#include <stdexcept>
#include <string>

namespace qirc {

/// Base of all compile-phase failures. Carries an optional 1-based source
/// position (0 when not applicable).
class CompileError : public std::runtime_error {
public:
    explicit CompileError(const std::string& message, int line = 0, int column = 0)
        : std::runtime_error(message), line_(line), column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

class LexError : public CompileError {
public:
    using CompileError::CompileError;
};

class ParseError : public CompileError {
public:
    ParseError(const std::string& expected, const std::string& found, int line, int column)
        : CompileError("expected " + expected + ", found " + found, line, column),
          expected_(expected),
          found_(found) {}

    ParseError(const std::string& message, int line, int column)
        : CompileError(message, line, column) {}

    const std::string& expected() const { return expected_; }
    const std::string& found() const { return found_; }

private:
    std::string expected_;
    std::string found_;
};

class IncludeError : public CompileError {
public:
    using CompileError::CompileError;
};

class VersionError : public CompileError {
public:
    using CompileError::CompileError;
};

class RecursionError : public CompileError {
public:
    using CompileError::CompileError;
};

/// Raised by the IR builder when an op does not match its signature table row.
class SignatureError : public CompileError {
public:
    using CompileError::CompileError;
};

class LoweringError : public CompileError {
public:
    using CompileError::CompileError;
};

class LegalityError : public CompileError {
public:
    using CompileError::CompileError;
};

class QirParseError : public CompileError {
public:
    using CompileError::CompileError;
};

/// Protocol misuse (generator lifecycle, set_qreg after allocation, ...).
class StateError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Base of all execution-phase failures.
class ExecutionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ConfigError : public ExecutionError {
public:
    using ExecutionError::ExecutionError;
};

class CapacityError : public ExecutionError {
public:
    using ExecutionError::ExecutionError;
};

class IndexError : public ExecutionError {
public:
    using ExecutionError::ExecutionError;
};

class UseAfterRelease : public ExecutionError {
public:
    using ExecutionError::ExecutionError;
};

class DoubleRelease : public ExecutionError {
public:
    using ExecutionError::ExecutionError;
};

class UnknownGate : public ExecutionError {
public:
    using ExecutionError::ExecutionError;
};

class ArityError : public ExecutionError {
public:
    using ExecutionError::ExecutionError;
};

}  // namespace qirc
