#pragma once

#include <functional>
#include <optional>
#include <string>

#include "qirc/qasm/ast.hpp"

namespace qirc::qasm {

/// Maps an include name (e.g. "mygates.inc") to its source text, or nullopt
/// when unknown. "qelib1.inc" never reaches the resolver; its gate surface
/// is built in.
using IncludeResolver = std::function<std::optional<std::string>(const std::string&)>;

/// Parses a full OpenQASM 2.0 translation unit. Whole-register gate and
/// measure arguments are expanded to per-index statements when the register
/// declaration has already been seen. Included files may contain gate
/// definitions only; their definitions land in `declarations`.
///
/// Throws ParseError / LexError / IncludeError / VersionError.
Program parse_program(const std::string& source, const IncludeResolver& resolver = {});

}  // namespace qirc::qasm
