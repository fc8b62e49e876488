#pragma once

#include <string>

#include "qirc/ir/module.hpp"

namespace qirc::lower {

/// Emits a QIR-shaped .ll file: opaque type definitions, one declare line
/// per external (first-use order), then the function definitions. Constant
/// ops fold into immediate operands; SSA names are %N increasing per
/// function. Byte-identical output for identical modules.
std::string emit_llvm_ir(const ir::Module& m);

/// Parses the .ll subset this artifact emits back into an llvm-dialect
/// module; parse_qir_text(emit_llvm_ir(m)) is structurally equal to m.
/// Throws QirParseError on anything outside the subset.
ir::Module parse_qir_text(const std::string& text);

}  // namespace qirc::lower
