#pragma once

#include <string>
#include <vector>

#include "qirc/ir/module.hpp"
#include "qirc/rt/runtime.hpp"
#include "qirc/support/diagnostics.hpp"

namespace qirc::rt {

/// Executes a lowered (llvm-dialect) module against the runtime. The entry
/// function is @main when present, otherwise the module's single exported
/// function (library form, one qreg* argument). In nisq mode the whole op
/// sequence re-executes once per shot with an independently derived RNG
/// stream; ftqc runs once.
///
/// `caller_buffer`, when given, is bound to the qreg argument of a library
/// function so its measurement results persist there. Without one, a
/// library module falls back to an internal buffer and a warning lands in
/// `warnings`.
ExecutionReport interpret(const ir::Module& module, const ExecutionConfig& cfg,
                          AcceleratorBuffer* caller_buffer = nullptr,
                          std::vector<Diagnostic>* warnings = nullptr);

/// Parses `.ll` text first, then interprets it.
ExecutionReport interpret_text(const std::string& qir_text, const ExecutionConfig& cfg,
                               AcceleratorBuffer* caller_buffer = nullptr,
                               std::vector<Diagnostic>* warnings = nullptr);

}  // namespace qirc::rt
