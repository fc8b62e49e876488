#pragma once

#include <string>

#include "qirc/ir/module.hpp"

namespace qirc::ir {

/// Prints a module in generic op form, one op per line:
///
///   module {
///     func @main(%0: i32, %1: !quantum.Argv) -> i32 {
///       "quantum.init"(%0, %1) : (i32, !quantum.Argv) -> ()
///       ...
///     }
///   }
///
/// SSA names are %N in definition order (arguments first). Modules that
/// contain LLVM-dialect ops print with LLVM-dialect type syntax and list
/// external declarations as `llvm.func` lines. Output is deterministic.
std::string print_module(const Module& m);

}  // namespace qirc::ir
