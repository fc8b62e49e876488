#pragma once

#include <vector>

#include "qirc/ir/module.hpp"
#include "qirc/support/diagnostics.hpp"

namespace qirc::ir {

/// Checks SSA dominance, the op signature table, single-terminator form,
/// call resolution and qalloc/dealloc pairing. A qalloc whose array is
/// never deallocated is a warning ("leak"); everything else is an error.
std::vector<Diagnostic> verify_module(const Module& m);

}  // namespace qirc::ir
