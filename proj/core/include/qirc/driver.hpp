#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qirc/ir/module.hpp"
#include "qirc/qasm/parser.hpp"
#include "qirc/support/diagnostics.hpp"

namespace qirc {

enum class EmitKind { Mlir, MlirLlvm, Llvm };

struct PhaseTimings {
    double parse_ms = 0.0;
    double mlirgen_ms = 0.0;
    double lower_ms = 0.0;
    double emit_ms = 0.0;
    double total_ms = 0.0;
};

struct CompilationResult {
    ir::Module quantum_module;            // always populated
    std::optional<ir::Module> llvm_module;  // from EmitKind::MlirLlvm on
    std::string qir_text;                 // EmitKind::Llvm only
    PhaseTimings timings;
    std::vector<Diagnostic> warnings;
};

/// Runs parse -> mlirgen -> lowering -> emission, stopping after the stage
/// `emit` selects. `file_name` names the exported function in library mode.
/// Throws CompileError subclasses on any phase failure.
CompilationResult compile_source(const std::string& source, const std::string& file_name,
                                 bool add_entry_point, EmitKind emit,
                                 const qasm::IncludeResolver& resolver = {});

/// Builds an include resolver over a directory search path (first match
/// wins). The QASM_INCLUDE_PATH environment variable appends one more root.
qasm::IncludeResolver make_file_resolver(std::vector<std::string> include_dirs);

struct CompileOptions {
    std::string input_path;
    std::optional<EmitKind> emit;  // explicit -emit=... prints to stdout
    bool no_entrypoint = false;
    std::vector<std::string> include_dirs;
    std::optional<std::string> output_path;
};

struct RunOptions {
    std::string input_path;                 // .qasm or .ll
    std::vector<std::string> runtime_args;  // raw tail: -qrt/-shots/-qpu/-seed
    std::vector<std::string> include_dirs;
    std::optional<std::string> report_json_path;
    std::optional<int> max_qubits;
};

struct BenchOptions {
    std::string corpus_dir;
    int repetitions = 5;
};

/// Exit codes: 0 success, 1 compile error, 2 runtime error.
int cmd_compile(const CompileOptions& opts, std::ostream& out, std::ostream& err);
int cmd_run(const RunOptions& opts, std::ostream& out, std::ostream& err);
int cmd_bench(const BenchOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace qirc
