#include "qirc/driver.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qirc/gen/qasm_generator.hpp"
#include "qirc/ir/printer.hpp"
#include "qirc/lower/lowering.hpp"
#include "qirc/lower/qir_text.hpp"
#include "qirc/qasm/passes.hpp"
#include "qirc/rt/interpreter.hpp"
#include "qirc/support/errors.hpp"

namespace qirc {

namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw CompileError("cannot open '" + path + "'");
    }
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw CompileError("cannot write '" + path + "'");
    }
    out << text;
}

std::string default_output_path(const std::string& input_path) {
    fs::path p(input_path);
    p.replace_extension(".ll");
    return p.string();
}

void print_warnings(const std::vector<Diagnostic>& warnings, const std::string& file,
                    std::ostream& err) {
    if (!warnings.empty()) {
        err << format_diagnostics(warnings, file);
    }
}

}  // namespace

qasm::IncludeResolver make_file_resolver(std::vector<std::string> include_dirs) {
    if (const char* env = std::getenv("QASM_INCLUDE_PATH"); env && *env) {
        include_dirs.emplace_back(env);
    }
    return [dirs = std::move(include_dirs)](const std::string& name)
               -> std::optional<std::string> {
        for (const auto& dir : dirs) {
            const fs::path candidate = fs::path(dir) / name;
            std::ifstream in(candidate, std::ios::binary);
            if (in) {
                std::ostringstream os;
                os << in.rdbuf();
                return os.str();
            }
        }
        return std::nullopt;
    };
}

CompilationResult compile_source(const std::string& source, const std::string& file_name,
                                 bool add_entry_point, EmitKind emit,
                                 const qasm::IncludeResolver& resolver) {
    CompilationResult result;
    const auto total_start = Clock::now();

    auto start = Clock::now();
    qasm::Program program = qasm::parse_program(source, resolver);
    auto diags = qasm::validate(program);
    for (const auto& d : diags) {
        if (d.severity == Severity::Warning) result.warnings.push_back(d);
    }
    if (has_errors(diags)) {
        std::string msg = "invalid program:";
        for (const auto& d : diags) {
            if (d.severity == Severity::Error) msg += "\n  " + d.str();
        }
        throw CompileError(msg);
    }
    result.timings.parse_ms = ms_since(start);

    start = Clock::now();
    gen::OpenQasmIrGenerator generator;
    generator.initialize_mlirgen({add_entry_point, file_name});
    generator.mlirgen(program);
    generator.finalize_mlirgen();
    result.quantum_module = generator.get_module();
    result.timings.mlirgen_ms = ms_since(start);

    if (emit != EmitKind::Mlir) {
        start = Clock::now();
        result.llvm_module = lower::run_lowering(result.quantum_module);
        result.timings.lower_ms = ms_since(start);
    }

    if (emit == EmitKind::Llvm) {
        start = Clock::now();
        result.qir_text = lower::emit_llvm_ir(*result.llvm_module);
        result.timings.emit_ms = ms_since(start);
    }

    result.timings.total_ms = ms_since(total_start);
    return result;
}

int cmd_compile(const CompileOptions& opts, std::ostream& out, std::ostream& err) {
    try {
        const std::string source = read_file(opts.input_path);
        const EmitKind stage = opts.emit.value_or(EmitKind::Llvm);
        const auto resolver = make_file_resolver(opts.include_dirs);
        const auto result = compile_source(source, opts.input_path, !opts.no_entrypoint, stage,
                                           resolver);
        print_warnings(result.warnings, opts.input_path, err);

        std::string text;
        switch (stage) {
            case EmitKind::Mlir: text = ir::print_module(result.quantum_module); break;
            case EmitKind::MlirLlvm: text = ir::print_module(*result.llvm_module); break;
            case EmitKind::Llvm: text = result.qir_text; break;
        }

        if (opts.output_path) {
            write_file(*opts.output_path, text);
        } else if (opts.emit.has_value()) {
            out << text;  // explicit -emit=... prints to standard out
        } else {
            write_file(default_output_path(opts.input_path), text);
        }
        return 0;
    } catch (const CompileError& e) {
        err << opts.input_path << ":";
        if (e.line() > 0) err << e.line() << ":" << e.column() << ":";
        err << " error: " << e.what() << "\n";
        return 1;
    } catch (const StateError& e) {
        err << opts.input_path << ": error: " << e.what() << "\n";
        return 1;
    }
}

int cmd_run(const RunOptions& opts, std::ostream& out, std::ostream& err) {
    ir::Module module;
    const bool is_qasm = fs::path(opts.input_path).extension() == ".qasm";
    try {
        if (is_qasm) {
            const std::string source = read_file(opts.input_path);
            auto result = compile_source(source, opts.input_path, /*add_entry_point=*/true,
                                         EmitKind::Llvm, make_file_resolver(opts.include_dirs));
            print_warnings(result.warnings, opts.input_path, err);
            module = std::move(*result.llvm_module);
        } else {
            module = lower::parse_qir_text(read_file(opts.input_path));
        }
    } catch (const CompileError& e) {
        err << opts.input_path << ":";
        if (e.line() > 0) err << e.line() << ":" << e.column() << ":";
        err << " error: " << e.what() << "\n";
        return 1;
    }

    try {
        rt::ExecutionConfig cfg = rt::parse_runtime_args(opts.runtime_args);
        if (opts.max_qubits) cfg.max_qubits = *opts.max_qubits;
        if (!rt::is_builtin_backend(cfg.backend)) {
            err << "warning: backend '" << cfg.backend
                << "' is not available; using the built-in statevector simulator\n";
        }

        std::vector<Diagnostic> warnings;
        const auto report = rt::interpret(module, cfg, nullptr, &warnings);
        print_warnings(warnings, opts.input_path, err);

        out << report.counts_text();
        if (opts.report_json_path) {
            write_file(*opts.report_json_path, report.to_json() + "\n");
        }
        return 0;
    } catch (const ExecutionError& e) {
        err << opts.input_path << ": runtime error: " << e.what() << "\n";
        return 2;
    } catch (const StateError& e) {
        err << opts.input_path << ": runtime error: " << e.what() << "\n";
        return 2;
    } catch (const CompileError& e) {
        err << opts.input_path << ": error: " << e.what() << "\n";
        return 1;
    }
}

int cmd_bench(const BenchOptions& opts, std::ostream& out, std::ostream& err) {
    out << "file,parse_ms,mlirgen_ms,lower_ms,emit_ms,total_ms\n";
    std::vector<fs::path> files;
    std::error_code ec;
    for (const auto& entry : fs::directory_iterator(opts.corpus_dir, ec)) {
        if (entry.path().extension() == ".qasm") files.push_back(entry.path());
    }
    if (ec) {
        err << "error: cannot read corpus directory '" << opts.corpus_dir << "'\n";
        return 1;
    }
    std::sort(files.begin(), files.end());

    const int reps = std::max(1, opts.repetitions);
    for (const auto& file : files) {
        std::string source;
        std::vector<PhaseTimings> timings;
        bool failed = false;
        try {
            source = read_file(file.string());
            for (int r = 0; r < reps; ++r) {
                timings.push_back(
                    compile_source(source, file.string(), true, EmitKind::Llvm).timings);
            }
        } catch (const std::exception& e) {
            err << "warning: skipping '" << file.string() << "': " << e.what() << "\n";
            failed = true;
        }
        if (failed) {
            out << file.filename().string() << ",,,,,\n";
            continue;
        }
        auto median = [&](auto member) {
            std::vector<double> values;
            values.reserve(timings.size());
            for (const auto& t : timings) values.push_back(t.*member);
            std::sort(values.begin(), values.end());
            return values[values.size() / 2];
        };
        char row[256];
        std::snprintf(row, sizeof(row), "%s,%.3f,%.3f,%.3f,%.3f,%.3f\n",
                      file.filename().string().c_str(), median(&PhaseTimings::parse_ms),
                      median(&PhaseTimings::mlirgen_ms), median(&PhaseTimings::lower_ms),
                      median(&PhaseTimings::emit_ms), median(&PhaseTimings::total_ms));
        out << row;
    }
    return 0;
}

}  // namespace qirc
