// qirc command-line driver: compile OpenQASM 2.0 to QIR-shaped LLVM IR,
// run compiled programs on the built-in statevector runtime, and benchmark
// compile phases over a corpus directory.

#include <iostream>
#include <string>
#include <vector>

#include "qirc/driver.hpp"

namespace {

constexpr const char* kUsage =
    R"(usage:
  qirc compile [options] <file.qasm>      compile to QIR (.ll)
  qirc run [options] <file.qasm|file.ll>  compile if needed, then execute
  qirc bench <dir> [-reps N]              per-phase compile timings as CSV
  qirc <file.qasm> [options]              shorthand for `qirc compile`

compile options:
  -emit=mlir|mlir-llvm|llvm  print the selected representation to stdout
  -no-entrypoint             export a library function instead of @main
  -I <dir>                   add an include search directory (repeatable)
  -o <path>                  output path (default: <input stem>.ll)

run options:
  -qrt nisq|ftqc             runtime mode (default ftqc)
  -shots <n>                 shots per execution (nisq only, default 1)
  -qpu <name>                backend name; unknown names fall back to the
                             built-in statevector simulator with a warning
  -seed <n>                  RNG seed for reproducible sampling
  -I <dir>                   include search directory for .qasm inputs
  --max-qubits <n>           simulator capacity (default 26)
  --report-json <path>       write a JSON execution report
)";

int usage_error(const std::string& message) {
    std::cerr << "error: " << message << "\n" << kUsage;
    return 1;
}

bool take_value(const std::vector<std::string>& args, std::size_t& i, std::string& value) {
    if (i + 1 >= args.size()) return false;
    value = args[++i];
    return true;
}

int run_compile(const std::vector<std::string>& args) {
    qirc::CompileOptions opts;
    for (std::size_t i = 0; i < args.size(); ++i) {
        const std::string& arg = args[i];
        if (arg.rfind("-emit=", 0) == 0) {
            const std::string kind = arg.substr(6);
            if (kind == "mlir") {
                opts.emit = qirc::EmitKind::Mlir;
            } else if (kind == "mlir-llvm") {
                opts.emit = qirc::EmitKind::MlirLlvm;
            } else if (kind == "llvm") {
                opts.emit = qirc::EmitKind::Llvm;
            } else {
                return usage_error("unknown -emit kind '" + kind + "'");
            }
        } else if (arg == "-no-entrypoint") {
            opts.no_entrypoint = true;
        } else if (arg == "-I") {
            std::string dir;
            if (!take_value(args, i, dir)) return usage_error("-I expects a directory");
            opts.include_dirs.push_back(dir);
        } else if (arg.rfind("-I", 0) == 0 && arg.size() > 2) {
            opts.include_dirs.push_back(arg.substr(2));
        } else if (arg == "-o") {
            std::string path;
            if (!take_value(args, i, path)) return usage_error("-o expects a path");
            opts.output_path = path;
        } else if (!arg.empty() && arg[0] == '-') {
            return usage_error("unknown compile flag '" + arg + "'");
        } else if (opts.input_path.empty()) {
            opts.input_path = arg;
        } else {
            return usage_error("multiple input files given");
        }
    }
    if (opts.input_path.empty()) return usage_error("no input file");
    return qirc::cmd_compile(opts, std::cout, std::cerr);
}

int run_run(const std::vector<std::string>& args) {
    qirc::RunOptions opts;
    for (std::size_t i = 0; i < args.size(); ++i) {
        const std::string& arg = args[i];
        if (arg == "-qrt" || arg == "-shots" || arg == "-qpu" || arg == "-seed") {
            std::string value;
            if (!take_value(args, i, value)) return usage_error(arg + " expects a value");
            opts.runtime_args.push_back(arg);
            opts.runtime_args.push_back(value);
        } else if (arg == "-I") {
            std::string dir;
            if (!take_value(args, i, dir)) return usage_error("-I expects a directory");
            opts.include_dirs.push_back(dir);
        } else if (arg == "--report-json") {
            std::string path;
            if (!take_value(args, i, path)) return usage_error("--report-json expects a path");
            opts.report_json_path = path;
        } else if (arg == "--max-qubits") {
            std::string value;
            if (!take_value(args, i, value)) return usage_error("--max-qubits expects a value");
            try {
                opts.max_qubits = std::stoi(value);
            } catch (const std::exception&) {
                return usage_error("--max-qubits expects an integer");
            }
        } else if (!arg.empty() && arg[0] == '-') {
            return usage_error("unknown run flag '" + arg + "'");
        } else if (opts.input_path.empty()) {
            opts.input_path = arg;
        } else {
            return usage_error("multiple input files given");
        }
    }
    if (opts.input_path.empty()) return usage_error("no input file");
    return qirc::cmd_run(opts, std::cout, std::cerr);
}

int run_bench(const std::vector<std::string>& args) {
    qirc::BenchOptions opts;
    for (std::size_t i = 0; i < args.size(); ++i) {
        const std::string& arg = args[i];
        if (arg == "-reps") {
            std::string value;
            if (!take_value(args, i, value)) return usage_error("-reps expects a value");
            try {
                opts.repetitions = std::stoi(value);
            } catch (const std::exception&) {
                return usage_error("-reps expects an integer");
            }
        } else if (!arg.empty() && arg[0] == '-') {
            return usage_error("unknown bench flag '" + arg + "'");
        } else if (opts.corpus_dir.empty()) {
            opts.corpus_dir = arg;
        } else {
            return usage_error("multiple corpus directories given");
        }
    }
    if (opts.corpus_dir.empty()) return usage_error("no corpus directory");
    return qirc::cmd_bench(opts, std::cout, std::cerr);
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    if (args.empty() || args[0] == "-h" || args[0] == "--help" || args[0] == "help") {
        std::cout << kUsage;
        return args.empty() ? 1 : 0;
    }
    const std::string& command = args[0];
    const std::vector<std::string> rest(args.begin() + 1, args.end());
    if (command == "compile") return run_compile(rest);
    if (command == "run") return run_run(rest);
    if (command == "bench") return run_bench(rest);
    // `qirc file.qasm` is shorthand for `qirc compile file.qasm`.
    return run_compile(args);
}
