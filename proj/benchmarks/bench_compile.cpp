// Microbenchmarks for the compile phases and the simulator kernels.

#include <benchmark/benchmark.h>

#include <random>
#include <sstream>

#include "qirc/driver.hpp"
#include "qirc/gen/qasm_generator.hpp"
#include "qirc/lower/lowering.hpp"
#include "qirc/lower/qir_text.hpp"
#include "qirc/qasm/parser.hpp"
#include "qirc/rt/gates.hpp"
#include "qirc/rt/statevector.hpp"

namespace {

std::string synthetic_program(int num_gates, int num_qubits = 4) {
    std::ostringstream os;
    os << "OPENQASM 2.0;\nqreg q[" << num_qubits << "];\ncreg c[" << num_qubits << "];\n";
    for (int i = 0; i < num_gates; ++i) {
        const int q = i % num_qubits;
        switch (i % 4) {
            case 0: os << "h q[" << q << "];\n"; break;
            case 1: os << "rx(pi/4) q[" << q << "];\n"; break;
            case 2: os << "cx q[" << q << "],q[" << (q + 1) % num_qubits << "];\n"; break;
            case 3: os << "t q[" << q << "];\n"; break;
        }
    }
    os << "measure q -> c;\n";
    return os.str();
}

qirc::ir::Module quantum_module(const std::string& source) {
    qirc::gen::OpenQasmIrGenerator generator;
    generator.initialize_mlirgen({true, "bench.qasm"});
    generator.mlirgen(source);
    generator.finalize_mlirgen();
    return generator.get_module();
}

void BM_Parse(benchmark::State& state) {
    const std::string source = synthetic_program(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(qirc::qasm::parse_program(source));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Parse)->Arg(100)->Arg(1000)->Arg(10000);

void BM_MlirGen(benchmark::State& state) {
    const std::string source = synthetic_program(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(quantum_module(source));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_MlirGen)->Arg(100)->Arg(1000)->Arg(10000);

void BM_Lower(benchmark::State& state) {
    const auto module = quantum_module(synthetic_program(static_cast<int>(state.range(0))));
    for (auto _ : state) {
        benchmark::DoNotOptimize(qirc::lower::run_lowering(module));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Lower)->Arg(100)->Arg(1000)->Arg(10000);

void BM_EmitLlvmIr(benchmark::State& state) {
    const auto lowered = qirc::lower::run_lowering(
        quantum_module(synthetic_program(static_cast<int>(state.range(0)))));
    for (auto _ : state) {
        benchmark::DoNotOptimize(qirc::lower::emit_llvm_ir(lowered));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_EmitLlvmIr)->Arg(100)->Arg(1000)->Arg(10000);

void BM_FullPipeline(benchmark::State& state) {
    const std::string source = synthetic_program(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            qirc::compile_source(source, "bench.qasm", true, qirc::EmitKind::Llvm));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_FullPipeline)->Arg(100)->Arg(1000)->Arg(10000);

void BM_SingleQubitKernel(benchmark::State& state) {
    qirc::rt::StateVector sv;
    sv.add_qubits(static_cast<int>(state.range(0)));
    const auto h = qirc::rt::single_qubit_matrix("h", {});
    int target = 0;
    for (auto _ : state) {
        sv.apply_single(h, target);
        target = (target + 1) % static_cast<int>(state.range(0));
    }
    state.SetItemsProcessed(state.iterations() * (1ll << state.range(0)));
}
BENCHMARK(BM_SingleQubitKernel)->Arg(10)->Arg(16)->Arg(20);

void BM_CnotKernel(benchmark::State& state) {
    qirc::rt::StateVector sv;
    sv.add_qubits(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        sv.apply_cnot(0, static_cast<int>(state.range(0)) - 1);
    }
    state.SetItemsProcessed(state.iterations() * (1ll << state.range(0)));
}
BENCHMARK(BM_CnotKernel)->Arg(10)->Arg(16)->Arg(20);

}  // namespace

BENCHMARK_MAIN();
