#include <doctest.h>

#include <random>
#include <sstream>

#include "helpers.hpp"
#include "qirc/gen/qasm_generator.hpp"
#include "qirc/ir/verifier.hpp"
#include "qirc/lower/lowering.hpp"
#include "qirc/lower/qir_abi.hpp"
#include "qirc/lower/qir_text.hpp"
#include "qirc/support/errors.hpp"

using namespace qirc;
using namespace qirc::lower;

namespace {

ir::Module generate(const std::string& source, bool entry_point = true,
                    const std::string& file_name = "test.qasm") {
    gen::OpenQasmIrGenerator generator;
    generator.initialize_mlirgen({entry_point, file_name});
    generator.mlirgen(source);
    generator.finalize_mlirgen();
    return generator.get_module();
}

std::vector<std::string> call_sequence(const ir::Module& m) {
    std::vector<std::string> calls;
    for (const auto& op : m.functions.at(0).body) {
        if (op.full_name() == "llvm.call") {
            calls.push_back(std::get<std::string>(op.attributes.at("callee")));
        }
    }
    return calls;
}

}  // namespace

TEST_CASE("single-h module lowers to the normative body") {
    const auto lowered = run_lowering(generate("OPENQASM 2.0; qreg q[1]; h q[0];"));
    REQUIRE(lowered.functions.size() == 1);
    std::vector<std::string> shape;
    for (const auto& op : lowered.functions[0].body) {
        if (op.full_name() == "llvm.call") {
            shape.push_back("call:" + std::get<std::string>(op.attributes.at("callee")));
        } else {
            shape.push_back(op.full_name());
        }
    }
    const std::vector<std::string> expected = {
        "call:__quantum__rt__initialize",
        "llvm.constant",
        "call:__quantum__rt__qubit_allocate_array",
        "llvm.constant",
        "call:__quantum__rt__array_get_element_ptr_1d",
        "llvm.bitcast",
        "llvm.load",
        "call:__quantum__qis__h",
        "call:__quantum__rt__qubit_release_array",
        "call:__quantum__rt__finalize",
        "llvm.return",
    };
    CHECK(shape == expected);
}

TEST_CASE("empty main lowers to init and finalize with two declares") {
    const auto lowered = run_lowering(generate("OPENQASM 2.0;"));
    CHECK(call_sequence(lowered) ==
          std::vector<std::string>{kInitialize, kFinalize});
    REQUIRE(lowered.externals.size() == 2);
    CHECK(lowered.externals[0].name == kInitialize);
    CHECK(lowered.externals[1].name == kFinalize);
}

TEST_CASE("bell module declares exactly the eight runtime functions") {
    const auto lowered = run_lowering(generate(
        "OPENQASM 2.0; qreg q[2]; creg c[2]; h q[0]; cx q[0],q[1]; measure q -> c;"));
    // Counted by applying the lowering table to the bell op sequence:
    // initialize, allocate, get_element_ptr, h, cnot, mz, release, finalize.
    REQUIRE(lowered.externals.size() == 8);
    std::vector<std::string> names;
    for (const auto& e : lowered.externals) names.push_back(e.name);
    const std::vector<std::string> expected = {
        kInitialize,
        kAllocateArray,
        kGetElementPtr,
        "__quantum__qis__h",
        "__quantum__qis__cnot",
        "__quantum__qis__mz",
        kReleaseArray,
        kFinalize,
    };
    CHECK(names == expected);
}

TEST_CASE("declarations are unique regardless of call count") {
    const auto lowered =
        run_lowering(generate("OPENQASM 2.0; qreg q[3]; h q; h q[0]; h q[1];"));
    int h_decls = 0;
    for (const auto& e : lowered.externals) {
        if (e.name == "__quantum__qis__h") ++h_decls;
    }
    CHECK(h_decls == 1);
    int h_calls = 0;
    for (const auto& callee : call_sequence(lowered)) {
        if (callee == "__quantum__qis__h") ++h_calls;
    }
    CHECK(h_calls == 5);
}

TEST_CASE("cx canonicalizes to cnot; parameters become leading doubles") {
    const auto lowered = run_lowering(
        generate("OPENQASM 2.0; qreg q[2]; cx q[0],q[1]; rx(pi/2) q[0];"));
    const ir::ExternalDecl* cnot = lowered.find_external("__quantum__qis__cnot");
    REQUIRE(cnot != nullptr);
    CHECK(cnot->params ==
          std::vector<ir::IrType>{ir::IrType::qubit().ptr(), ir::IrType::qubit().ptr()});
    const ir::ExternalDecl* rx = lowered.find_external("__quantum__qis__rx");
    REQUIRE(rx != nullptr);
    REQUIRE(rx->params.size() == 2);
    CHECK(rx->params[0] == ir::IrType::f64());
    CHECK(rx->params[1] == ir::IrType::qubit().ptr());
}

TEST_CASE("measurement lowers to a Result-returning call") {
    const auto lowered = run_lowering(
        generate("OPENQASM 2.0; qreg q[1]; creg c[1]; measure q[0] -> c[0];"));
    const ir::ExternalDecl* mz = lowered.find_external("__quantum__qis__mz");
    REQUIRE(mz != nullptr);
    CHECK(mz->result == ir::IrType::result().ptr());
}

TEST_CASE("set_qreg lowers in library mode") {
    const auto lowered = run_lowering(
        generate("OPENQASM 2.0; qreg q[1]; h q[0];", false, "bell.qasm"));
    CHECK(call_sequence(lowered)[0] == kSetQreg);
    const auto& f = lowered.functions[0];
    CHECK(f.type_of(f.arguments[0]) == ir::IrType::qreg().ptr());
}

TEST_CASE("legality: no quantum op survives lowering") {
    std::mt19937_64 rng(777);
    for (int i = 0; i < 100; ++i) {
        const std::string source = testutil::random_program(rng);
        CAPTURE(source);
        const auto lowered = run_lowering(generate(source));
        CHECK_FALSE(lowered.has_dialect("quantum"));
        CHECK_FALSE(lowered.has_dialect("std"));
    }
}

TEST_CASE("lowered modules verify cleanly") {
    std::mt19937_64 rng(778);
    for (int i = 0; i < 50; ++i) {
        const std::string source = testutil::random_program(rng);
        CAPTURE(source);
        const auto diags = ir::verify_module(run_lowering(generate(source)));
        CHECK_FALSE(has_errors(diags));
    }
    const auto library = run_lowering(
        generate("OPENQASM 2.0; qreg q[1]; h q[0];", false, "lib.qasm"));
    CHECK_FALSE(has_errors(ir::verify_module(library)));
}

TEST_CASE("qis call order preserves the inst order") {
    const std::string source =
        "OPENQASM 2.0; qreg q[2]; creg c[2];"
        "x q[0]; h q[1]; cx q[0],q[1]; t q[0]; measure q -> c;";
    const auto quantum = generate(source);
    std::vector<std::string> inst_names;
    for (const auto& op : quantum.functions[0].body) {
        if (op.full_name() == "quantum.inst") {
            inst_names.push_back(
                canonical_gate_name(std::get<std::string>(op.attributes.at("name"))));
        }
    }
    std::vector<std::string> qis_calls;
    for (const auto& callee : call_sequence(run_lowering(quantum))) {
        if (callee.rfind(kQisPrefix, 0) == 0) {
            qis_calls.push_back(callee.substr(std::string(kQisPrefix).size()));
        }
    }
    CHECK(qis_calls == inst_names);
}

TEST_CASE("unknown quantum ops raise LoweringError") {
    ir::Module m = generate("OPENQASM 2.0;");
    ir::Op bogus;
    bogus.dialect = "quantum";
    bogus.name = "frobnicate";
    m.functions[0].body.insert(m.functions[0].body.begin(), bogus);
    CHECK_THROWS_AS(run_lowering(m), LoweringError);
}

TEST_CASE("removing one gate changes only its call line") {
    // bell with and without the leading h: extraction order is identical and
    // h has no results, so the unified diff is exactly one line.
    const std::string with_h =
        "OPENQASM 2.0; qreg q[2]; creg c[2]; h q[0]; cx q[0],q[1]; measure q -> c;";
    const std::string without_h =
        "OPENQASM 2.0; qreg q[2]; creg c[2]; cx q[0],q[1]; measure q -> c;";
    const std::string text_a = emit_llvm_ir(run_lowering(generate(with_h)));
    const std::string text_b = emit_llvm_ir(run_lowering(generate(without_h)));

    std::vector<std::string> lines_a, lines_b;
    std::istringstream sa(text_a), sb(text_b);
    for (std::string line; std::getline(sa, line);) lines_a.push_back(line);
    for (std::string line; std::getline(sb, line);) lines_b.push_back(line);

    // every line of b appears in a, in order, with exactly two missing from
    // a: the h declare and the h call
    std::vector<std::string> removed;
    std::size_t ib = 0;
    for (const auto& line : lines_a) {
        if (ib < lines_b.size() && lines_b[ib] == line) {
            ++ib;
        } else {
            removed.push_back(line);
        }
    }
    CHECK(ib == lines_b.size());
    REQUIRE(removed.size() == 2);
    CHECK(removed[0] == "declare void @__quantum__qis__h(%Qubit*)");
    CHECK(removed[1] == "  call void @__quantum__qis__h(%Qubit* %6)");
}
