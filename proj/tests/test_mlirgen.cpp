#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "qirc/gen/qasm_generator.hpp"
#include "qirc/ir/verifier.hpp"
#include "qirc/qasm/passes.hpp"
#include "qirc/support/errors.hpp"

using namespace qirc;
using namespace qirc::gen;

namespace {

const char* kBellSource =
    "OPENQASM 2.0; qreg q[2]; creg c[2]; h q[0]; cx q[0],q[1]; measure q -> c;";

ir::Module generate(const std::string& source, bool entry_point = true,
                    const std::string& file_name = "test.qasm") {
    OpenQasmIrGenerator gen;
    gen.initialize_mlirgen({entry_point, file_name});
    gen.mlirgen(source);
    gen.finalize_mlirgen();
    return gen.get_module();
}

std::vector<std::string> op_names(const ir::Module& m) {
    std::vector<std::string> names;
    for (const auto& op : m.functions.at(0).body) names.push_back(op.full_name());
    return names;
}

int count_ops(const ir::Module& m, const std::string& full_name) {
    int n = 0;
    for (const auto& op : m.functions.at(0).body) {
        if (op.full_name() == full_name) ++n;
    }
    return n;
}

}  // namespace

TEST_CASE("entry-point mode opens main with quantum.init first") {
    OpenQasmIrGenerator gen;
    gen.initialize_mlirgen({true, ""});
    gen.mlirgen(std::string("OPENQASM 2.0;"));
    gen.finalize_mlirgen();
    const auto& m = gen.get_module();
    REQUIRE(m.functions.size() == 1);
    CHECK(m.functions[0].name == "main");
    REQUIRE_FALSE(m.functions[0].body.empty());
    CHECK(m.functions[0].body[0].full_name() == "quantum.init");
}

TEST_CASE("library mode opens a named function with quantum.set_qreg first") {
    const auto m = generate("OPENQASM 2.0; qreg q[1]; h q[0];", false, "dir/bell.qasm");
    REQUIRE(m.functions.size() == 1);
    const auto& f = m.functions[0];
    CHECK(f.name == "bell");
    REQUIRE(f.arguments.size() == 1);
    CHECK(f.type_of(f.arguments[0]) == ir::IrType::qreg());
    CHECK(f.body[0].full_name() == "quantum.set_qreg");
    CHECK(f.return_type == ir::IrType::none());
}

TEST_CASE("lifecycle misuse raises StateError") {
    OpenQasmIrGenerator gen;
    CHECK_THROWS_AS(gen.mlirgen(std::string("OPENQASM 2.0;")), StateError);
    CHECK_THROWS_AS(gen.finalize_mlirgen(), StateError);
    CHECK_THROWS_AS(gen.get_module(), StateError);
    gen.initialize_mlirgen({true, ""});
    CHECK_THROWS_AS(gen.initialize_mlirgen({true, ""}), StateError);
    CHECK_THROWS_AS(gen.get_module(), StateError);
    gen.mlirgen(std::string("OPENQASM 2.0;"));
    gen.finalize_mlirgen();
    CHECK_THROWS_AS(gen.finalize_mlirgen(), StateError);
    // get_module is idempotent once finalized
    CHECK(&gen.get_module() == &gen.get_module());
}

TEST_CASE("library mode requires a file name") {
    OpenQasmIrGenerator gen;
    CHECK_THROWS_AS(gen.initialize_mlirgen({false, ""}), StateError);
}

TEST_CASE("bell program produces the expected op sequence") {
    const auto names = op_names(generate(kBellSource));
    const std::vector<std::string> expected = {
        "quantum.init",     "quantum.qalloc",  "std.constant", "quantum.qextract",
        "quantum.inst",     "std.constant",    "quantum.qextract", "quantum.inst",
        "quantum.inst",     "quantum.inst",    "quantum.dealloc",  "quantum.finalize",
        "std.return",
    };
    CHECK(names == expected);
}

TEST_CASE("single-h program matches the golden op skeleton") {
    const auto names = op_names(generate("OPENQASM 2.0; qreg q[1]; h q[0];"));
    const std::vector<std::string> expected = {
        "quantum.init",   "quantum.qalloc",   "std.constant", "quantum.qextract",
        "quantum.inst",   "quantum.dealloc",  "quantum.finalize", "std.return",
    };
    CHECK(names == expected);
}

TEST_CASE("parameters evaluate into the inst attribute list") {
    const auto m = generate("OPENQASM 2.0; qreg q[1]; rx(pi/2) q[0];");
    bool found = false;
    for (const auto& op : m.functions[0].body) {
        if (op.full_name() != "quantum.inst") continue;
        const auto& params = std::get<std::vector<double>>(op.attributes.at("params"));
        REQUIRE(params.size() == 1);
        CHECK(params[0] == doctest::Approx(1.5707963267948966).epsilon(1e-16));
        found = true;
    }
    CHECK(found);
}

TEST_CASE("U and CX map to u3 and cx instructions") {
    const auto m = generate("OPENQASM 2.0; qreg q[2]; U(pi/2,0,pi) q[0]; CX q[0],q[1];");
    std::vector<std::string> inst_names;
    for (const auto& op : m.functions[0].body) {
        if (op.full_name() == "quantum.inst") {
            inst_names.push_back(std::get<std::string>(op.attributes.at("name")));
        }
    }
    CHECK(inst_names == std::vector<std::string>{"u3", "cx"});
}

TEST_CASE("qubit extraction is cached per register and index") {
    const auto m = generate("OPENQASM 2.0; qreg q[1]; h q[0]; h q[0]; x q[0];");
    CHECK(count_ops(m, "quantum.qextract") == 1);
    CHECK(count_ops(m, "std.constant") == 1);
    CHECK(count_ops(m, "quantum.inst") == 3);
}

TEST_CASE("op-count law") {
    // #inst == gate statements + measure targets; #qalloc == #qreg decls;
    // #dealloc == #qalloc.
    const auto m = generate(
        "OPENQASM 2.0; qreg a[2]; qreg b[1]; creg c[3];"
        "h a[0]; cx a[0],a[1]; reset b[0]; barrier a;"
        "measure a[0] -> c[0]; measure a[1] -> c[1];");
    CHECK(count_ops(m, "quantum.qalloc") == 2);
    CHECK(count_ops(m, "quantum.dealloc") == 2);
    CHECK(count_ops(m, "quantum.inst") == 3 + 2);  // h, cx, reset + 2 measures
}

TEST_CASE("classical registers emit nothing") {
    const auto m = generate("OPENQASM 2.0; creg c[4];");
    CHECK(count_ops(m, "quantum.qalloc") == 0);
}

TEST_CASE("entry-point emits exactly one init and one finalize") {
    const auto m = generate(kBellSource);
    CHECK(count_ops(m, "quantum.init") == 1);
    CHECK(count_ops(m, "quantum.finalize") == 1);
    CHECK(count_ops(m, "quantum.set_qreg") == 0);
}

TEST_CASE("library mode emits set_qreg and no init or finalize") {
    const auto m = generate(kBellSource, false, "bell.qasm");
    CHECK(count_ops(m, "quantum.set_qreg") == 1);
    CHECK(count_ops(m, "quantum.init") == 0);
    CHECK(count_ops(m, "quantum.finalize") == 0);
}

TEST_CASE("invalid programs propagate frontend diagnostics") {
    OpenQasmIrGenerator gen;
    gen.initialize_mlirgen({true, ""});
    CHECK_THROWS_AS(gen.mlirgen(std::string("OPENQASM 2.0; qreg q[1]; h q[5];")), CompileError);
}

TEST_CASE("generated modules always verify") {
    std::mt19937_64 rng(424242);
    for (int i = 0; i < 100; ++i) {
        const std::string source = testutil::random_program(rng);
        CAPTURE(source);
        const auto m = generate(source);
        const auto diags = ir::verify_module(m);
        CHECK_FALSE(has_errors(diags));
    }
}
