#include <doctest.h>

#include <cmath>
#include <random>

#include "helpers.hpp"
#include "qirc/rt/gates.hpp"
#include "qirc/rt/runtime.hpp"
#include "qirc/support/errors.hpp"

using namespace qirc;
using namespace qirc::rt;

namespace {

QirRuntime make_runtime(ExecutionConfig cfg = {}) {
    if (!cfg.seed) cfg.seed = 1234;
    return QirRuntime(cfg);
}

}  // namespace

TEST_CASE("rt_initialize parses the runtime flags") {
    {
        const auto rt = rt_initialize({"-qrt", "nisq", "-shots", "2048", "-qpu", "aer"});
        CHECK(rt.config().mode == ExecutionMode::Nisq);
        CHECK(rt.config().shots == 2048);
        CHECK(rt.config().backend == "aer");
    }
    {
        const auto rt = rt_initialize({});
        CHECK(rt.config().mode == ExecutionMode::Ftqc);
        CHECK(rt.config().shots == 1);
        CHECK(rt.config().backend == "builtin");
    }
    CHECK_THROWS_AS(rt_initialize({"-shots", "0"}), ConfigError);
    CHECK_THROWS_AS(rt_initialize({"-qrt", "warp"}), ConfigError);
    CHECK_THROWS_AS(rt_initialize({"-shots", "many"}), ConfigError);
    CHECK_THROWS_AS(rt_initialize({"-shots"}), ConfigError);
    CHECK_THROWS_AS(rt_initialize({"-qrt", "ftqc", "-shots", "16"}), ConfigError);
    // program-level argv noise is ignored
    CHECK_NOTHROW(rt_initialize({"./a.out", "-qrt", "nisq"}));
}

TEST_CASE("allocation grows the statevector by tensoring") {
    auto rt = make_runtime();
    const auto a = rt.rt_qubit_allocate_array(2);
    CHECK(rt.rt_array_get_element(a, 0) == 0);
    CHECK(rt.rt_array_get_element(a, 1) == 1);
    REQUIRE(rt.state().amplitudes().size() == 4);
    CHECK(rt.state().amplitudes()[0] == Amplitude{1.0, 0.0});

    // second allocation appends fresh ids and triples the index space
    const auto b = rt.rt_qubit_allocate_array(1);
    CHECK(rt.rt_array_get_element(b, 0) == 2);
    REQUIRE(rt.state().amplitudes().size() == 8);
    CHECK(rt.state().amplitudes()[0] == Amplitude{1.0, 0.0});
    CHECK(rt.state().norm() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("allocation edge cases") {
    auto rt = make_runtime();
    CHECK_THROWS_AS(rt.rt_qubit_allocate_array(0), CapacityError);
    CHECK_THROWS_AS(rt.rt_qubit_allocate_array(27), CapacityError);
    ExecutionConfig small;
    small.max_qubits = 3;
    small.seed = 9;
    QirRuntime limited(small);
    limited.rt_qubit_allocate_array(2);
    CHECK_THROWS_AS(limited.rt_qubit_allocate_array(2), CapacityError);
}

TEST_CASE("array element access errors") {
    auto rt = make_runtime();
    const auto a = rt.rt_qubit_allocate_array(2);
    CHECK(rt.rt_array_get_element(a, 1) == 1);
    CHECK_THROWS_AS(rt.rt_array_get_element(a, 2), IndexError);
    CHECK_THROWS_AS(rt.rt_array_get_element(a, -1), IndexError);
    rt.rt_qubit_release_array(a);
    CHECK_THROWS_AS(rt.rt_array_get_element(a, 0), UseAfterRelease);
    CHECK_THROWS_AS(rt.rt_qubit_release_array(a), DoubleRelease);
}

TEST_CASE("hadamard puts one qubit in an even superposition") {
    auto rt = make_runtime();
    rt.rt_qubit_allocate_array(1);
    rt.qis_apply("h", {}, std::vector<QubitId>{0});
    const auto& amps = rt.state().amplitudes();
    const double is2 = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(amps[0] - Amplitude{is2, 0}) < 1e-12);
    CHECK(std::abs(amps[1] - Amplitude{is2, 0}) < 1e-12);
}

TEST_CASE("h then cnot prepares the bell state") {
    auto rt = make_runtime();
    rt.rt_qubit_allocate_array(2);
    rt.qis_apply("h", {}, std::vector<QubitId>{0});
    rt.qis_apply("cnot", {}, std::vector<QubitId>{0, 1});
    const auto& amps = rt.state().amplitudes();
    const double is2 = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(amps[0] - Amplitude{is2, 0}) < 1e-12);
    CHECK(std::abs(amps[1]) < 1e-12);
    CHECK(std::abs(amps[2]) < 1e-12);
    CHECK(std::abs(amps[3] - Amplitude{is2, 0}) < 1e-12);
}

TEST_CASE("u3 equals rz.ry.rz up to global phase") {
    // dense 2x2 product computed independently of the gate table
    const double theta = 1.1, phi = 0.4, lambda = -0.7;
    auto mul = [](const Mat2& a, const Mat2& b) {
        return Mat2{a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
                    a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
    };
    auto rz = [](double t) {
        return Mat2{testutil::expi(-t / 2), 0, 0, testutil::expi(t / 2)};
    };
    auto ry = [](double t) {
        return Mat2{std::cos(t / 2), -std::sin(t / 2), std::sin(t / 2), std::cos(t / 2)};
    };
    const Mat2 product = mul(rz(phi), mul(ry(theta), rz(lambda)));
    const Mat2 u3 = single_qubit_matrix("u3", std::vector<double>{theta, phi, lambda});

    // ratio of any nonzero entries is the global phase
    const Amplitude ratio = product[0] / u3[0];
    CHECK(std::abs(std::abs(ratio) - 1.0) < 1e-12);
    for (int i = 0; i < 4; ++i) {
        CHECK(std::abs(product[static_cast<std::size_t>(i)] -
                       ratio * u3[static_cast<std::size_t>(i)]) < 1e-12);
    }
}

TEST_CASE("unknown gates and arity violations") {
    auto rt = make_runtime();
    rt.rt_qubit_allocate_array(2);
    CHECK_THROWS_AS(rt.qis_apply("warp", {}, std::vector<QubitId>{0}), UnknownGate);
    CHECK_THROWS_AS(rt.qis_apply("h", {}, std::vector<QubitId>{0, 1}), ArityError);
    CHECK_THROWS_AS(rt.qis_apply("rx", {}, std::vector<QubitId>{0}), ArityError);
    CHECK_THROWS_AS(rt.qis_apply("cnot", {}, std::vector<QubitId>{1, 1}), ArityError);
    CHECK_THROWS_AS(rt.qis_apply("h", {}, std::vector<QubitId>{5}), IndexError);
}

TEST_CASE("mz collapses and re-measuring repeats the bit") {
    auto rt = make_runtime();
    rt.rt_qubit_allocate_array(1);
    rt.qis_apply("h", {}, std::vector<QubitId>{0});
    const auto first = rt.qis_apply("mz", {}, std::vector<QubitId>{0});
    REQUIRE(first.has_value());
    for (int i = 0; i < 5; ++i) {
        const auto again = rt.qis_apply("mz", {}, std::vector<QubitId>{0});
        CHECK(*again == *first);
    }
    CHECK(rt.state().norm() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("reset forces |0> regardless of the prior state") {
    auto rt = make_runtime();
    rt.rt_qubit_allocate_array(1);
    rt.qis_apply("x", {}, std::vector<QubitId>{0});
    rt.qis_apply("reset", {}, std::vector<QubitId>{0});
    const auto bit = rt.qis_apply("mz", {}, std::vector<QubitId>{0});
    CHECK(*bit == 0);
}

TEST_CASE("measurements persist to the buffer in program order") {
    auto rt = make_runtime();
    rt.rt_qubit_allocate_array(2);
    rt.qis_apply("x", {}, std::vector<QubitId>{1});
    rt.qis_apply("mz", {}, std::vector<QubitId>{0});
    rt.qis_apply("mz", {}, std::vector<QubitId>{1});
    rt.finish_shot();
    CHECK(rt.buffer().counts().at("01") == 1);  // q0 measured first
    CHECK(rt.buffer().register_size() == 2);
}

TEST_CASE("set_qreg redirects measurement persistence") {
    AcceleratorBuffer caller(2);
    ExecutionConfig cfg;
    cfg.seed = 5;
    QirRuntime rt(cfg);
    rt.rt_set_qreg(caller);
    rt.rt_qubit_allocate_array(2);
    rt.qis_apply("x", {}, std::vector<QubitId>{0});
    rt.qis_apply("mz", {}, std::vector<QubitId>{0});
    rt.finish_shot();
    CHECK(caller.counts().at("1") == 1);
    CHECK(caller.register_size() == 2);  // caller owns the size
}

TEST_CASE("set_qreg protocol violations") {
    AcceleratorBuffer buffer;
    {
        auto rt = make_runtime();
        rt.rt_qubit_allocate_array(1);
        CHECK_THROWS_AS(rt.rt_set_qreg(buffer), StateError);
    }
    {
        auto rt = make_runtime();
        rt.rt_set_qreg(buffer);
        CHECK_THROWS_AS(rt.rt_set_qreg(buffer), StateError);
    }
}

TEST_CASE("self-inverse gates restore the state exactly") {
    std::mt19937_64 rng(5150);
    auto rt = make_runtime();
    rt.rt_qubit_allocate_array(3);
    // scramble into a generic state first
    for (int i = 0; i < 6; ++i) {
        const auto g = testutil::random_gate(rng, 3);
        std::vector<QubitId> qs(g.qubits.begin(), g.qubits.end());
        rt.qis_apply(g.name, g.params, qs);
    }
    const auto before = rt.state().amplitudes();
    const std::vector<std::pair<std::string, std::vector<QubitId>>> pairs = {
        {"h", {0}}, {"x", {1}}, {"cnot", {0, 2}}, {"swap", {1, 2}}, {"cz", {0, 1}},
    };
    for (const auto& [name, qubits] : pairs) {
        rt.qis_apply(name, {}, qubits);
        rt.qis_apply(name, {}, qubits);
        const auto& after = rt.state().amplitudes();
        for (std::size_t i = 0; i < before.size(); ++i) {
            CHECK(std::abs(after[i] - before[i]) < 1e-10);
        }
    }
}

TEST_CASE("strided kernels match the dense-matrix oracle") {
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 5);
        auto rt = make_runtime();
        rt.rt_qubit_allocate_array(n);
        testutil::DenseVector reference(std::size_t{1} << n, {0.0, 0.0});
        reference[0] = {1.0, 0.0};

        const int depth = 1 + static_cast<int>(rng() % 20);
        for (int d = 0; d < depth; ++d) {
            const auto g = testutil::random_gate(rng, n);
            std::vector<QubitId> qs(g.qubits.begin(), g.qubits.end());
            rt.qis_apply(g.name, g.params, qs);
            reference = testutil::oracle_apply(g, reference, n);
        }

        const auto& actual = rt.state().amplitudes();
        REQUIRE(actual.size() == reference.size());
        for (std::size_t i = 0; i < actual.size(); ++i) {
            CHECK(std::abs(actual[i] - reference[i]) < 1e-9);
        }
        CHECK(std::abs(rt.state().norm() - 1.0) < 1e-10);
    }
}

TEST_CASE("rt_finalize reports the single-shot record and releases state") {
    auto rt = make_runtime();  // ftqc default
    rt.rt_qubit_allocate_array(2);
    rt.qis_apply("h", {}, std::vector<QubitId>{0});
    rt.qis_apply("cnot", {}, std::vector<QubitId>{0, 1});
    rt.qis_apply("mz", {}, std::vector<QubitId>{0});
    rt.qis_apply("mz", {}, std::vector<QubitId>{1});
    rt.finish_shot();
    const auto report = rt.rt_finalize();
    CHECK(report.mode == std::string("ftqc"));
    CHECK((report.ftqc_bits == "00" || report.ftqc_bits == "11"));
    CHECK(report.counts.at(report.ftqc_bits) == 1);
    CHECK(rt.state().amplitudes().empty());
}

TEST_CASE("rt_finalize on an empty program yields empty counts") {
    auto rt = make_runtime();
    const auto report = rt.rt_finalize();
    CHECK(report.counts.empty());
    CHECK(report.ftqc_bits.empty());
}

TEST_CASE("report rendering") {
    ExecutionReport report;
    report.backend = "aer";
    report.mode = "nisq";
    report.shots = 2048;
    report.seed = 7;
    report.counts = {{"00", 1025}, {"11", 1023}};
    CHECK(report.counts_text() == "00 : 1025\n11 : 1023\n");
    const std::string json = report.to_json();
    CHECK(json.find("\"backend\": \"aer\"") != std::string::npos);
    CHECK(json.find("\"shots\": 2048") != std::string::npos);
    CHECK(json.find("\"00\": 1025") != std::string::npos);
}
