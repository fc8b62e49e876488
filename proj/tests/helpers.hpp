#pragma once

// Shared test utilities. The dense-matrix machinery here is the independent
// oracle for the statevector kernels: gates are re-defined from their
// textbook matrices, embedded into the full 2^n space by explicit index
// arithmetic, and applied by dense matrix-vector products. None of it
// touches the simulator's strided kernels.

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace testutil {

using Complex = std::complex<double>;
using DenseMatrix = std::vector<std::vector<Complex>>;
using DenseVector = std::vector<Complex>;

inline Complex expi(double phi) { return {std::cos(phi), std::sin(phi)}; }

struct OracleGate {
    std::string name;
    std::vector<double> params;
    std::vector<int> qubits;  // 1 or 2 entries
};

// Textbook 2x2 definitions, independent of the runtime's gate table.
inline std::array<Complex, 4> oracle_single(const std::string& name,
                                            const std::vector<double>& p) {
    const double is2 = 1.0 / std::sqrt(2.0);
    const Complex i{0.0, 1.0};
    if (name == "h") return {is2, is2, is2, -is2};
    if (name == "x") return {0, 1, 1, 0};
    if (name == "y") return {0, -i, i, 0};
    if (name == "z") return {1, 0, 0, -1};
    if (name == "s") return {1, 0, 0, i};
    if (name == "sdg") return {1, 0, 0, -i};
    if (name == "t") return {1, 0, 0, expi(M_PI / 4)};
    if (name == "tdg") return {1, 0, 0, expi(-M_PI / 4)};
    if (name == "id") return {1, 0, 0, 1};
    if (name == "rx") {
        const double c = std::cos(p[0] / 2), s = std::sin(p[0] / 2);
        return {c, -i * s, -i * s, c};
    }
    if (name == "ry") {
        const double c = std::cos(p[0] / 2), s = std::sin(p[0] / 2);
        return {c, -s, s, c};
    }
    if (name == "rz") return {expi(-p[0] / 2), 0, 0, expi(p[0] / 2)};
    if (name == "u1") return {1, 0, 0, expi(p[0])};
    if (name == "u2") {
        return {is2, -is2 * expi(p[1]), is2 * expi(p[0]), is2 * expi(p[0] + p[1])};
    }
    if (name == "u3") {
        const double c = std::cos(p[0] / 2), s = std::sin(p[0] / 2);
        return {c, -expi(p[2]) * s, expi(p[1]) * s, expi(p[1] + p[2]) * c};
    }
    throw std::runtime_error("oracle: unknown single-qubit gate " + name);
}

// 4x4 in the local basis |b1 b0> where b0 is the FIRST gate operand's bit
// (local index = b0 + 2*b1).
inline std::array<std::array<Complex, 4>, 4> oracle_two(const std::string& name) {
    std::array<std::array<Complex, 4>, 4> m{};
    auto set = [&](int r, int c, Complex v) { m[r][c] = v; };
    if (name == "cnot") {
        // operands (control, target): control = b0, target = b1
        set(0, 0, 1);        // |00> -> |00>
        set(2, 2, 1);        // t=1,c=0 fixed
        set(3, 1, 1);        // c=1,t=0 -> c=1,t=1
        set(1, 3, 1);
        return m;
    }
    if (name == "cz") {
        set(0, 0, 1);
        set(1, 1, 1);
        set(2, 2, 1);
        set(3, 3, -1);
        return m;
    }
    if (name == "swap") {
        set(0, 0, 1);
        set(1, 2, 1);
        set(2, 1, 1);
        set(3, 3, 1);
        return m;
    }
    throw std::runtime_error("oracle: unknown two-qubit gate " + name);
}

inline DenseMatrix embed_single(const std::array<Complex, 4>& u, int target, int n) {
    const std::size_t dim = std::size_t{1} << n;
    DenseMatrix m(dim, DenseVector(dim, Complex{0, 0}));
    for (std::size_t row = 0; row < dim; ++row) {
        for (std::size_t col = 0; col < dim; ++col) {
            if ((row & ~(std::size_t{1} << target)) != (col & ~(std::size_t{1} << target))) {
                continue;
            }
            const int rb = static_cast<int>((row >> target) & 1);
            const int cb = static_cast<int>((col >> target) & 1);
            m[row][col] = u[static_cast<std::size_t>(rb * 2 + cb)];
        }
    }
    return m;
}

inline DenseMatrix embed_two(const std::array<std::array<Complex, 4>, 4>& u, int q0, int q1,
                             int n) {
    const std::size_t dim = std::size_t{1} << n;
    const std::size_t mask = (std::size_t{1} << q0) | (std::size_t{1} << q1);
    DenseMatrix m(dim, DenseVector(dim, Complex{0, 0}));
    for (std::size_t row = 0; row < dim; ++row) {
        for (std::size_t col = 0; col < dim; ++col) {
            if ((row & ~mask) != (col & ~mask)) continue;
            const int rl = static_cast<int>(((row >> q0) & 1) + 2 * ((row >> q1) & 1));
            const int cl = static_cast<int>(((col >> q0) & 1) + 2 * ((col >> q1) & 1));
            m[row][col] = u[static_cast<std::size_t>(rl)][static_cast<std::size_t>(cl)];
        }
    }
    return m;
}

inline DenseVector apply_dense(const DenseMatrix& m, const DenseVector& v) {
    DenseVector out(v.size(), Complex{0, 0});
    for (std::size_t r = 0; r < v.size(); ++r) {
        for (std::size_t c = 0; c < v.size(); ++c) {
            out[r] += m[r][c] * v[c];
        }
    }
    return out;
}

inline DenseVector oracle_apply(const OracleGate& g, const DenseVector& state, int n) {
    if (g.qubits.size() == 1) {
        return apply_dense(embed_single(oracle_single(g.name, g.params), g.qubits[0], n), state);
    }
    return apply_dense(embed_two(oracle_two(g.name), g.qubits[0], g.qubits[1], n), state);
}

// ---- random circuits over the unitary gate set -------------------------

inline OracleGate random_gate(std::mt19937_64& rng, int num_qubits) {
    static const std::vector<std::pair<std::string, int>> singles = {
        {"h", 0},  {"x", 0},  {"y", 0},  {"z", 0},  {"s", 0},  {"sdg", 0}, {"t", 0},
        {"tdg", 0}, {"id", 0}, {"rx", 1}, {"ry", 1}, {"rz", 1}, {"u1", 1},  {"u2", 2},
        {"u3", 3},
    };
    static const std::vector<std::string> doubles = {"cnot", "cz", "swap"};

    std::uniform_real_distribution<double> angle(-2.0 * M_PI, 2.0 * M_PI);
    OracleGate g;
    if (num_qubits >= 2 && rng() % 4 == 0) {
        g.name = doubles[rng() % doubles.size()];
        const int a = static_cast<int>(rng() % static_cast<std::uint64_t>(num_qubits));
        int b = static_cast<int>(rng() % static_cast<std::uint64_t>(num_qubits));
        while (b == a) b = static_cast<int>(rng() % static_cast<std::uint64_t>(num_qubits));
        g.qubits = {a, b};
    } else {
        const auto& [name, nparams] = singles[rng() % singles.size()];
        g.name = name;
        for (int i = 0; i < nparams; ++i) g.params.push_back(angle(rng));
        g.qubits = {static_cast<int>(rng() % static_cast<std::uint64_t>(num_qubits))};
    }
    return g;
}

// ---- random OpenQASM programs (valid by construction) ------------------

struct RandomProgramOptions {
    int max_registers = 4;
    int max_register_size = 4;
    int max_gates = 30;
    bool with_measure = true;
};

inline std::string random_program(std::mt19937_64& rng, const RandomProgramOptions& opts = {}) {
    std::ostringstream os;
    os << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";

    const int num_regs = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(opts.max_registers));
    std::vector<std::pair<std::string, int>> regs;
    int total = 0;
    for (int r = 0; r < num_regs; ++r) {
        const std::string name = "q" + std::to_string(r);
        const int size =
            1 + static_cast<int>(rng() % static_cast<std::uint64_t>(opts.max_register_size));
        regs.push_back({name, size});
        total += size;
        os << "qreg " << name << "[" << size << "];\n";
    }
    os << "creg c[" << total << "];\n";

    auto random_target = [&]() {
        const auto& [name, size] = regs[rng() % regs.size()];
        return name + "[" + std::to_string(rng() % static_cast<std::uint64_t>(size)) + "]";
    };
    auto random_pair = [&](std::string& a, std::string& b) {
        do {
            a = random_target();
            b = random_target();
        } while (a == b);
    };

    static const std::vector<std::pair<std::string, int>> singles = {
        {"h", 0}, {"x", 0}, {"y", 0}, {"z", 0}, {"s", 0},  {"sdg", 0}, {"t", 0}, {"tdg", 0},
        {"id", 0}, {"rx", 1}, {"ry", 1}, {"rz", 1}, {"u1", 1}, {"u2", 2}, {"u3", 3},
    };
    std::uniform_real_distribution<double> angle(-3.14, 3.14);

    const int num_gates = static_cast<int>(rng() % static_cast<std::uint64_t>(opts.max_gates + 1));
    for (int g = 0; g < num_gates; ++g) {
        const auto choice = rng() % 10;
        if (choice < 6) {
            const auto& [name, nparams] = singles[rng() % singles.size()];
            os << name;
            if (nparams > 0) {
                os << "(";
                for (int p = 0; p < nparams; ++p) {
                    if (p) os << ",";
                    os << angle(rng);
                }
                os << ")";
            }
            os << " " << random_target() << ";\n";
        } else if (choice < 8 && total >= 2) {
            static const std::vector<std::string> doubles = {"cx", "cz", "swap"};
            std::string a, b;
            random_pair(a, b);
            os << doubles[rng() % doubles.size()] << " " << a << "," << b << ";\n";
        } else if (choice == 8) {
            os << "reset " << random_target() << ";\n";
        } else {
            os << "U(" << angle(rng) << "," << angle(rng) << "," << angle(rng) << ") "
               << random_target() << ";\n";
        }
    }
    if (opts.with_measure) {
        int bit = 0;
        for (const auto& [name, size] : regs) {
            for (int i = 0; i < size; ++i) {
                os << "measure " << name << "[" << i << "] -> c[" << bit++ << "];\n";
            }
        }
    }
    return os.str();
}

/// N single-register gates cycling over a small fixed set (for scaling and
/// bench corpora).
inline std::string synthetic_program(int num_gates, int num_qubits = 4) {
    std::ostringstream os;
    os << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
    os << "qreg q[" << num_qubits << "];\n";
    os << "creg c[" << num_qubits << "];\n";
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

/// |count - expected| <= 5 * sqrt(shots * p * (1-p))
inline bool within_binomial_bound(std::int64_t count, std::int64_t shots, double p) {
    const double expected = static_cast<double>(shots) * p;
    const double sigma = std::sqrt(static_cast<double>(shots) * p * (1.0 - p));
    return std::abs(static_cast<double>(count) - expected) <= 5.0 * sigma;
}

}  // namespace testutil
