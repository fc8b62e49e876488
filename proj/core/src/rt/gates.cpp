#include "qirc/rt/gates.hpp"

#include <cmath>
#include <map>

namespace qirc::rt {

namespace {

const std::map<std::string, GateInfo>& gate_table() {
    static const std::map<std::string, GateInfo> table = {
        {"h", {0, 1}},    {"x", {0, 1}},    {"y", {0, 1}},   {"z", {0, 1}},
        {"s", {0, 1}},    {"sdg", {0, 1}},  {"t", {0, 1}},   {"tdg", {0, 1}},
        {"id", {0, 1}},   {"rx", {1, 1}},   {"ry", {1, 1}},  {"rz", {1, 1}},
        {"u1", {1, 1}},   {"u2", {2, 1}},   {"u3", {3, 1}},  {"cnot", {0, 2}},
        {"cz", {0, 2}},   {"swap", {0, 2}}, {"reset", {0, 1}}, {"mz", {0, 1}},
    };
    return table;
}

constexpr Amplitude kI{0.0, 1.0};

Amplitude expi(double phi) { return {std::cos(phi), std::sin(phi)}; }

}  // namespace

std::optional<GateInfo> gate_info(const std::string& name) {
    const auto& table = gate_table();
    auto it = table.find(name);
    if (it == table.end()) return std::nullopt;
    return it->second;
}

Mat2 single_qubit_matrix(const std::string& name, std::span<const double> params) {
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    if (name == "h") {
        return {inv_sqrt2, inv_sqrt2, inv_sqrt2, -inv_sqrt2};
    }
    if (name == "x") {
        return {0.0, 1.0, 1.0, 0.0};
    }
    if (name == "y") {
        return {0.0, -kI, kI, 0.0};
    }
    if (name == "z") {
        return {1.0, 0.0, 0.0, -1.0};
    }
    if (name == "s") {
        return {1.0, 0.0, 0.0, kI};
    }
    if (name == "sdg") {
        return {1.0, 0.0, 0.0, -kI};
    }
    if (name == "t") {
        return {1.0, 0.0, 0.0, expi(M_PI / 4.0)};
    }
    if (name == "tdg") {
        return {1.0, 0.0, 0.0, expi(-M_PI / 4.0)};
    }
    if (name == "id") {
        return {1.0, 0.0, 0.0, 1.0};
    }
    if (name == "rx") {
        const double c = std::cos(params[0] / 2.0);
        const double s = std::sin(params[0] / 2.0);
        return {c, -kI * s, -kI * s, c};
    }
    if (name == "ry") {
        const double c = std::cos(params[0] / 2.0);
        const double s = std::sin(params[0] / 2.0);
        return {c, -s, s, c};
    }
    if (name == "rz") {
        return {expi(-params[0] / 2.0), 0.0, 0.0, expi(params[0] / 2.0)};
    }
    if (name == "u1") {
        return {1.0, 0.0, 0.0, expi(params[0])};
    }
    if (name == "u2") {
        const double phi = params[0];
        const double lambda = params[1];
        return {inv_sqrt2, -inv_sqrt2 * expi(lambda), inv_sqrt2 * expi(phi),
                inv_sqrt2 * expi(phi + lambda)};
    }
    if (name == "u3") {
        const double theta = params[0];
        const double phi = params[1];
        const double lambda = params[2];
        const double c = std::cos(theta / 2.0);
        const double s = std::sin(theta / 2.0);
        return {c, -expi(lambda) * s, expi(phi) * s, expi(phi + lambda) * c};
    }
    return {1.0, 0.0, 0.0, 1.0};
}

}  // namespace qirc::rt
