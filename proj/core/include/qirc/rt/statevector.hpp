#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

namespace qirc::rt {

using Amplitude = std::complex<double>;

/// Row-major 2x2 unitary.
using Mat2 = std::array<Amplitude, 4>;

/// Dense statevector over the allocated qubits, little-endian: qubit k is
/// bit k of the basis-state index. Starts empty; grows by tensoring |0...0>.
class StateVector {
public:
    StateVector() = default;

    int num_qubits() const { return num_qubits_; }
    const std::vector<Amplitude>& amplitudes() const { return amps_; }

    void add_qubits(int count);

    void apply_single(const Mat2& u, int target);
    void apply_cnot(int control, int target);
    void apply_cz(int a, int b);
    void apply_swap(int a, int b);

    double probability_one(int target) const;

    /// Collapses `target` given a uniform sample in [0,1); renormalizes and
    /// returns the measured bit.
    int measure(int target, double u01);

    double norm() const;

private:
    int num_qubits_ = 0;
    std::vector<Amplitude> amps_;
};

}  // namespace qirc::rt
