#include "qirc/rt/statevector.hpp"

#include <cmath>

namespace qirc::rt {

void StateVector::add_qubits(int count) {
    if (num_qubits_ == 0 && amps_.empty()) {
        amps_.assign(1, Amplitude{1.0, 0.0});
    }
    // New qubits occupy the high bits and start in |0>, so the existing
    // amplitudes keep their indices.
    amps_.resize(amps_.size() << count, Amplitude{0.0, 0.0});
    num_qubits_ += count;
}

void StateVector::apply_single(const Mat2& u, int target) {
    const std::size_t stride = std::size_t{1} << target;
    const std::size_t n = amps_.size();
    for (std::size_t base = 0; base < n; base += 2 * stride) {
        for (std::size_t k = 0; k < stride; ++k) {
            Amplitude& a0 = amps_[base + k];
            Amplitude& a1 = amps_[base + k + stride];
            const Amplitude x0 = a0;
            const Amplitude x1 = a1;
            a0 = u[0] * x0 + u[1] * x1;
            a1 = u[2] * x0 + u[3] * x1;
        }
    }
}

void StateVector::apply_cnot(int control, int target) {
    const std::size_t cbit = std::size_t{1} << control;
    const std::size_t tbit = std::size_t{1} << target;
    const std::size_t n = amps_.size();
    for (std::size_t i = 0; i < n; ++i) {
        if ((i & cbit) && !(i & tbit)) {
            std::swap(amps_[i], amps_[i | tbit]);
        }
    }
}

void StateVector::apply_cz(int a, int b) {
    const std::size_t abit = std::size_t{1} << a;
    const std::size_t bbit = std::size_t{1} << b;
    const std::size_t n = amps_.size();
    for (std::size_t i = 0; i < n; ++i) {
        if ((i & abit) && (i & bbit)) amps_[i] = -amps_[i];
    }
}

void StateVector::apply_swap(int a, int b) {
    const std::size_t abit = std::size_t{1} << a;
    const std::size_t bbit = std::size_t{1} << b;
    const std::size_t n = amps_.size();
    for (std::size_t i = 0; i < n; ++i) {
        if ((i & abit) && !(i & bbit)) {
            std::swap(amps_[i], amps_[(i & ~abit) | bbit]);
        }
    }
}

double StateVector::probability_one(int target) const {
    const std::size_t tbit = std::size_t{1} << target;
    double p = 0.0;
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        if (i & tbit) p += std::norm(amps_[i]);
    }
    return p;
}

int StateVector::measure(int target, double u01) {
    const double p1 = probability_one(target);
    const int bit = u01 < p1 ? 1 : 0;
    const std::size_t tbit = std::size_t{1} << target;
    const double p = bit ? p1 : 1.0 - p1;
    const double scale = p > 0.0 ? 1.0 / std::sqrt(p) : 0.0;
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        const bool keep = ((i & tbit) != 0) == (bit == 1);
        amps_[i] = keep ? amps_[i] * scale : Amplitude{0.0, 0.0};
    }
    return bit;
}

double StateVector::norm() const {
    double n = 0.0;
    for (const auto& a : amps_) n += std::norm(a);
    return std::sqrt(n);
}

}  // namespace qirc::rt
