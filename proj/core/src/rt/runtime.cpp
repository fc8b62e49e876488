#include "qirc/rt/runtime.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

#include "qirc/rt/gates.hpp"
#include "qirc/support/errors.hpp"

namespace qirc::rt {

namespace {

// splitmix64: the per-shot seed derivation. Documented in the README.
std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

}  // namespace

std::string ExecutionReport::counts_text() const {
    std::ostringstream os;
    for (const auto& [bits, count] : counts) {
        os << bits << " : " << count << "\n";
    }
    return os.str();
}

std::string ExecutionReport::to_json() const {
    nlohmann::json j;
    j["backend"] = backend;
    j["mode"] = mode;
    j["shots"] = shots;
    j["seed"] = seed;
    j["counts"] = counts;
    j["wall_ms"] = wall_ms;
    return j.dump(2);
}

QirRuntime::QirRuntime(ExecutionConfig cfg, AcceleratorBuffer* external_buffer)
    : cfg_(std::move(cfg)), external_buffer_(external_buffer) {
    begin_shot(0);
}

void QirRuntime::begin_shot(std::uint64_t shot_index) {
    const std::uint64_t base = cfg_.seed.value_or(0);
    rng_.seed(splitmix64(base + 0x632be59bd9b4e019ull * (shot_index + 1)));
}

double QirRuntime::uniform01() {
    return static_cast<double>(rng_() >> 11) * 0x1.0p-53;
}

ArrayHandle QirRuntime::rt_qubit_allocate_array(std::int64_t size) {
    if (size < 1) {
        throw CapacityError("qubit array size must be at least 1");
    }
    if (next_qubit_ + static_cast<std::uint64_t>(size) >
        static_cast<std::uint64_t>(cfg_.max_qubits)) {
        throw CapacityError("allocation of " + std::to_string(size) +
                            " qubit(s) exceeds the configured maximum of " +
                            std::to_string(cfg_.max_qubits));
    }
    Array array;
    array.qubits.reserve(static_cast<std::size_t>(size));
    for (std::int64_t i = 0; i < size; ++i) {
        array.qubits.push_back(next_qubit_++);
    }
    state_.add_qubits(static_cast<int>(size));
    if (!qreg_set_) {
        // A caller-provided qreg (set_qreg) owns its register size.
        buffer().set_register_size(static_cast<int>(next_qubit_));
    }
    arrays_.push_back(std::move(array));
    return ArrayHandle{static_cast<int>(arrays_.size()) - 1};
}

QubitId QirRuntime::rt_array_get_element(ArrayHandle array, std::int64_t index) {
    if (!array.valid() || array.id >= static_cast<int>(arrays_.size())) {
        throw IndexError("invalid qubit array handle");
    }
    const Array& a = arrays_[static_cast<std::size_t>(array.id)];
    if (a.released) {
        throw UseAfterRelease("qubit array was already released");
    }
    if (index < 0 || index >= static_cast<std::int64_t>(a.qubits.size())) {
        throw IndexError("qubit index " + std::to_string(index) +
                         " is out of range for an array of size " +
                         std::to_string(a.qubits.size()));
    }
    return a.qubits[static_cast<std::size_t>(index)];
}

void QirRuntime::rt_qubit_release_array(ArrayHandle array) {
    if (!array.valid() || array.id >= static_cast<int>(arrays_.size())) {
        throw IndexError("invalid qubit array handle");
    }
    Array& a = arrays_[static_cast<std::size_t>(array.id)];
    if (a.released) {
        throw DoubleRelease("qubit array was already released");
    }
    a.released = true;
    // The statevector is retained until the end of the execution; ids are
    // never reused.
}

void QirRuntime::rt_set_qreg(AcceleratorBuffer& buffer) {
    if (next_qubit_ != 0) {
        throw StateError("set_qreg must run before any qubit allocation");
    }
    if (qreg_set_) {
        throw StateError("set_qreg was already called");
    }
    external_buffer_ = &buffer;
    qreg_set_ = true;
}

int QirRuntime::measure_qubit(QubitId qubit) {
    return state_.measure(static_cast<int>(qubit), uniform01());
}

std::optional<int> QirRuntime::qis_apply(const std::string& name,
                                         std::span<const double> params,
                                         std::span<const QubitId> qubits) {
    const auto info = gate_info(name);
    if (!info) {
        throw UnknownGate("unknown quantum instruction '" + name + "'");
    }
    if (static_cast<int>(params.size()) != info->num_params) {
        throw ArityError("instruction '" + name + "' expects " +
                         std::to_string(info->num_params) + " parameter(s), got " +
                         std::to_string(params.size()));
    }
    if (static_cast<int>(qubits.size()) != info->num_qubits) {
        throw ArityError("instruction '" + name + "' expects " +
                         std::to_string(info->num_qubits) + " qubit(s), got " +
                         std::to_string(qubits.size()));
    }
    for (const auto q : qubits) {
        if (q >= next_qubit_) {
            throw IndexError("qubit id " + std::to_string(q) + " was never allocated");
        }
    }
    if (qubits.size() == 2 && qubits[0] == qubits[1]) {
        throw ArityError("instruction '" + name + "' requires distinct qubits");
    }

    if (name == "mz") {
        const int bit = measure_qubit(qubits[0]);
        buffer().record_bit(bit);
        return bit;
    }
    if (name == "reset") {
        if (measure_qubit(qubits[0]) == 1) {
            state_.apply_single(single_qubit_matrix("x", {}), static_cast<int>(qubits[0]));
        }
        return std::nullopt;
    }
    if (name == "cnot") {
        state_.apply_cnot(static_cast<int>(qubits[0]), static_cast<int>(qubits[1]));
        return std::nullopt;
    }
    if (name == "cz") {
        state_.apply_cz(static_cast<int>(qubits[0]), static_cast<int>(qubits[1]));
        return std::nullopt;
    }
    if (name == "swap") {
        state_.apply_swap(static_cast<int>(qubits[0]), static_cast<int>(qubits[1]));
        return std::nullopt;
    }
    state_.apply_single(single_qubit_matrix(name, params), static_cast<int>(qubits[0]));
    return std::nullopt;
}

ExecutionReport QirRuntime::rt_finalize() {
    ExecutionReport report;
    report.backend = cfg_.backend;
    report.mode = cfg_.mode_name();
    report.shots = cfg_.mode == ExecutionMode::Nisq ? cfg_.shots : 1;
    report.seed = cfg_.seed.value_or(0);
    report.counts = buffer().counts();
    if (cfg_.mode == ExecutionMode::Ftqc) {
        report.ftqc_bits = buffer().last_bits();
    }
    arrays_.clear();
    state_ = StateVector();
    next_qubit_ = 0;
    return report;
}

QirRuntime rt_initialize(const std::vector<std::string>& args) {
    return QirRuntime(parse_runtime_args(args));
}

}  // namespace qirc::rt
