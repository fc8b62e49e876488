#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "qirc/rt/buffer.hpp"
#include "qirc/rt/config.hpp"
#include "qirc/rt/statevector.hpp"

namespace qirc::rt {

/// Dense index into the global allocation space; never reused within one
/// execution.
using QubitId = std::uint64_t;

struct ArrayHandle {
    int id = -1;

    bool valid() const { return id >= 0; }
    bool operator==(const ArrayHandle&) const = default;
};

struct ExecutionReport {
    std::string backend;
    std::string mode;
    std::int64_t shots = 1;
    std::uint64_t seed = 0;
    std::map<std::string, std::int64_t> counts;
    std::string ftqc_bits;  // single-shot bit record (ftqc mode)
    double wall_ms = 0.0;

    /// One "BITSTRING : COUNT" line per outcome, lexicographic order.
    std::string counts_text() const;
    std::string to_json() const;
};

/// One execution's worth of QIR runtime state: qubit arrays, the live
/// statevector, the measurement buffer, and a deterministic RNG stream.
/// Single-threaded; create one per execution (or per shot).
class QirRuntime {
public:
    explicit QirRuntime(ExecutionConfig cfg, AcceleratorBuffer* external_buffer = nullptr);

    /// Seeds this state's RNG stream for shot `shot_index` (counter-mode
    /// derivation from the base seed, so shots are independently
    /// reproducible).
    void begin_shot(std::uint64_t shot_index);

    ArrayHandle rt_qubit_allocate_array(std::int64_t size);
    QubitId rt_array_get_element(ArrayHandle array, std::int64_t index);
    void rt_qubit_release_array(ArrayHandle array);
    void rt_set_qreg(AcceleratorBuffer& buffer);

    /// Executes one instruction; `mz` returns the measured bit.
    std::optional<int> qis_apply(const std::string& name, std::span<const double> params,
                                 std::span<const QubitId> qubits);

    void finish_shot() { buffer().end_shot(); }

    /// Aggregated report over everything this state's buffer collected
    /// (counts in nisq mode, the single-shot record in ftqc mode), then
    /// releases the statevector and all arrays.
    ExecutionReport rt_finalize();

    const ExecutionConfig& config() const { return cfg_; }
    const StateVector& state() const { return state_; }
    AcceleratorBuffer& buffer() { return external_buffer_ ? *external_buffer_ : own_buffer_; }
    bool qreg_was_set() const { return qreg_set_; }

private:
    struct Array {
        std::vector<QubitId> qubits;
        bool released = false;
    };

    double uniform01();
    int measure_qubit(QubitId qubit);

    ExecutionConfig cfg_;
    StateVector state_;
    std::vector<Array> arrays_;
    std::uint64_t next_qubit_ = 0;
    AcceleratorBuffer own_buffer_;
    AcceleratorBuffer* external_buffer_ = nullptr;
    bool qreg_set_ = false;
    std::mt19937_64 rng_;
};

/// Parses `-qrt`/`-shots`/`-qpu`/`-seed` from `args` and returns a fresh
/// runtime over an empty state.
QirRuntime rt_initialize(const std::vector<std::string>& args);

}  // namespace qirc::rt
