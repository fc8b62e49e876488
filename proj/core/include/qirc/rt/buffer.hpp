#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace qirc::rt {

/// Measurement-result store backing a quantum register: aggregated counts
/// over shots plus the per-shot bitstrings. Bits append in measurement
/// program order, most recent last.
class AcceleratorBuffer {
public:
    AcceleratorBuffer() = default;
    explicit AcceleratorBuffer(int register_size) : register_size_(register_size) {}

    int register_size() const { return register_size_; }
    void set_register_size(int size) { register_size_ = size; }

    void record_bit(int bit) { current_bits_.push_back(bit ? '1' : '0'); }

    /// Folds the bits recorded since the last call into `counts`; shots with
    /// no measurements contribute nothing.
    void end_shot() {
        if (current_bits_.empty()) return;
        ++counts_[current_bits_];
        shot_records_.push_back(current_bits_);
        current_bits_.clear();
    }

    const std::map<std::string, std::int64_t>& counts() const { return counts_; }
    const std::vector<std::string>& shot_records() const { return shot_records_; }

    /// Bitstring of the most recently completed shot ("" if none).
    std::string last_bits() const {
        return shot_records_.empty() ? std::string() : shot_records_.back();
    }

private:
    int register_size_ = 0;
    std::string current_bits_;
    std::map<std::string, std::int64_t> counts_;
    std::vector<std::string> shot_records_;
};

}  // namespace qirc::rt
