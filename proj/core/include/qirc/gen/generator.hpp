#pragma once

#include <string>
#include <vector>

#include "qirc/ir/module.hpp"
#include "qirc/support/diagnostics.hpp"

namespace qirc::gen {

struct GeneratorConfig {
    bool add_entry_point = true;
    /// Names the exported function in library mode (the stem of the source
    /// file); must be nonempty when add_entry_point is false.
    std::string file_name;
};

/// Language-frontend extension point: subclasses parse a source string and
/// emit quantum-dialect ops into the module. Lifecycle is
/// initialize_mlirgen -> mlirgen -> finalize_mlirgen -> get_module; misuse
/// throws StateError.
class QuantumIrGenerator {
public:
    virtual ~QuantumIrGenerator() = default;

    virtual void initialize_mlirgen(const GeneratorConfig& cfg) = 0;
    virtual void mlirgen(const std::string& src) = 0;
    virtual void finalize_mlirgen() = 0;

    /// The finished, verified module. Valid once finalize_mlirgen ran;
    /// repeated calls return the same module.
    const ir::Module& get_module() const;

    /// Non-fatal findings collected while generating (e.g. dropped barriers).
    const std::vector<Diagnostic>& warnings() const { return warnings_; }

protected:
    enum class Phase { Created, Initialized, Generated, Finalized };

    void require_phase(Phase expected, const char* operation) const;

    Phase phase_ = Phase::Created;
    ir::Module module_;
    std::vector<Diagnostic> warnings_;
};

}  // namespace qirc::gen
