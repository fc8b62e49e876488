#include "qirc/rt/interpreter.hpp"

#include <chrono>
#include <random>
#include <variant>

#include "qirc/lower/qir_abi.hpp"
#include "qirc/lower/qir_text.hpp"
#include "qirc/support/errors.hpp"

namespace qirc::rt {

namespace {

// A value flowing through interpretation. ElementPtr models the i8* result
// of array_get_element_ptr_1d until the bitcast/load chain resolves it.
struct ElementPtr {
    ArrayHandle array;
    std::int64_t index = 0;
};

struct BufferRef {
    AcceleratorBuffer* buffer = nullptr;
};

using RtValue = std::variant<std::monostate, std::int64_t, double, ArrayHandle, ElementPtr,
                             QubitId, int, BufferRef>;

class Executor {
public:
    Executor(const ir::Function& fn, QirRuntime& rt, AcceleratorBuffer* qreg_arg)
        : fn_(fn), rt_(rt) {
        env_.assign(static_cast<std::size_t>(fn.num_values()), std::monostate{});
        // Entry-point arguments (argc/argv) stay opaque; a library function
        // receives the qreg to persist into.
        if (qreg_arg && fn.arguments.size() == 1) {
            env_[static_cast<std::size_t>(fn.arguments[0].id)] = BufferRef{qreg_arg};
        }
    }

    void run() {
        for (std::size_t i = 0; i < fn_.body.size(); ++i) {
            try {
                step(fn_.body[i]);
            } catch (const ExecutionError&) {
                throw;
            } catch (const StateError&) {
                throw;
            } catch (const std::exception& e) {
                throw ExecutionError(where(i) + ": " + e.what());
            }
        }
    }

private:
    const ir::Function& fn_;
    QirRuntime& rt_;
    std::vector<RtValue> env_;

    std::string where(std::size_t index) const {
        return "op #" + std::to_string(index) + " ('" + fn_.body[index].full_name() + "') in @" +
               fn_.name;
    }

    template <typename T>
    T get(ir::Value v) const {
        const auto* p = std::get_if<T>(&env_.at(static_cast<std::size_t>(v.id)));
        if (!p) throw ExecutionError("operand %" + std::to_string(v.id) + " has the wrong kind");
        return *p;
    }

    void set(ir::Value v, RtValue value) { env_.at(static_cast<std::size_t>(v.id)) = value; }

    void step(const ir::Op& op) {
        if (op.dialect != "llvm") {
            throw ExecutionError("cannot interpret op '" + op.full_name() + "'");
        }
        if (op.name == "constant") {
            const auto& value = op.attributes.at("value");
            if (const auto* i = std::get_if<std::int64_t>(&value)) {
                set(op.results[0], *i);
            } else {
                set(op.results[0], std::get<double>(value));
            }
            return;
        }
        if (op.name == "bitcast" || op.name == "load") {
            // The get-element-ptr chain: both steps forward the element
            // reference; load resolves it to the qubit id.
            const RtValue& in = env_.at(static_cast<std::size_t>(op.operands[0].id));
            if (op.name == "load") {
                const auto* ep = std::get_if<ElementPtr>(&in);
                if (!ep) throw ExecutionError("load expects an element pointer");
                set(op.results[0], rt_.rt_array_get_element(ep->array, ep->index));
            } else {
                set(op.results[0], in);
            }
            return;
        }
        if (op.name == "return") {
            return;
        }
        if (op.name == "call") {
            dispatch_call(op);
            return;
        }
        throw ExecutionError("cannot interpret llvm op '" + op.name + "'");
    }

    void dispatch_call(const ir::Op& op) {
        const auto& callee = std::get<std::string>(op.attributes.at("callee"));

        if (callee == lower::kInitialize) {
            // Configuration was parsed up front; the call marks the start of
            // the runtime's lifetime.
            return;
        }
        if (callee == lower::kFinalize) {
            return;  // report assembly happens after the shot loop
        }
        if (callee == lower::kAllocateArray) {
            set(op.results[0], rt_.rt_qubit_allocate_array(get<std::int64_t>(op.operands[0])));
            return;
        }
        if (callee == lower::kGetElementPtr) {
            set(op.results[0], ElementPtr{get<ArrayHandle>(op.operands[0]),
                                          get<std::int64_t>(op.operands[1])});
            return;
        }
        if (callee == lower::kReleaseArray) {
            rt_.rt_qubit_release_array(get<ArrayHandle>(op.operands[0]));
            return;
        }
        if (callee == lower::kSetQreg) {
            BufferRef ref = get<BufferRef>(op.operands[0]);
            rt_.rt_set_qreg(*ref.buffer);
            return;
        }
        const std::string prefix = lower::kQisPrefix;
        if (callee.rfind(prefix, 0) == 0) {
            const std::string gate = callee.substr(prefix.size());
            std::vector<double> params;
            std::vector<QubitId> qubits;
            for (const auto& operand : op.operands) {
                const RtValue& v = env_.at(static_cast<std::size_t>(operand.id));
                if (const auto* d = std::get_if<double>(&v)) {
                    params.push_back(*d);
                } else if (const auto* q = std::get_if<QubitId>(&v)) {
                    qubits.push_back(*q);
                } else {
                    throw ExecutionError("instruction operand has the wrong kind");
                }
            }
            auto bit = rt_.qis_apply(gate, params, qubits);
            if (!op.results.empty() && bit) {
                set(op.results[0], *bit);
            }
            return;
        }
        throw ExecutionError("call to unknown runtime function '" + callee + "'");
    }
};

const ir::Function& entry_function(const ir::Module& module) {
    if (const auto* main = module.find_function("main")) {
        return *main;
    }
    if (module.functions.size() == 1) {
        return module.functions.front();
    }
    throw ExecutionError("module has no @main and no unique entry function");
}

}  // namespace

ExecutionReport interpret(const ir::Module& module, const ExecutionConfig& cfg,
                          AcceleratorBuffer* caller_buffer, std::vector<Diagnostic>* warnings) {
    const ir::Function& entry = entry_function(module);
    const bool library = entry.name != "main" && entry.arguments.size() == 1;

    ExecutionConfig effective = cfg;
    if (!effective.seed) {
        effective.seed = std::random_device{}();
    }

    AcceleratorBuffer internal_buffer;
    AcceleratorBuffer* qreg = caller_buffer;
    if (library && !qreg) {
        qreg = &internal_buffer;
        if (warnings) {
            warnings->push_back({Severity::Warning, "no-qreg",
                                 "library function executed without a caller buffer; results "
                                 "persist to an internal buffer",
                                 0, 0});
        }
    }

    const std::int64_t shots = effective.mode == ExecutionMode::Nisq ? effective.shots : 1;
    const auto start = std::chrono::steady_clock::now();

    // Counts accumulate across shots in one execution-scoped buffer: the
    // caller's qreg for library functions, an internal one otherwise.
    AcceleratorBuffer* report_buffer = library ? qreg : &internal_buffer;
    for (std::int64_t shot = 0; shot < shots; ++shot) {
        QirRuntime rt(effective, library ? nullptr : &internal_buffer);
        rt.begin_shot(static_cast<std::uint64_t>(shot));
        Executor exec(entry, rt, library ? qreg : nullptr);
        exec.run();
        rt.finish_shot();
    }

    const auto stop = std::chrono::steady_clock::now();

    ExecutionReport report;
    report.backend = effective.backend;
    report.mode = effective.mode_name();
    report.shots = shots;
    report.seed = *effective.seed;
    report.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    if (report_buffer) {
        report.counts = report_buffer->counts();
        if (effective.mode == ExecutionMode::Ftqc) {
            report.ftqc_bits = report_buffer->last_bits();
        }
    }
    return report;
}

ExecutionReport interpret_text(const std::string& qir_text, const ExecutionConfig& cfg,
                               AcceleratorBuffer* caller_buffer,
                               std::vector<Diagnostic>* warnings) {
    return interpret(lower::parse_qir_text(qir_text), cfg, caller_buffer, warnings);
}

}  // namespace qirc::rt
