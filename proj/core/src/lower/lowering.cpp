#include "qirc/lower/lowering.hpp"

#include <map>

#include "qirc/lower/qir_abi.hpp"
#include "qirc/support/errors.hpp"

namespace qirc::lower {

Rewriter::Rewriter(ir::ModuleBuilder& builder, const ir::Function& source)
    : builder_(builder), source_(source) {
    value_map_.assign(static_cast<std::size_t>(source.num_values()), ir::Value{});
}

ir::Value Rewriter::remap(ir::Value old) const {
    if (!old.valid() || old.id >= static_cast<int>(value_map_.size()) ||
        !value_map_[static_cast<std::size_t>(old.id)].valid()) {
        throw LoweringError("value %" + std::to_string(old.id) + " has no replacement");
    }
    return value_map_[static_cast<std::size_t>(old.id)];
}

void Rewriter::map_result(ir::Value old, ir::Value replacement) {
    value_map_.at(static_cast<std::size_t>(old.id)) = replacement;
}

ir::Value Rewriter::const_i64(std::int64_t value) {
    return builder_.build_op("llvm.constant", {{"value", ir::Attr{value}}}, {}).results[0];
}

ir::Value Rewriter::const_f64(double value) {
    return builder_.build_op("llvm.constant", {{"value", ir::Attr{value}}}, {}).results[0];
}

void Rewriter::ensure_declared(const ir::ExternalDecl& decl) { builder_.declare_external(decl); }

ir::Value Rewriter::call(const std::string& callee, std::vector<ir::Value> args) {
    auto& op =
        builder_.build_op("llvm.call", {{"callee", ir::Attr{callee}}}, std::move(args));
    return op.results.empty() ? ir::Value{} : op.results[0];
}

ir::Value Rewriter::bitcast(ir::Value operand, ir::IrType to) {
    return builder_.build_op("llvm.bitcast", {}, {operand}, to).results[0];
}

ir::Value Rewriter::load(ir::Value pointer) {
    return builder_.build_op("llvm.load", {}, {pointer}).results[0];
}

void Rewriter::return_op(ir::AttrMap attributes) {
    builder_.build_op("llvm.return", std::move(attributes), {});
}

namespace {

template <typename T>
const T& attr(const ir::Op& op, const std::string& key) {
    return std::get<T>(op.attributes.at(key));
}

class InitPattern final : public ConversionPattern {
public:
    std::string_view matches() const override { return "quantum.init"; }
    std::vector<ir::ExternalDecl> declares() const override { return {initialize_decl()}; }
    void rewrite(const ir::Op& op, Rewriter& rw) const override {
        rw.ensure_declared(initialize_decl());
        rw.call(kInitialize, {rw.remap(op.operands[0]), rw.remap(op.operands[1])});
    }
};

class QallocPattern final : public ConversionPattern {
public:
    std::string_view matches() const override { return "quantum.qalloc"; }
    std::vector<ir::ExternalDecl> declares() const override { return {allocate_array_decl()}; }
    void rewrite(const ir::Op& op, Rewriter& rw) const override {
        rw.ensure_declared(allocate_array_decl());
        auto size = rw.const_i64(attr<std::int64_t>(op, "size"));
        rw.map_result(op.results[0], rw.call(kAllocateArray, {size}));
    }
};

class QextractPattern final : public ConversionPattern {
public:
    std::string_view matches() const override { return "quantum.qextract"; }
    std::vector<ir::ExternalDecl> declares() const override { return {get_element_ptr_decl()}; }
    void rewrite(const ir::Op& op, Rewriter& rw) const override {
        rw.ensure_declared(get_element_ptr_decl());
        auto raw = rw.call(kGetElementPtr, {rw.remap(op.operands[0]), rw.remap(op.operands[1])});
        auto typed = rw.bitcast(raw, ir::IrType::qubit().ptr(2));
        rw.map_result(op.results[0], rw.load(typed));
    }
};

class InstPattern final : public ConversionPattern {
public:
    std::string_view matches() const override { return "quantum.inst"; }
    void rewrite(const ir::Op& op, Rewriter& rw) const override {
        const auto gate = canonical_gate_name(attr<std::string>(op, "name"));
        const auto& params = attr<std::vector<double>>(op, "params");
        rw.ensure_declared(qis_decl(gate, params.size(), op.operands.size()));

        std::vector<ir::Value> args;
        args.reserve(params.size() + op.operands.size());
        for (double p : params) args.push_back(rw.const_f64(p));
        for (const auto& q : op.operands) args.push_back(rw.remap(q));

        auto result = rw.call(kQisPrefix + gate, std::move(args));
        if (!op.results.empty()) rw.map_result(op.results[0], result);
    }
};

class DeallocPattern final : public ConversionPattern {
public:
    std::string_view matches() const override { return "quantum.dealloc"; }
    std::vector<ir::ExternalDecl> declares() const override { return {release_array_decl()}; }
    void rewrite(const ir::Op& op, Rewriter& rw) const override {
        rw.ensure_declared(release_array_decl());
        rw.call(kReleaseArray, {rw.remap(op.operands[0])});
    }
};

class FinalizePattern final : public ConversionPattern {
public:
    std::string_view matches() const override { return "quantum.finalize"; }
    std::vector<ir::ExternalDecl> declares() const override { return {finalize_decl()}; }
    void rewrite(const ir::Op&, Rewriter& rw) const override {
        rw.ensure_declared(finalize_decl());
        rw.call(kFinalize, {});
    }
};

class SetQregPattern final : public ConversionPattern {
public:
    std::string_view matches() const override { return "quantum.set_qreg"; }
    std::vector<ir::ExternalDecl> declares() const override { return {set_qreg_decl()}; }
    void rewrite(const ir::Op& op, Rewriter& rw) const override {
        rw.ensure_declared(set_qreg_decl());
        rw.call(kSetQreg, {rw.remap(op.operands[0])});
    }
};

class StdConstantPattern final : public ConversionPattern {
public:
    std::string_view matches() const override { return "std.constant"; }
    void rewrite(const ir::Op& op, Rewriter& rw) const override {
        const auto& value = op.attributes.at("value");
        ir::Value replacement = std::holds_alternative<double>(value)
                                    ? rw.const_f64(std::get<double>(value))
                                    : rw.const_i64(std::get<std::int64_t>(value));
        rw.map_result(op.results[0], replacement);
    }
};

class StdReturnPattern final : public ConversionPattern {
public:
    std::string_view matches() const override { return "std.return"; }
    void rewrite(const ir::Op& op, Rewriter& rw) const override {
        rw.return_op(op.attributes);
    }
};

}  // namespace

const std::vector<std::unique_ptr<ConversionPattern>>& standard_patterns() {
    static const auto* patterns = [] {
        auto* v = new std::vector<std::unique_ptr<ConversionPattern>>();
        v->push_back(std::make_unique<InitPattern>());
        v->push_back(std::make_unique<QallocPattern>());
        v->push_back(std::make_unique<QextractPattern>());
        v->push_back(std::make_unique<InstPattern>());
        v->push_back(std::make_unique<DeallocPattern>());
        v->push_back(std::make_unique<FinalizePattern>());
        v->push_back(std::make_unique<SetQregPattern>());
        v->push_back(std::make_unique<StdConstantPattern>());
        v->push_back(std::make_unique<StdReturnPattern>());
        return v;
    }();
    return *patterns;
}

ir::Module run_lowering(const ir::Module& m) {
    std::map<std::string_view, const ConversionPattern*> index;
    for (const auto& p : standard_patterns()) index[p->matches()] = p.get();

    ir::ModuleBuilder builder;
    for (const auto& fn : m.functions) {
        std::vector<ir::IrType> arg_types;
        arg_types.reserve(fn.arguments.size());
        for (const auto& arg : fn.arguments) arg_types.push_back(lower_type(fn.type_of(arg)));

        auto args = builder.begin_function(fn.name, arg_types, fn.return_type);
        Rewriter rewriter(builder, fn);
        for (std::size_t i = 0; i < fn.arguments.size(); ++i) {
            rewriter.map_result(fn.arguments[i], args[i]);
        }

        for (const auto& op : fn.body) {
            auto it = index.find(op.full_name());
            if (it == index.end()) {
                throw LoweringError("no conversion pattern for op '" + op.full_name() + "'");
            }
            it->second->rewrite(op, rewriter);
        }
        builder.end_function();
    }

    ir::Module lowered = builder.take_module();
    for (const auto& fn : lowered.functions) {
        for (const auto& op : fn.body) {
            if (op.dialect == "quantum") {
                throw LegalityError("op '" + op.full_name() + "' survived lowering in @" +
                                    fn.name);
            }
        }
    }
    return lowered;
}

}  // namespace qirc::lower
