#include "qirc/ir/builder.hpp"

#include <sstream>

#include "qirc/support/errors.hpp"

namespace qirc::ir {

namespace {

[[noreturn]] void fail(const std::string& op, const std::string& what) {
    throw SignatureError("op '" + op + "': " + what);
}

void require_attrs(const std::string& op, const AttrMap& attrs,
                   const std::vector<std::string>& keys) {
    for (const auto& key : keys) {
        if (!attrs.count(key)) fail(op, "missing attribute '" + key + "'");
    }
    for (const auto& [key, value] : attrs) {
        bool known = false;
        for (const auto& k : keys) {
            if (k == key) known = true;
        }
        if (!known) fail(op, "unexpected attribute '" + key + "'");
    }
}

void require_operands(const std::string& op, const std::vector<IrType>& got,
                      const std::vector<IrType>& want) {
    if (got.size() != want.size()) {
        fail(op, "expected " + std::to_string(want.size()) + " operand(s), got " +
                     std::to_string(got.size()));
    }
    for (std::size_t i = 0; i < want.size(); ++i) {
        if (got[i] != want[i]) {
            fail(op, "operand " + std::to_string(i) + " has the wrong type");
        }
    }
}

template <typename T>
const T& attr_as(const std::string& op, const AttrMap& attrs, const std::string& key) {
    const auto* v = std::get_if<T>(&attrs.at(key));
    if (!v) fail(op, "attribute '" + key + "' has the wrong kind");
    return *v;
}

std::vector<IrType> constant_results(const std::string& op, const AttrMap& attrs,
                                     const std::vector<IrType>& operands) {
    require_operands(op, operands, {});
    require_attrs(op, attrs, {"value"});
    const Attr& v = attrs.at("value");
    if (std::holds_alternative<std::int64_t>(v)) return {IrType::i(64)};
    if (std::holds_alternative<double>(v)) return {IrType::f64()};
    fail(op, "attribute 'value' must be an integer or a float");
}

std::vector<IrType> return_results(const std::string& op, const AttrMap& attrs,
                                   const std::vector<IrType>& operands) {
    require_operands(op, operands, {});
    if (!attrs.empty()) {
        require_attrs(op, attrs, {"value"});
        attr_as<std::int64_t>(op, attrs, "value");
    }
    return {};
}

}  // namespace

std::vector<IrType> infer_op_results(const std::string& dialect, const std::string& name,
                                     const AttrMap& attrs,
                                     const std::vector<IrType>& operand_types,
                                     const std::vector<ExternalDecl>* externals,
                                     const std::optional<IrType>& result_override) {
    const std::string op = dialect + "." + name;
    if (result_override && op != "llvm.bitcast") {
        fail(op, "result type override is only valid for llvm.bitcast");
    }

    if (dialect == "quantum") {
        if (name == "init") {
            require_attrs(op, attrs, {});
            require_operands(op, operand_types, {IrType::i(32), IrType::argv()});
            return {};
        }
        if (name == "finalize") {
            require_attrs(op, attrs, {});
            require_operands(op, operand_types, {});
            return {};
        }
        if (name == "qalloc") {
            require_attrs(op, attrs, {"name", "size"});
            attr_as<std::string>(op, attrs, "name");
            if (attr_as<std::int64_t>(op, attrs, "size") < 1) {
                fail(op, "attribute 'size' must be >= 1");
            }
            require_operands(op, operand_types, {});
            return {IrType::array()};
        }
        if (name == "qextract") {
            require_attrs(op, attrs, {});
            require_operands(op, operand_types, {IrType::array(), IrType::i(64)});
            return {IrType::qubit()};
        }
        if (name == "inst") {
            require_attrs(op, attrs, {"name", "params"});
            const auto& inst = attr_as<std::string>(op, attrs, "name");
            attr_as<std::vector<double>>(op, attrs, "params");
            if (operand_types.empty()) fail(op, "expected at least one qubit operand");
            for (std::size_t i = 0; i < operand_types.size(); ++i) {
                if (operand_types[i] != IrType::qubit()) {
                    fail(op, "operand " + std::to_string(i) + " is not a qubit");
                }
            }
            if (inst == "mz" || inst == "measure") return {IrType::result()};
            return {};
        }
        if (name == "dealloc") {
            require_attrs(op, attrs, {});
            require_operands(op, operand_types, {IrType::array()});
            return {};
        }
        if (name == "set_qreg") {
            require_attrs(op, attrs, {});
            require_operands(op, operand_types, {IrType::qreg()});
            return {};
        }
        fail(op, "unknown quantum-dialect op");
    }

    if (dialect == "std") {
        if (name == "constant") return constant_results(op, attrs, operand_types);
        if (name == "return") return return_results(op, attrs, operand_types);
        fail(op, "unknown std-dialect op");
    }

    if (dialect == "llvm") {
        if (name == "constant") return constant_results(op, attrs, operand_types);
        if (name == "return") return return_results(op, attrs, operand_types);
        if (name == "call") {
            require_attrs(op, attrs, {"callee"});
            const auto& callee = attr_as<std::string>(op, attrs, "callee");
            if (!externals) fail(op, "no external declarations available");
            const ExternalDecl* decl = nullptr;
            for (const auto& e : *externals) {
                if (e.name == callee) decl = &e;
            }
            if (!decl) fail(op, "callee '" + callee + "' is not declared");
            require_operands(op, operand_types, decl->params);
            if (decl->result.is_void()) return {};
            return {decl->result};
        }
        if (name == "bitcast") {
            require_attrs(op, attrs, {});
            if (operand_types.size() != 1 || operand_types[0].ptr_depth < 1) {
                fail(op, "expected one pointer operand");
            }
            if (!result_override || result_override->ptr_depth < 1) {
                fail(op, "requires a pointer result type");
            }
            return {*result_override};
        }
        if (name == "load") {
            require_attrs(op, attrs, {});
            if (operand_types.size() != 1 || operand_types[0].ptr_depth < 1) {
                fail(op, "expected one pointer operand");
            }
            return {operand_types[0].pointee()};
        }
        fail(op, "unknown llvm-dialect op");
    }

    fail(op, "unknown dialect '" + dialect + "'");
}

std::vector<Value> ModuleBuilder::begin_function(const std::string& name,
                                                 const std::vector<IrType>& argument_types,
                                                 IrType return_type) {
    if (in_function_) throw StateError("begin_function: previous function still open");
    if (module_.find_function(name)) {
        throw SignatureError("function '" + name + "' is already defined");
    }
    Function f;
    f.name = name;
    f.return_type = return_type;
    module_.functions.push_back(std::move(f));
    Function& fn = module_.functions.back();
    for (const auto& t : argument_types) {
        fn.arguments.push_back(fn.new_value(t, -1));
    }
    in_function_ = true;
    return fn.arguments;
}

void ModuleBuilder::end_function() {
    if (!in_function_) throw StateError("end_function: no function open");
    in_function_ = false;
}

Function& ModuleBuilder::current_function() {
    if (!in_function_) throw StateError("no function open");
    return module_.functions.back();
}

Op& ModuleBuilder::build_op(const std::string& full_name, AttrMap attributes,
                            std::vector<Value> operands, std::optional<IrType> result_override) {
    Function& fn = current_function();
    const auto dot = full_name.find('.');
    if (dot == std::string::npos) {
        throw SignatureError("op name '" + full_name + "' must be dialect-qualified");
    }
    Op op;
    op.dialect = full_name.substr(0, dot);
    op.name = full_name.substr(dot + 1);
    op.attributes = std::move(attributes);
    op.operands = std::move(operands);

    std::vector<IrType> operand_types;
    operand_types.reserve(op.operands.size());
    for (const auto& v : op.operands) {
        if (!v.valid() || v.id >= fn.num_values()) {
            throw SignatureError("op '" + full_name + "': operand value is not defined");
        }
        operand_types.push_back(fn.type_of(v));
    }

    const auto result_types = infer_op_results(op.dialect, op.name, op.attributes, operand_types,
                                               &module_.externals, result_override);
    const int op_index = static_cast<int>(fn.body.size());
    for (const auto& t : result_types) {
        op.results.push_back(fn.new_value(t, op_index));
    }
    fn.body.push_back(std::move(op));
    return fn.body.back();
}

void ModuleBuilder::declare_external(const ExternalDecl& decl) {
    if (const auto* existing = module_.find_external(decl.name)) {
        if (!(*existing == decl)) {
            throw SignatureError("external '" + decl.name +
                                 "' re-declared with a different signature");
        }
        return;
    }
    module_.externals.push_back(decl);
}

Module ModuleBuilder::take_module() {
    if (in_function_) throw StateError("take_module: function still open");
    return std::move(module_);
}

}  // namespace qirc::ir
