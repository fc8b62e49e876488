#pragma once

#include <cstdint>
#include <deque>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "qirc/ir/type.hpp"

namespace qirc::ir {

/// Constant attribute value: integer, float, string or float list.
using Attr = std::variant<std::int64_t, double, std::string, std::vector<double>>;

/// Sorted by key, so iteration (and printing) is deterministic.
using AttrMap = std::map<std::string, Attr>;

/// Lightweight SSA value handle. Ids are dense per function: arguments
/// first, then op results in creation order.
struct Value {
    int id = -1;

    bool valid() const { return id >= 0; }
    bool operator==(const Value&) const = default;
};

struct Op {
    std::string dialect;  // "quantum" | "std" | "llvm"
    std::string name;
    AttrMap attributes;
    std::vector<Value> operands;
    std::vector<Value> results;

    std::string full_name() const { return dialect + "." + name; }
    bool is_return() const { return name == "return"; }
    bool operator==(const Op&) const = default;
};

struct ExternalDecl {
    std::string name;
    std::vector<IrType> params;
    IrType result;

    bool operator==(const ExternalDecl&) const = default;
};

struct Function {
    std::string name;
    std::vector<Value> arguments;
    // Deque so references returned by the builder stay valid as the body
    // grows. The single return terminator is last.
    std::deque<Op> body;
    IrType return_type = IrType::none();

    // Per-value bookkeeping, indexed by Value::id.
    std::vector<IrType> value_types;
    std::vector<int> value_def;  // defining op index; -1 for arguments

    Value new_value(IrType type, int def_op_index) {
        Value v{static_cast<int>(value_types.size())};
        value_types.push_back(type);
        value_def.push_back(def_op_index);
        return v;
    }

    IrType type_of(Value v) const { return value_types.at(static_cast<std::size_t>(v.id)); }
    int num_values() const { return static_cast<int>(value_types.size()); }

    bool operator==(const Function&) const = default;
};

struct Module {
    std::vector<Function> functions;
    std::vector<ExternalDecl> externals;  // insertion order == first use

    const Function* find_function(const std::string& name) const;
    const ExternalDecl* find_external(const std::string& name) const;
    bool has_dialect(const std::string& dialect) const;

    bool operator==(const Module&) const = default;
};

std::string attr_to_string(const Attr& a);

}  // namespace qirc::ir
