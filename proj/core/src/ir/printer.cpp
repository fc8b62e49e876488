#include "qirc/ir/printer.hpp"

#include <sstream>

namespace qirc::ir {

namespace {

std::string type_name(const IrType& t, bool llvm_style) {
    return llvm_style ? llvm_dialect_type_name(t) : quantum_type_name(t);
}

void print_op(std::ostringstream& os, const Function& f, const Op& op, bool llvm_style) {
    os << "    ";
    if (!op.results.empty()) {
        for (std::size_t i = 0; i < op.results.size(); ++i) {
            if (i) os << ", ";
            os << "%" << op.results[i].id;
        }
        os << " = ";
    }
    os << '"' << op.full_name() << "\"(";
    for (std::size_t i = 0; i < op.operands.size(); ++i) {
        if (i) os << ", ";
        os << "%" << op.operands[i].id;
    }
    os << ")";
    if (!op.attributes.empty()) {
        os << " {";
        bool first = true;
        for (const auto& [key, value] : op.attributes) {
            if (!first) os << ", ";
            first = false;
            os << key << " = " << attr_to_string(value);
        }
        os << "}";
    }
    os << " : (";
    for (std::size_t i = 0; i < op.operands.size(); ++i) {
        if (i) os << ", ";
        os << type_name(f.type_of(op.operands[i]), llvm_style);
    }
    os << ") -> ";
    if (op.results.empty()) {
        os << (llvm_style ? "!llvm.void" : "()");
    } else if (op.results.size() == 1) {
        os << type_name(f.type_of(op.results[0]), llvm_style);
    } else {
        os << "(";
        for (std::size_t i = 0; i < op.results.size(); ++i) {
            if (i) os << ", ";
            os << type_name(f.type_of(op.results[i]), llvm_style);
        }
        os << ")";
    }
    os << "\n";
}

}  // namespace

std::string print_module(const Module& m) {
    const bool llvm_style = m.has_dialect("llvm") || !m.externals.empty();
    std::ostringstream os;
    os << "module {\n";
    for (const auto& ext : m.externals) {
        os << "  llvm.func @" << ext.name << "(";
        for (std::size_t i = 0; i < ext.params.size(); ++i) {
            if (i) os << ", ";
            os << llvm_dialect_type_name(ext.params[i]);
        }
        os << ")";
        if (!ext.result.is_void()) os << " -> " << llvm_dialect_type_name(ext.result);
        os << "\n";
    }
    for (const auto& f : m.functions) {
        os << "  " << (llvm_style ? "llvm.func" : "func") << " @" << f.name << "(";
        for (std::size_t i = 0; i < f.arguments.size(); ++i) {
            if (i) os << ", ";
            os << "%" << f.arguments[i].id << ": " << type_name(f.type_of(f.arguments[i]), llvm_style);
        }
        os << ")";
        if (!f.return_type.is_void()) os << " -> " << type_name(f.return_type, llvm_style);
        os << " {\n";
        for (const auto& op : f.body) print_op(os, f, op, llvm_style);
        os << "  }\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace qirc::ir
