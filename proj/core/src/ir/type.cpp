#include "qirc/ir/type.hpp"

namespace qirc::ir {

namespace {

std::string opaque_struct_name(TypeKind kind) {
    switch (kind) {
        case TypeKind::ArrayOpaque: return "Array";
        case TypeKind::QubitOpaque: return "Qubit";
        case TypeKind::ResultOpaque: return "Result";
        case TypeKind::QregOpaque: return "qreg";
        default: return "";
    }
}

std::string int_name(int width) { return "i" + std::to_string(width); }

}  // namespace

std::string quantum_type_name(const IrType& t) {
    switch (t.kind) {
        case TypeKind::ArrayOpaque: return "!quantum.Array";
        case TypeKind::QubitOpaque: return "!quantum.Qubit";
        case TypeKind::ResultOpaque: return "!quantum.Result";
        case TypeKind::QregOpaque: return "!quantum.Qreg";
        case TypeKind::ArgvOpaque: return "!quantum.Argv";
        case TypeKind::Int: return int_name(t.width);
        case TypeKind::Float64: return "f64";
        case TypeKind::Void: return "()";
    }
    return "<invalid>";
}

std::string llvm_dialect_type_name(const IrType& t) {
    if (t.kind == TypeKind::ArgvOpaque) return "!llvm.ptr<ptr<i8>>";
    std::string inner;
    switch (t.kind) {
        case TypeKind::Int: inner = int_name(t.width); break;
        case TypeKind::Float64: inner = "f64"; break;
        case TypeKind::Void: return "!llvm.void";
        default: inner = "struct<\"" + opaque_struct_name(t.kind) + "\", opaque>"; break;
    }
    for (int i = 0; i < t.ptr_depth; ++i) inner = "ptr<" + inner + ">";
    if (t.ptr_depth > 0) return "!llvm." + inner;
    return inner;
}

std::string llvm_ir_type_name(const IrType& t) {
    if (t.kind == TypeKind::ArgvOpaque) return "i8**";
    std::string base;
    switch (t.kind) {
        case TypeKind::Int: base = int_name(t.width); break;
        case TypeKind::Float64: base = "double"; break;
        case TypeKind::Void: base = "void"; break;
        default: base = "%" + opaque_struct_name(t.kind); break;
    }
    base.append(static_cast<std::size_t>(t.ptr_depth), '*');
    return base;
}

}  // namespace qirc::ir
