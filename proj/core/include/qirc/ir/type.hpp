#pragma once

#include <string>

namespace qirc::ir {

enum class TypeKind {
    ArrayOpaque,
    QubitOpaque,
    ResultOpaque,
    QregOpaque,
    ArgvOpaque,
    Int,
    Float64,
    Void,
};

/// Value type of an SSA value. Quantum-dialect values are always direct
/// (ptr_depth 0); after lowering, opaque values become pointers to the
/// corresponding opaque struct and the qubit-extract chain introduces
/// i8* / Qubit** intermediates.
struct IrType {
    TypeKind kind = TypeKind::Void;
    int width = 0;      // Int only: 1, 8, 32 or 64
    int ptr_depth = 0;  // 0 in the quantum dialect

    bool operator==(const IrType&) const = default;

    static IrType array() { return {TypeKind::ArrayOpaque, 0, 0}; }
    static IrType qubit() { return {TypeKind::QubitOpaque, 0, 0}; }
    static IrType result() { return {TypeKind::ResultOpaque, 0, 0}; }
    static IrType qreg() { return {TypeKind::QregOpaque, 0, 0}; }
    static IrType argv() { return {TypeKind::ArgvOpaque, 0, 0}; }
    static IrType i(int width) { return {TypeKind::Int, width, 0}; }
    static IrType f64() { return {TypeKind::Float64, 0, 0}; }
    static IrType none() { return {TypeKind::Void, 0, 0}; }

    IrType ptr(int levels = 1) const {
        IrType t = *this;
        t.ptr_depth += levels;
        return t;
    }

    IrType pointee() const {
        IrType t = *this;
        t.ptr_depth -= 1;
        return t;
    }

    bool is_void() const { return kind == TypeKind::Void && ptr_depth == 0; }
};

/// `!quantum.Array`, `i64`, ... (quantum-dialect text)
std::string quantum_type_name(const IrType& t);

/// `!llvm.ptr<struct<"Array", opaque>>`, ... (LLVM-dialect text)
std::string llvm_dialect_type_name(const IrType& t);

/// `%Array*`, `i8**`, `double`, ... (.ll text)
std::string llvm_ir_type_name(const IrType& t);

}  // namespace qirc::ir
