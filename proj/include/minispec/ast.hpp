#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "minispec/span.hpp"

namespace minispec {

// ---------------------------------------------------------------------------
// Types
// ---------------------------------------------------------------------------

enum class BaseType { Bool, UInt16, Int32, Integer, Real, Void };

struct Type {
    BaseType base = BaseType::Void;
    bool is_array = false;
    int array_size = 0;

    static Type scalar(BaseType b) { return Type{b, false, 0}; }
    static Type array_of(BaseType b, int n) { return Type{b, true, n}; }

    bool operator==(const Type& o) const {
        return base == o.base && is_array == o.is_array && array_size == o.array_size;
    }
    bool operator!=(const Type& o) const { return !(*this == o); }
};

std::string type_name(const Type& t);
std::string base_type_name(BaseType b);

/// true if a value of `from` may be used where `to` is expected
/// (widening chain uint16 -> int32 -> integer -> real only).
bool widens_to(BaseType from, BaseType to);

// ---------------------------------------------------------------------------
// Expressions
// ---------------------------------------------------------------------------

enum class ExprKind {
    IntLit,
    RealLit,
    BoolLit,
    Name,       // identifier
    Qualified,  // module::name (coupling expressions only)
    Unary,
    Binary,
    Chain,      // chained comparison a >= b > c
    Call,       // predicate / logic function / program function application
    Builtin,    // \abs, \floor, \exp
    Old,        // \old(e)
    AtPre,      // \at(e, Pre)
    Result,     // \result
    Index,      // base[idx]
    Deref,      // *name (out-reference parameter access)
    AddrOf,     // &name (call argument only)
    Quant,      // \forall / \exists binder; body
};

enum class UnaryOp { Neg, Not };

enum class BinaryOp { Add, Sub, Mul, Div, Mod, Lt, Le, Gt, Ge, Eq, Ne, And, Or, Implies };

enum class BuiltinFn { Abs, Floor, Exp };

enum class QuantKind { Forall, Exists };

/// What a resolved Name refers to.
enum class SymKind {
    Unresolved,
    Constant,
    ModuleVar,
    Ghost,
    Param,
    Local,
    Binder,
    Predicate,
    LogicFunction,
    Function,
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    ExprKind kind;
    SourceSpan span;

    long long int_value = 0;   // IntLit
    double real_value = 0.0;   // RealLit
    bool bool_value = false;   // BoolLit

    std::string name;         // Name / Qualified / Call / Deref / AddrOf / Quant binder
    std::string module_name;  // Qualified

    UnaryOp unary_op = UnaryOp::Neg;
    BinaryOp binary_op = BinaryOp::Add;
    std::vector<BinaryOp> chain_ops;  // Chain (comparison ops between args)
    BuiltinFn builtin = BuiltinFn::Abs;
    QuantKind quant = QuantKind::Forall;
    Type binder_type;  // Quant

    std::vector<ExprPtr> args;  // children (operands, call args, quant body, ...)

    // Filled in by resolve(); logically immutable afterwards.
    mutable Type sem_type;
    mutable SymKind sym = SymKind::Unresolved;
    mutable std::string sym_module;  // owning module for ModuleVar
};

// ---------------------------------------------------------------------------
// Statements
// ---------------------------------------------------------------------------

enum class StmtKind {
    Decl,         // local declaration with initializer
    Assign,       // lvalue = expr
    GhostAssign,  // //@ ghost lvalue = expr;
    If,
    While,
    For,
    Call,    // expression-statement call (result discarded if any)
    Return,  // return [expr];
    Assert,  // //@ assert expr;
    ExternEffect,
};

struct Stmt;
using StmtPtr = std::shared_ptr<const Stmt>;

struct Stmt {
    StmtKind kind;
    SourceSpan span;

    Type decl_type;             // Decl
    std::string name;           // Decl name / Call callee
    ExprPtr lhs;                // Assign/GhostAssign target (Name, Deref or Index)
    ExprPtr expr;               // Decl init, Assign rhs, If/While/For cond, Return value, Assert cond
    std::vector<ExprPtr> args;  // Call
    std::vector<StmtPtr> body;        // If-then / While / For body
    std::vector<StmtPtr> else_body;   // If
    std::vector<ExprPtr> invariants;  // While/For loop invariants
    StmtPtr init_stmt;                // For
    StmtPtr step_stmt;                // For
};

// ---------------------------------------------------------------------------
// Declarations
// ---------------------------------------------------------------------------

struct ConstDecl {
    std::string name;
    Type type;
    ExprPtr value;
    SourceSpan span;
};

struct VarDecl {
    std::string module;  // owning module
    std::string name;
    Type type;
    std::vector<ExprPtr> init;  // one element for scalars, array_size elements for arrays
    SourceSpan span;
};

struct GhostDecl {
    std::string name;
    Type type;
    std::vector<ExprPtr> init;  // may be empty: zero-initialized
    SourceSpan span;
};

struct Param {
    std::string name;
    Type type;
    bool by_ref = false;  // out-reference parameter
    SourceSpan span;
};

struct Predicate {
    std::string name;
    std::vector<Param> params;
    ExprPtr body;
    SourceSpan span;
};

struct LogicFunction {
    std::string name;
    Type return_type;
    std::vector<Param> params;
    ExprPtr body;
    SourceSpan span;
};

struct Behavior {
    std::string name;
    std::vector<ExprPtr> assumes;
    std::vector<ExprPtr> ensures;
    SourceSpan span;
};

enum class AssignsKind { Nothing, Ghost, Qualified, Param, DerefParam };

struct AssignsTarget {
    AssignsKind kind = AssignsKind::Nothing;
    std::string module;  // Qualified
    std::string name;
    SourceSpan span;
};

struct Contract {
    std::vector<ExprPtr> requires_clauses;
    std::optional<std::vector<AssignsTarget>> assigns;
    std::vector<Behavior> behaviors;
    bool complete_declared = false;
    bool disjoint_declared = false;

    bool empty() const {
        return requires_clauses.empty() && !assigns && behaviors.empty() && !complete_declared &&
               !disjoint_declared;
    }
};

struct FunctionDef {
    std::string module;
    std::string name;
    Type return_type;
    std::vector<Param> params;
    std::optional<Contract> contract;
    std::vector<StmtPtr> body;
    bool hardware = false;
    SourceSpan span;
};

struct Program {
    std::vector<ConstDecl> constants;
    std::vector<VarDecl> module_vars;
    std::vector<GhostDecl> ghost_decls;
    std::vector<Predicate> predicates;
    std::vector<LogicFunction> logic_functions;
    std::vector<FunctionDef> functions;
};

/// Merge several parsed files into one program (load order preserved).
Program merge_programs(std::vector<Program> parts);

// Structural equality, ignoring spans and resolution annotations.
bool structurally_equal(const Expr& a, const Expr& b);
bool structurally_equal(const Program& a, const Program& b);

}  // namespace minispec
