#pragma once

#include <map>
#include <memory>
#include <string>

#include "minispec/ast.hpp"
#include "minispec/value.hpp"

namespace minispec {

/// A resolved, type-checked program. Expressions carry their checked semantic
/// type and symbol binding; constants are folded to values. Immutable after
/// construction and safe to share read-only across threads.
struct TypedProgram {
    Program program;
    std::map<std::string, Value> constant_values;

    const FunctionDef* find_function(const std::string& name) const;
    const Predicate* find_predicate(const std::string& name) const;
    const LogicFunction* find_logic_function(const std::string& name) const;
    const VarDecl* find_module_var(const std::string& module, const std::string& name) const;
    const GhostDecl* find_ghost(const std::string& name) const;
};

/// Bind names and check types.
///
/// Scope rules: contracts see parameters, constants, ghost declarations,
/// predicates and logic functions — never module variables (assigns clauses
/// may name them module-qualified). Bodies additionally see their own
/// module's variables and locals. Concrete code must not read or write ghost
/// state; ghost statements may read concrete state.
///
/// Throws ResolveError (UndefinedName, TypeMismatch, DuplicateName).
TypedProgram resolve(const Program& p);

/// Resolve one expression against a TypedProgram with contract-style
/// visibility plus module-qualified names (coupling assumptions) and,
/// optionally, a function's parameters (scenario expectations, goals).
void resolve_expression(const TypedProgram& tp, const ExprPtr& e, const FunctionDef* fn,
                        bool allow_qualified, bool allow_result);

}  // namespace minispec
