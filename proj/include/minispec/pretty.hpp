#pragma once

#include <string>

#include "minispec/ast.hpp"

namespace minispec {

/// Render an expression in canonical surface syntax (reparses to a
/// structurally identical tree).
std::string pretty_print(const Expr& e);

/// Render a whole program in canonical surface syntax.
std::string pretty_print(const Program& p);

}  // namespace minispec
