#pragma once

#include <string>

#include "minispec/ast.hpp"

namespace minispec {

/// Parse one source file into an unresolved Program.
/// Throws ParseError with a span inside the offending token range.
Program parse_source(const std::string& text, const std::string& file);

/// Parse a single logic expression (used for coupling assumptions and
/// scenario expectations).
ExprPtr parse_expression(const std::string& text, const std::string& origin);

}  // namespace minispec
