#pragma once

#include <string_view>

#include "gbsect/polynomial.hpp"

namespace gbsect {

/// Parses an expression over the names of `context`.
///
///   expr   := ['-'] term (('+' | '-') term)*
///   term   := factor (('*' | '/') factor)*
///   factor := base ['^' nat]
///   base   := ident | integer | '(' expr ')'
///
/// Division is only allowed by variable-free subexpressions, exponents are
/// non-negative integer literals and implicit multiplication is rejected.
/// Errors are reported as ParseError with the character offset.
Polynomial parse_expression(std::string_view text, const ContextPtr& context);

}  // namespace gbsect
