#pragma once

#include <string>
#include <vector>

#include "gbsect/polynomial.hpp"

namespace gbsect {

enum class RenderMode {
  as_is,
  monic,    // leading coefficient 1
  cleared,  // denominators cleared, content 1
};

/// Deterministic text in the expression grammar, terms in descending lex order.
/// parse_expression(render(p), p.context()) == p for as_is mode.
std::string render(const Polynomial& p, RenderMode mode = RenderMode::as_is);

/// A coefficient-field element in the expression grammar.
std::string render(const ParamFraction& value, const std::vector<std::string>& parameter_names);
std::string render(const ParamPoly& value, const std::vector<std::string>& parameter_names);

}  // namespace gbsect
