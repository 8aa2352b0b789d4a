#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "gbsect/groebner.hpp"

namespace gbsect {

/// Line-oriented description of a polynomial system:
///
///   # comment
///   vars: x, y, z
///   params: a, b
///   order: lex
///   poly: z - x^2/a^2 - y^2/b^2
///   poly: x^2/a^2 + y^2/b^2 - x/a - y/b
struct SystemFile {
  std::vector<std::string> vars;
  std::vector<std::string> params;
  std::string order = "lex";
  std::vector<std::string> polynomials;

  ContextPtr context() const;
  /// Parses every polynomial in a fresh context.
  IdealSpec ideal() const;
  IdealSpec ideal(const ContextPtr& context) const;
};

/// Throws ParseError (reporting the line number) on malformed input.
SystemFile parse_system_file(std::string_view text);
SystemFile load_system_file(const std::filesystem::path& path);

/// Splits a comma and/or whitespace separated name list.
std::vector<std::string> split_names(std::string_view text);

MonomialOrder parse_order(std::string_view name);

}  // namespace gbsect
