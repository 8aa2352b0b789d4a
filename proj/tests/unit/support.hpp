#pragma once

#include <string>
#include <vector>

#include "gbsect/groebner.hpp"
#include "gbsect/parser.hpp"
#include "gbsect/render.hpp"

namespace test {

inline gbsect::Polynomial P(const gbsect::ContextPtr& ctx, const std::string& text) {
  return gbsect::parse_expression(text, ctx);
}

inline std::vector<gbsect::Polynomial> Ps(const gbsect::ContextPtr& ctx, const std::vector<std::string>& texts) {
  std::vector<gbsect::Polynomial> out;
  for (const auto& t : texts) out.push_back(P(ctx, t));
  return out;
}

inline std::vector<std::string> rendered(const gbsect::GroebnerBasis& g,
                                         gbsect::RenderMode mode = gbsect::RenderMode::as_is) {
  std::vector<std::string> out;
  for (const auto& p : g.elements()) out.push_back(gbsect::render(p, mode));
  return out;
}

inline gbsect::ContextPtr xyz(std::vector<std::string> params = {}) {
  return gbsect::make_context({"x", "y", "z"}, std::move(params));
}

}  // namespace test
