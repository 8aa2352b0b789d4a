#include "gbsect/system_file.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "gbsect/errors.hpp"
#include "gbsect/parser.hpp"

namespace gbsect {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

std::vector<std::string> split_names(std::string_view text) {
  std::vector<std::string> out;
  std::string current;
  for (char c : text) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      if (!current.empty()) out.push_back(std::move(current));
      current.clear();
    } else {
      current += c;
    }
  }
  if (!current.empty()) out.push_back(std::move(current));
  return out;
}

MonomialOrder parse_order(std::string_view name) {
  if (name == "lex") return MonomialOrder::lex();
  throw UsageError("unsupported monomial order '" + std::string(name) + "'");
}

SystemFile parse_system_file(std::string_view text) {
  SystemFile sys;
  bool have_vars = false;
  bool have_params = false;
  bool have_order = false;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) throw ParseError("expected 'key: value'", line_no, "line");
    const std::string_view key = trim(line.substr(0, colon));
    const std::string_view value = trim(line.substr(colon + 1));
    if (key == "vars") {
      if (have_vars) throw ParseError("duplicate 'vars'", line_no, "line");
      sys.vars = split_names(value);
      have_vars = true;
    } else if (key == "params") {
      if (have_params) throw ParseError("duplicate 'params'", line_no, "line");
      sys.params = split_names(value);
      have_params = true;
    } else if (key == "order") {
      if (have_order) throw ParseError("duplicate 'order'", line_no, "line");
      if (value != "lex") throw ParseError("unsupported order '" + std::string(value) + "'", line_no, "line");
      sys.order = std::string(value);
      have_order = true;
    } else if (key == "poly") {
      if (value.empty()) throw ParseError("empty polynomial", line_no, "line");
      sys.polynomials.emplace_back(value);
    } else {
      throw ParseError("unknown key '" + std::string(key) + "'", line_no, "line");
    }
  }
  if (sys.vars.empty()) throw ParseError("missing or empty 'vars'", line_no, "line");
  try {
    (void)sys.context();
  } catch (const UsageError& e) {
    throw ParseError(e.what(), line_no, "line");
  }
  return sys;
}

SystemFile load_system_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_system_file(buf.str());
}

ContextPtr SystemFile::context() const { return make_context(vars, params); }

IdealSpec SystemFile::ideal() const { return ideal(context()); }

IdealSpec SystemFile::ideal(const ContextPtr& ctx) const {
  std::vector<Polynomial> gens;
  gens.reserve(polynomials.size());
  for (const auto& text : polynomials) gens.push_back(parse_expression(text, ctx));
  return IdealSpec(ctx, std::move(gens), parse_order(order));
}

}  // namespace gbsect
