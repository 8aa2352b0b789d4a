#include "gbsect/planarity.hpp"

#include <map>

#include "gbsect/division.hpp"
#include "gbsect/errors.hpp"

namespace gbsect {

Polynomial Plane::to_polynomial(const ContextPtr& context) const {
  if (context->num_variables() != 3) throw UsageError("planes need exactly three variables");
  Polynomial p = Polynomial::constant(context, d);
  p += Polynomial::variable(context, 0).scaled(a);
  p += Polynomial::variable(context, 1).scaled(b);
  p += Polynomial::variable(context, 2).scaled(c);
  return p;
}

std::optional<Polynomial> scan_linear(const GroebnerBasis& basis) {
  for (const auto& g : basis.elements()) {
    if (g.total_degree() == 1) return g;
  }
  return std::nullopt;
}

LTMembershipReport lt_membership(const GroebnerBasis& basis) {
  const std::size_t nv = basis.context()->num_variables();
  if (nv != 3) throw UsageError("leading-term membership report needs exactly three variables");
  LTMembershipReport report;
  for (std::size_t v = 0; v < 3; ++v) {
    const Monomial var = Monomial::variable(nv, v);
    for (const auto& g : basis.elements()) {
      if (g.leading_monomial().divides(var)) {
        report.in_lt_ideal[v] = true;
        break;
      }
    }
  }
  return report;
}

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(std::vector<std::vector<ParamFraction>>& m, std::size_t columns) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < columns && row < m.size(); ++col) {
    std::size_t pick = row;
    while (pick < m.size() && m[pick][col].is_zero()) ++pick;
    if (pick == m.size()) continue;
    std::swap(m[row], m[pick]);
    const ParamFraction inv = m[row][col].inverse();
    for (auto& entry : m[row]) entry *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col].is_zero()) continue;
      const ParamFraction factor = m[r][col];
      for (std::size_t c = 0; c < columns; ++c) m[r][c] -= factor * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  m.resize(row);
  return pivots;
}

}  // namespace

std::vector<std::vector<ParamFraction>> null_space(std::vector<std::vector<ParamFraction>> matrix,
                                                   std::size_t columns, std::size_t num_params) {
  const std::vector<std::size_t> pivots = rref(matrix, columns);
  std::vector<bool> is_pivot(columns, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<ParamFraction>> basis;
  for (std::size_t free = 0; free < columns; ++free) {
    if (is_pivot[free]) continue;
    std::vector<ParamFraction> v(columns, ParamFraction(num_params));
    v[free] = ParamFraction(Rational(1), num_params);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -matrix[r][free];
    basis.push_back(std::move(v));
  }
  rref(basis, columns);
  return basis;
}

PlanarityResult detect_planes(const IdealSpec& ideal) {
  const ContextPtr& ctx = ideal.context();
  if (ctx->num_variables() != 3) throw UsageError("plane detection needs exactly three variables");
  GroebnerBasis basis = reduced_groebner_basis(ideal);
  if (basis.is_unit()) return {PlanarityStatus::empty_variety, {}, std::move(basis)};

  const std::size_t np = ctx->num_params();
  std::array<Polynomial, 4> forms{Polynomial::variable(ctx, 0), Polynomial::variable(ctx, 1),
                                  Polynomial::variable(ctx, 2), Polynomial::constant(ctx, Rational(1))};
  if (!basis.empty())
    for (auto& f : forms) f = normal_form(f, basis);

  // One row per standard monomial occurring in the normal forms.
  std::map<std::vector<std::uint32_t>, std::vector<ParamFraction>> rows;
  for (std::size_t col = 0; col < forms.size(); ++col) {
    for (const auto& t : forms[col].terms()) {
      auto [it, inserted] = rows.try_emplace(t.monomial.exponents(), 4, ParamFraction(np));
      it->second[col] = t.coefficient;
    }
  }
  std::vector<std::vector<ParamFraction>> matrix;
  matrix.reserve(rows.size());
  for (auto& [m, row] : rows) matrix.push_back(std::move(row));

  PlaneFamily family;
  for (auto& v : null_space(std::move(matrix), 4, np)) {
    if (v[0].is_zero() && v[1].is_zero() && v[2].is_zero()) continue;
    family.planes.push_back({v[0], v[1], v[2], v[3]});
  }
  const PlanarityStatus status = family.planes.empty() ? PlanarityStatus::none : PlanarityStatus::planes;
  return {status, std::move(family), std::move(basis)};
}

}  // namespace gbsect
