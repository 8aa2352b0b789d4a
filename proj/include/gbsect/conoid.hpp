#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "gbsect/groebner.hpp"

namespace gbsect {

/// Shape parameters of the egg-curve conoid. Symbolic parameters live in the
/// coefficient field as a, b, d, h; numeric ones must satisfy
/// a > b > 0, a − b ≥ d > 0 and h > 0.
class ConoidParams {
 public:
  static ConoidParams symbolic() { return ConoidParams(); }
  /// Throws ValidationError when the inequalities fail.
  static ConoidParams numeric(const Rational& a, const Rational& b, const Rational& d, const Rational& h);

  bool is_symbolic() const { return !values_.has_value(); }
  /// Numeric values (a, b, d, h); throws UsageError for symbolic parameters.
  const std::array<Rational, 4>& values() const;

  /// Context with variables x, y, z and, for symbolic parameters, a, b, d, h
  /// followed by `extra_params`.
  ContextPtr context(const std::vector<std::string>& extra_params = {}) const;
  /// Context with extra variables after x, y, z.
  ContextPtr context_with_variables(const std::vector<std::string>& extra_variables,
                                    const std::vector<std::string>& extra_params = {}) const;

  /// a, b, d or h as an element of the coefficient field of `ctx`.
  ParamFraction value(char name, const ContextPtr& ctx) const;

 private:
  ConoidParams() = default;
  std::optional<std::array<Rational, 4>> values_;
};

/// b²x² + a²y² + 2dxy² + d²y² − a²b².
Polynomial egg_curve(const ConoidParams& params, const ContextPtr& ctx = nullptr);

/// (a²y² + d²y² − a²b²)(z − h)² − 2dhxy²(z − h) + b²h²x², expanded.
Polynomial conoid_surface(const ConoidParams& params, const ContextPtr& ctx = nullptr);

/// Checks (z − h)·quartic = (a²y² + d²y² − a²b²)(z − h)³ − 2dhxy²(z − h)² + b²h²x²(z − h).
bool quintic_decomposition_check(const ConoidParams& params);
bool quintic_decomposition_check(const ConoidParams& params, const Polynomial& quartic);

enum class Axis { x, y, z };

enum class SectionKind { quartic_curve, cubic_curve, line_pair, double_line, degenerate_locus, empty };

std::string to_string(Axis axis);
std::string to_string(SectionKind kind);

/// Intersection of the conoid with an axis-parallel plane.
struct SectionReport {
  Axis axis;
  Rational value;
  SectionKind kind;
  /// Surface polynomial restricted to the plane.
  Polynomial section;
  /// y-sections: Δ = (b² − β²)(a²b² − d²β²).
  std::optional<Rational> discriminant;
  /// y-sections: |β| ≤ b ∨ |β| ≥ ab/d.
  std::optional<bool> real_lines_condition;
  /// Rational witness lines x − k(z − h), each lying in the plane.
  std::vector<Polynomial> lines;
  /// y-sections: both lines vanish modulo s² − Δ.
  std::optional<bool> lines_verified;
  /// Degenerate loci: section = c · Π factors for a nonzero constant c.
  std::vector<Polynomial> factors;
  std::string locus;
};

/// Classifies the section of the conoid by x = α, y = β or z = γ. Requires
/// numeric parameters.
SectionReport axis_section(const ConoidParams& params, Axis axis, const Rational& value);

/// Adjoins s with s² = (b² − β²)(a²b² − d²β²) and checks that both lines
/// x = (z − h)(dβ² ± s)/(b²h), y = β lie on the conoid modulo s² − Δ.
/// With `beta` empty, β is a fresh parameter. Throws UsageError when a
/// numeric β violates |β| ≤ b ∨ |β| ≥ ab/d for numeric parameters.
bool verify_section_lines(const ConoidParams& params, const std::optional<Rational>& beta);

enum class ProjectionCase { c_nonzero, c_zero_b_nonzero };

/// Context with variables x, y, z and parameters a, b, d, h, A, B, C, D.
ContextPtr projection_context();

/// Conoid restricted to A·x + B·y + C·z + D = 0 by eliminating z
/// (C ≠ 0) or y (C = 0, B ≠ 0), symbolic in all parameters.
Polynomial plane_projection(ProjectionCase which);

/// Context with variables A, B, D and parameters a, b, d, h.
ContextPtr constraint_context();

/// Vanishing conditions for the quartic and cubic parts of the C ≠ 0
/// projection with C = 1: coefficients of x²y², xy³, y⁴, xy², y³.
std::vector<Polynomial> conic_constraints();

/// Candidate planes (A, B, C, D) with a free nonzero scale p or q.
struct ConicCandidateFamily {
  int id;
  std::string scale;
  ContextPtr context;
  ParamFraction a;
  ParamFraction b;
  ParamFraction c;
  ParamFraction d;

  /// The plane as a polynomial in x, y, z of `context`.
  Polynomial plane() const;
  /// (A/C, B/C, D/C) expressed in constraint_context()'s coefficient field.
  std::array<ParamFraction, 3> normalized() const;
};

ConicCandidateFamily candidate_family(int id);

struct ConicConstraintAnalysis {
  std::vector<Polynomial> constraints;
  GroebnerBasis basis;
  std::vector<ConicCandidateFamily> families;
  /// Each family annihilates every constraint.
  std::vector<bool> family_satisfies;
  /// B is an element of the reduced basis.
  bool b_forced_zero = false;
  /// The basis is triangular, one element per variable, and its zero set is
  /// exactly the normalized families.
  bool solutions_are_families = false;
};

ConicConstraintAnalysis solve_conic_constraints();

struct VerdictReport {
  GroebnerBasis family1_basis;
  GroebnerBasis family2_basis;
  /// Both candidate sections lie set-theoretically on the line x = 0, z = h.
  bool families_on_directrix = false;
  ConicConstraintAnalysis constraint_analysis;
  /// C = 0, B ≠ 0: coefficient of x³z after eliminating y.
  ParamFraction x3z_coefficient;
  GroebnerBasis x3z_basis;
  bool a_forced_zero = false;
  /// C = B = 0, A ≠ 0: degree of the section x = α for symbolic α.
  std::uint32_t x_section_degree = 0;
  /// y = β sections split into two lines modulo s² − Δ.
  bool y_sections_are_line_pairs = false;
  bool no_nondegenerate_conic = false;
  std::vector<std::string> lines;
};

VerdictReport final_verdict();

}  // namespace gbsect
