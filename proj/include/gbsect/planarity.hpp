#pragma once

#include <array>
#include <optional>
#include <vector>

#include "gbsect/groebner.hpp"

namespace gbsect {

/// A·x + B·y + C·z + D over the three variables of a context.
struct Plane {
  ParamFraction a;
  ParamFraction b;
  ParamFraction c;
  ParamFraction d;

  Polynomial to_polynomial(const ContextPtr& context) const;
  friend bool operator==(const Plane&, const Plane&) = default;
};

/// Basis of all linear members of an ideal, each scaled so that the first
/// nonzero of (A, B, C) is 1. Two or more planes mean the solutions lie on a line.
struct PlaneFamily {
  std::vector<Plane> planes;
};

/// Whether x, y, z lie in ⟨LT(I)⟩, read off the reduced basis.
struct LTMembershipReport {
  std::array<bool, 3> in_lt_ideal{};

  bool x() const { return in_lt_ideal[0]; }
  bool y() const { return in_lt_ideal[1]; }
  bool z() const { return in_lt_ideal[2]; }
  /// y ∉ ⟨LT(I)⟩ ∧ z ∉ ⟨LT(I)⟩.
  bool admits_reduced_plane() const { return !y() && !z(); }
};

enum class PlanarityStatus { planes, none, empty_variety };

struct PlanarityResult {
  PlanarityStatus status;
  PlaneFamily family;
  GroebnerBasis basis;
};

/// First basis element of degree ≤ 1 with a nonzero linear part, if any.
/// Absence does not imply non-planarity.
std::optional<Polynomial> scan_linear(const GroebnerBasis& basis);

LTMembershipReport lt_membership(const GroebnerBasis& basis);

/// Decides linear membership in the ideal: solves A·NF(x) + B·NF(y) + C·NF(z)
/// + D·NF(1) = 0 exactly over the coefficient field. Requires exactly three
/// variables in the context.
PlanarityResult detect_planes(const IdealSpec& ideal);

/// Null space of a dense matrix over Q(parameters) as the rows of its
/// reduced row echelon form (pivot entries 1).
std::vector<std::vector<ParamFraction>> null_space(std::vector<std::vector<ParamFraction>> matrix,
                                                   std::size_t columns, std::size_t num_params);

}  // namespace gbsect
