#pragma once

#include <span>
#include <vector>

#include "gbsect/polynomial.hpp"

namespace gbsect {

/// Generators of an ideal together with the order used to compute with it.
/// Zero generators are dropped; an empty list is the zero ideal.
class IdealSpec {
 public:
  IdealSpec(ContextPtr context, std::vector<Polynomial> generators, MonomialOrder order = MonomialOrder::lex());

  const ContextPtr& context() const { return context_; }
  const std::vector<Polynomial>& generators() const { return generators_; }
  MonomialOrder order() const { return order_; }
  bool is_zero_ideal() const { return generators_.empty(); }

 private:
  ContextPtr context_;
  std::vector<Polynomial> generators_;
  MonomialOrder order_;
};

class GroebnerBasis {
 public:
  GroebnerBasis(ContextPtr context, std::vector<Polynomial> elements, MonomialOrder order = MonomialOrder::lex(),
                bool reduced = false);

  const ContextPtr& context() const { return context_; }
  const std::vector<Polynomial>& elements() const { return elements_; }
  MonomialOrder order() const { return order_; }
  bool reduced() const { return reduced_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  /// True when the basis is {1}, i.e. the ideal is the whole ring.
  bool is_unit() const;

  friend bool operator==(const GroebnerBasis& lhs, const GroebnerBasis& rhs) {
    return lhs.order_ == rhs.order_ && lhs.elements_ == rhs.elements_;
  }

 private:
  ContextPtr context_;
  std::vector<Polynomial> elements_;
  MonomialOrder order_;
  bool reduced_;
};

/// S(f, g) = (L/LT f)·f − (L/LT g)·g with L = lcm(LM f, LM g).
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, MonomialOrder order = MonomialOrder::lex());

struct BuchbergerOptions {
  /// Skip pairs whose leading monomials are coprime and pairs made redundant by
  /// the chain criterion. When false every pair is reduced.
  bool coprime_criterion = true;
};

/// Unreduced basis containing the (nonzero) input generators.
GroebnerBasis buchberger(const IdealSpec& ideal, BuchbergerOptions options = {});

/// Monic elements whose leading monomials are pairwise non-dividing.
GroebnerBasis minimalize(const GroebnerBasis& basis);

/// The unique reduced basis; expects a minimal basis.
GroebnerBasis reduce_basis(const GroebnerBasis& basis);

/// buchberger → minimalize → reduce_basis.
GroebnerBasis reduced_groebner_basis(const IdealSpec& ideal, BuchbergerOptions options = {});

/// Buchberger criterion: every pairwise S-polynomial reduces to zero.
bool is_groebner(std::span<const Polynomial> elements, MonomialOrder order = MonomialOrder::lex());

}  // namespace gbsect
