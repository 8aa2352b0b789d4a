#include "gbsect/groebner.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "gbsect/division.hpp"
#include "gbsect/errors.hpp"

namespace gbsect {

namespace {

bool descending_lm(const Polynomial& a, const Polynomial& b) {
  return compare_monomials(a.leading_monomial(), b.leading_monomial()) == std::strong_ordering::greater;
}

}  // namespace

IdealSpec::IdealSpec(ContextPtr context, std::vector<Polynomial> generators, MonomialOrder order)
    : context_(std::move(context)), order_(order) {
  for (auto& g : generators) {
    if (!same_context(context_, g.context())) throw UsageError("generator from a different context");
    if (!g.is_zero()) generators_.push_back(std::move(g));
  }
}

GroebnerBasis::GroebnerBasis(ContextPtr context, std::vector<Polynomial> elements, MonomialOrder order, bool reduced)
    : context_(std::move(context)), elements_(std::move(elements)), order_(order), reduced_(reduced) {
  for (const auto& g : elements_) {
    if (g.is_zero()) throw UsageError("a basis element is zero");
    if (!same_context(context_, g.context())) throw UsageError("basis element from a different context");
  }
}

bool GroebnerBasis::is_unit() const {
  return std::any_of(elements_.begin(), elements_.end(), [](const Polynomial& g) { return g.is_constant(); });
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, MonomialOrder /*order*/) {
  if (f.is_zero() || g.is_zero()) throw UsageError("S-polynomial of a zero polynomial");
  if (!same_context(f.context(), g.context())) throw UsageError("polynomials from different contexts");
  const Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  const Term tf{f.leading_coefficient().inverse(), l / f.leading_monomial()};
  const Term tg{g.leading_coefficient().inverse(), l / g.leading_monomial()};
  return f.times_term(tf) - g.times_term(tg);
}

namespace {

struct Pair {
  std::uint32_t sugar;
  Monomial lcm;
  std::size_t i;
  std::size_t j;
};

// Normal selection strategy: smallest lcm first, sugar degree and indices
// break ties.
struct PairLess {
  bool operator()(const Pair& a, const Pair& b) const {
    if (const auto c = compare_monomials(a.lcm, b.lcm); c != 0) return c < 0;
    return std::tie(a.sugar, a.i, a.j) < std::tie(b.sugar, b.i, b.j);
  }
};

using PairSet = std::set<Pair, PairLess>;

// Basis elements with their sugar degrees.
struct Work {
  std::vector<Polynomial> basis;
  std::vector<std::uint32_t> sugar;

  void add(Polynomial p, std::uint32_t s) {
    basis.push_back(std::move(p));
    sugar.push_back(s);
  }
};

Pair make_pair_of(const Work& w, std::size_t i, std::size_t j) {
  Monomial l = lcm(w.basis[i].leading_monomial(), w.basis[j].leading_monomial());
  const std::uint32_t d = l.total_degree();
  const std::uint32_t s = std::max(w.sugar[i] + d - w.basis[i].leading_monomial().total_degree(),
                                   w.sugar[j] + d - w.basis[j].leading_monomial().total_degree());
  return {s, std::move(l), i, j};
}

// Gebauer-Moeller installation of basis[h] into the active set and pair queue.
void update(const Work& w, std::vector<std::size_t>& active, PairSet& pairs, std::size_t h) {
  const std::vector<Polynomial>& basis = w.basis;
  const Monomial& lh = basis[h].leading_monomial();
  std::vector<Pair> candidates;
  for (std::size_t g : active) candidates.push_back(make_pair_of(w, g, h));

  // Chain criterion among the new pairs: keep (g, h) unless another new pair has
  // a strictly smaller lcm dividing it, or an equal lcm that was already kept.
  std::vector<Pair> kept;
  for (std::size_t a = 0; a < candidates.size(); ++a) {
    const Pair& p = candidates[a];
    const bool coprime = gcd(basis[p.i].leading_monomial(), lh).is_one();
    bool redundant = false;
    if (!coprime) {
      for (std::size_t b = 0; b < candidates.size() && !redundant; ++b) {
        if (a == b || !candidates[b].lcm.divides(p.lcm)) continue;
        if (candidates[b].lcm != p.lcm) {
          redundant = true;
        } else if (b < a) {
          redundant = true;
        }
      }
    }
    if (!redundant) kept.push_back(p);
  }
  // Among pairs sharing an lcm, one coprime pair makes all of them redundant.
  std::vector<Pair> fresh;
  for (const auto& p : kept) {
    const bool shares_coprime = std::any_of(kept.begin(), kept.end(), [&](const Pair& q) {
      return q.lcm == p.lcm && gcd(basis[q.i].leading_monomial(), lh).is_one();
    });
    if (!shares_coprime) fresh.push_back(p);
  }

  // Old pairs whose lcm is divisible by LM(h) with both new lcms different.
  for (auto it = pairs.begin(); it != pairs.end();) {
    const bool drop = lh.divides(it->lcm) && lcm(basis[it->i].leading_monomial(), lh) != it->lcm &&
                      lcm(basis[it->j].leading_monomial(), lh) != it->lcm;
    it = drop ? pairs.erase(it) : std::next(it);
  }
  pairs.insert(fresh.begin(), fresh.end());

  std::erase_if(active, [&](std::size_t g) { return lh.divides(basis[g].leading_monomial()); });
  active.push_back(h);
}

std::vector<Polynomial> gather(const std::vector<Polynomial>& basis, const std::vector<std::size_t>& indices) {
  std::vector<Polynomial> out;
  out.reserve(indices.size());
  for (std::size_t k : indices) out.push_back(basis[k]);
  return out;
}

Work initial(const IdealSpec& ideal) {
  Work w;
  for (const auto& g : ideal.generators()) w.add(g, g.total_degree());
  return w;
}

GroebnerBasis all_pairs(const IdealSpec& ideal) {
  Work w = initial(ideal);
  PairSet pairs;
  for (std::size_t k = 1; k < w.basis.size(); ++k)
    for (std::size_t i = 0; i < k; ++i) pairs.insert(make_pair_of(w, i, k));
  while (!pairs.empty()) {
    const Pair p = *pairs.begin();
    pairs.erase(pairs.begin());
    Polynomial r = remainder(s_polynomial(w.basis[p.i], w.basis[p.j], ideal.order()), w.basis, ideal.order());
    if (r.is_zero()) continue;
    w.add(r.monic(), p.sugar);
    for (std::size_t i = 0; i + 1 < w.basis.size(); ++i) pairs.insert(make_pair_of(w, i, w.basis.size() - 1));
  }
  return GroebnerBasis(ideal.context(), std::move(w.basis), ideal.order(), false);
}

}  // namespace

GroebnerBasis buchberger(const IdealSpec& ideal, BuchbergerOptions options) {
  if (!options.coprime_criterion) return all_pairs(ideal);
  Work w = initial(ideal);
  std::vector<std::size_t> active;
  PairSet pairs;
  for (std::size_t k = 0; k < w.basis.size(); ++k) update(w, active, pairs, k);

  std::vector<Polynomial> reducers = gather(w.basis, active);
  while (!pairs.empty()) {
    const Pair p = *pairs.begin();
    pairs.erase(pairs.begin());
    Polynomial r = remainder(s_polynomial(w.basis[p.i], w.basis[p.j], ideal.order()), reducers, ideal.order());
    if (r.is_zero()) continue;
    w.add(r.monic(), p.sugar);
    update(w, active, pairs, w.basis.size() - 1);
    reducers = gather(w.basis, active);
  }
  return GroebnerBasis(ideal.context(), std::move(w.basis), ideal.order(), false);
}

GroebnerBasis minimalize(const GroebnerBasis& basis) {
  std::vector<Polynomial> sorted = basis.elements();
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const Polynomial& a, const Polynomial& b) { return descending_lm(b, a); });
  std::vector<Polynomial> kept;
  for (const auto& g : sorted) {
    const bool redundant = std::any_of(kept.begin(), kept.end(), [&](const Polynomial& h) {
      return h.leading_monomial().divides(g.leading_monomial());
    });
    if (!redundant) kept.push_back(g.monic());
  }
  std::stable_sort(kept.begin(), kept.end(), descending_lm);
  return GroebnerBasis(basis.context(), std::move(kept), basis.order(), false);
}

GroebnerBasis reduce_basis(const GroebnerBasis& basis) {
  std::vector<Polynomial> elements = basis.elements();
  for (std::size_t i = 0; i < elements.size(); ++i) {
    std::vector<Polynomial> others;
    others.reserve(elements.size() - 1);
    for (std::size_t j = 0; j < elements.size(); ++j)
      if (j != i) others.push_back(elements[j]);
    elements[i] = remainder(elements[i], others, basis.order()).monic();
  }
  std::stable_sort(elements.begin(), elements.end(), descending_lm);
  return GroebnerBasis(basis.context(), std::move(elements), basis.order(), true);
}

GroebnerBasis reduced_groebner_basis(const IdealSpec& ideal, BuchbergerOptions options) {
  return reduce_basis(minimalize(buchberger(ideal, options)));
}

bool is_groebner(std::span<const Polynomial> elements, MonomialOrder order) {
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (std::size_t j = i + 1; j < elements.size(); ++j)
      if (!remainder(s_polynomial(elements[i], elements[j], order), elements, order).is_zero()) return false;
  return true;
}

}  // namespace gbsect
