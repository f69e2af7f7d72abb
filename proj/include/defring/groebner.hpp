#pragma once

#include <vector>

#include "defring/order.hpp"
#include "defring/polynomial.hpp"

namespace defring {

namespace detail {

struct Term {
  Monomial m;  // priority coordinates
  Rational c;
};

// Terms sorted strictly decreasing in the active order.
using SortedPoly = std::vector<Term>;

}  // namespace detail

struct GroebnerStats {
  std::size_t pairs_considered = 0;
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
};

// Reduced, monic Groebner basis; elements sorted by leading monomial
// ascending, so the basis of a given ideal and order is unique.
class GroebnerBasis {
 public:
  GroebnerBasis(RosterPtr roster, TermOrder order, std::vector<detail::SortedPoly> elements, GroebnerStats stats);

  const RosterPtr& roster() const { return roster_; }
  const TermOrder& order() const { return order_; }
  const std::vector<Polynomial>& elements() const { return elements_; }
  const GroebnerStats& stats() const { return stats_; }
  std::size_t size() const { return elements_.size(); }

  bool is_unit() const;
  bool is_zero() const { return elements_.empty(); }

  Polynomial normal_form(const Polynomial& f) const;
  bool reduces_to_zero(const Polynomial& f) const;
  Monomial leading_monomial(std::size_t i) const;  // roster coordinates

  // Sorted terms of a polynomial in this basis's order, largest first.
  std::vector<std::pair<Monomial, Rational>> sorted_terms(const Polynomial& f) const;

 private:
  RosterPtr roster_;
  TermOrder order_;
  std::vector<detail::SortedPoly> internal_;
  std::vector<Polynomial> elements_;
  GroebnerStats stats_;
};

GroebnerBasis groebner(const RosterPtr& roster, const std::vector<Polynomial>& generators, const TermOrder& order);

}  // namespace defring
