#pragma once

#include <string>
#include <vector>

#include "defring/polynomial.hpp"

namespace defring {

enum class OrderKind { lex, grevlex, block };

// A term order over a roster, given by a variable priority list.
// `block` orders compare the first `block_size` prioritized variables by
// grevlex first and break ties by grevlex on the rest; that is the
// elimination order used for intersections, saturations and preimages.
class TermOrder {
 public:
  static TermOrder lex(const Roster& roster, const std::vector<std::string>& priority = {});
  static TermOrder grevlex(const Roster& roster, const std::vector<std::string>& priority = {});
  static TermOrder elimination(const Roster& roster, const std::vector<std::string>& eliminate);

  OrderKind kind() const { return kind_; }
  std::size_t block_size() const { return block_; }
  // priority()[k] is the roster index of the k-th most significant variable.
  const std::vector<std::size_t>& priority() const { return priority_; }
  std::size_t nvars() const { return priority_.size(); }

  // Compare in roster coordinates: <0, 0, >0.
  int compare(const Monomial& a, const Monomial& b) const;

  // Map roster coordinates to priority coordinates and back.
  Monomial to_internal(const Monomial& m) const;
  Monomial to_external(const Monomial& m) const;

  // Order comparison on monomials already in priority coordinates.
  int compare_internal(const Monomial& a, const Monomial& b) const;

  std::string describe(const Roster& roster) const;
  bool operator==(const TermOrder&) const = default;

 private:
  TermOrder(OrderKind kind, std::vector<std::size_t> priority, std::size_t block)
      : kind_(kind), priority_(std::move(priority)), block_(block) {}

  OrderKind kind_;
  std::vector<std::size_t> priority_;
  std::size_t block_ = 0;
};

int compare_grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi);

}  // namespace defring
