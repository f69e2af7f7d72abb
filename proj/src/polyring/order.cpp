#include "defring/order.hpp"

#include <numeric>
#include <set>
#include <sstream>

namespace defring {

namespace {

std::vector<std::size_t> resolve_priority(const Roster& roster, const std::vector<std::string>& names) {
  std::vector<std::size_t> out;
  std::set<std::size_t> seen;
  for (const auto& n : names) {
    std::size_t i = roster.index(n);
    if (!seen.insert(i).second) throw AlgebraError("term order: duplicate variable " + n);
    out.push_back(i);
  }
  // Unlisted variables follow in roster order.
  for (std::size_t i = 0; i < roster.size(); ++i)
    if (!seen.count(i)) out.push_back(i);
  return out;
}

const char* kind_name(OrderKind k) {
  switch (k) {
    case OrderKind::lex: return "lex";
    case OrderKind::grevlex: return "grevlex";
    case OrderKind::block: return "block";
  }
  return "?";
}

}  // namespace

int compare_grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  unsigned da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

TermOrder TermOrder::lex(const Roster& roster, const std::vector<std::string>& priority) {
  return TermOrder(OrderKind::lex, resolve_priority(roster, priority), 0);
}

TermOrder TermOrder::grevlex(const Roster& roster, const std::vector<std::string>& priority) {
  return TermOrder(OrderKind::grevlex, resolve_priority(roster, priority), 0);
}

TermOrder TermOrder::elimination(const Roster& roster, const std::vector<std::string>& eliminate) {
  return TermOrder(OrderKind::block, resolve_priority(roster, eliminate), eliminate.size());
}

int TermOrder::compare_internal(const Monomial& a, const Monomial& b) const {
  const std::size_t n = priority_.size();
  switch (kind_) {
    case OrderKind::lex:
      for (std::size_t i = 0; i < n; ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
      return 0;
    case OrderKind::grevlex:
      return compare_grevlex_range(a, b, 0, n);
    case OrderKind::block: {
      int c = compare_grevlex_range(a, b, 0, block_);
      if (c != 0) return c;
      return compare_grevlex_range(a, b, block_, n);
    }
  }
  return 0;
}

Monomial TermOrder::to_internal(const Monomial& m) const {
  Monomial out;
  for (std::size_t k = 0; k < priority_.size(); ++k) out.set(k, m[priority_[k]]);
  return out;
}

Monomial TermOrder::to_external(const Monomial& m) const {
  Monomial out;
  for (std::size_t k = 0; k < priority_.size(); ++k) out.set(priority_[k], m[k]);
  return out;
}

int TermOrder::compare(const Monomial& a, const Monomial& b) const {
  return compare_internal(to_internal(a), to_internal(b));
}

std::string TermOrder::describe(const Roster& roster) const {
  std::ostringstream os;
  os << kind_name(kind_) << "(";
  for (std::size_t k = 0; k < priority_.size(); ++k) {
    if (k) os << (kind_ == OrderKind::block && k == block_ ? "|" : ">");
    os << roster.name(priority_[k]);
  }
  os << ")";
  return os.str();
}

}  // namespace defring
