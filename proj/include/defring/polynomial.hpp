#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "defring/rational.hpp"

namespace defring {

// Thrown for structural misuse: mixing rosters, unknown variables, etc.
class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kMaxVars = 32;

// Dense exponent vector. Fixed capacity keeps monomials allocation-free,
// which matters inside the reduction loops.
class Monomial {
 public:
  Monomial() { e_.fill(0); }

  std::uint16_t operator[](std::size_t i) const { return e_[i]; }
  void set(std::size_t i, unsigned v);

  unsigned degree() const;
  bool is_one() const;
  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  Monomial operator*(const Monomial& other) const;
  // Caller guarantees divisibility.
  Monomial operator/(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;

  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;

 private:
  std::array<std::uint16_t, kMaxVars> e_;
};

class Roster;
using RosterPtr = std::shared_ptr<const Roster>;

// Ordered list of variable names. Compared by content.
class Roster {
 public:
  explicit Roster(std::vector<std::string> names);
  static RosterPtr make(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> find(std::string_view name) const;
  std::size_t index(std::string_view name) const;
  bool contains(std::string_view name) const { return find(name).has_value(); }

  bool operator==(const Roster& other) const { return names_ == other.names_; }
  std::string str() const;

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
};

bool same_roster(const RosterPtr& a, const RosterPtr& b);
void require_same_roster(const RosterPtr& a, const RosterPtr& b, const char* where);

class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational>;

  Polynomial() = default;  // roster-less zero; only useful as a placeholder
  explicit Polynomial(RosterPtr roster);
  Polynomial(RosterPtr roster, const Rational& c);
  Polynomial(RosterPtr roster, long c) : Polynomial(std::move(roster), Rational(c)) {}

  static Polynomial variable(const RosterPtr& roster, std::string_view name);
  static Polynomial term(const RosterPtr& roster, const Monomial& m, const Rational& c);

  const RosterPtr& roster() const { return roster_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  Rational coefficient(const Monomial& m) const;
  unsigned total_degree() const;
  unsigned degree_in(std::size_t var) const;
  bool involves(std::size_t var) const;
  std::vector<std::size_t> variables() const;

  void add_term(const Monomial& m, const Rational& c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  Polynomial operator-() const;
  Polynomial pow(unsigned n) const;

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator+(Polynomial a, const Rational& c);
  friend Polynomial operator-(Polynomial a, const Rational& c);

  bool operator==(const Polynomial& o) const;

  // Divide every coefficient so that the coefficient of the largest term
  // (in the roster-order grevlex sense) is 1. Zero stays zero.
  Polynomial monic() const;

  // If every term is divisible by var^k, returns the quotient; else nullopt.
  std::optional<Polynomial> divide_by_power(std::size_t var, unsigned k) const;

  // Re-express over another roster by name. Every variable actually used
  // must exist in the target roster.
  Polynomial transport(const RosterPtr& target) const;

  std::string str() const;

 private:
  RosterPtr roster_;
  TermMap terms_;
};

// Convenience: build a list of variables by name.
std::vector<Polynomial> variables(const RosterPtr& roster, const std::vector<std::string>& names);

}  // namespace defring
