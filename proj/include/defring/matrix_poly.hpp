#pragma once

#include <array>
#include <string>
#include <vector>

#include "defring/ideal.hpp"

namespace defring {

// Polynomial in the formal variable u with coefficients in Q[roster].
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(RosterPtr roster) : roster_(std::move(roster)) {}
  UPoly(RosterPtr roster, std::vector<Polynomial> coeffs);

  static UPoly constant(const Polynomial& c);
  static UPoly u(const RosterPtr& roster);
  // u - root
  static UPoly linear(const Polynomial& root);

  const RosterPtr& roster() const { return roster_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return coeffs_.empty(); }
  Polynomial coeff(std::size_t i) const;
  const std::vector<Polynomial>& coeffs() const { return coeffs_; }

  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  UPoly operator-() const;
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const Polynomial& c, const UPoly& a);
  bool operator==(const UPoly& o) const;

  UPoly derivative() const;
  // Exact division by (u - root); throws if the remainder is nonzero.
  UPoly divide_linear(const Polynomial& root) const;
  bool divisible_linear(const Polynomial& root) const;
  UPoly map(const RingMap& m) const;
  UPoly transport(const RosterPtr& target) const;

  std::string str(const std::string& var = "u") const;

 private:
  void trim();
  RosterPtr roster_;
  std::vector<Polynomial> coeffs_;
};

// 2x2 matrix over Q[roster][u]. Indices are 0-based: at(1, 0) is the
// lower-left entry.
class MatrixPoly {
 public:
  MatrixPoly() = default;
  MatrixPoly(UPoly a11, UPoly a12, UPoly a21, UPoly a22);
  static MatrixPoly identity(const RosterPtr& roster);
  static MatrixPoly diagonal(const UPoly& d1, const UPoly& d2);

  const UPoly& at(std::size_t i, std::size_t k) const { return e_[2 * i + k]; }
  UPoly& at(std::size_t i, std::size_t k) { return e_[2 * i + k]; }
  const RosterPtr& roster() const { return e_[0].roster(); }

  friend MatrixPoly operator*(const MatrixPoly& a, const MatrixPoly& b);
  friend MatrixPoly operator+(const MatrixPoly& a, const MatrixPoly& b);
  friend MatrixPoly operator-(const MatrixPoly& a, const MatrixPoly& b);
  friend MatrixPoly operator*(const UPoly& s, const MatrixPoly& a);
  bool operator==(const MatrixPoly& o) const;

  UPoly det() const;
  MatrixPoly adjugate() const;
  MatrixPoly derivative() const;
  MatrixPoly map(const RingMap& m) const;
  MatrixPoly transport(const RosterPtr& target) const;

  std::string str(const std::string& var = "u") const;

 private:
  std::array<UPoly, 4> e_;
};

}  // namespace defring
