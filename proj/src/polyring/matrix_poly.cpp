#include "defring/matrix_poly.hpp"

#include <sstream>

namespace defring {

UPoly::UPoly(RosterPtr roster, std::vector<Polynomial> coeffs) : roster_(std::move(roster)), coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) {
    if (c.is_zero() && !c.roster()) c = Polynomial(roster_);
    require_same_roster(roster_, c.roster(), "upoly");
  }
  trim();
}

UPoly UPoly::constant(const Polynomial& c) { return UPoly(c.roster(), {c}); }

UPoly UPoly::u(const RosterPtr& roster) { return UPoly(roster, {Polynomial(roster), Polynomial(roster, 1)}); }

UPoly UPoly::linear(const Polynomial& root) { return UPoly(root.roster(), {-root, Polynomial(root.roster(), 1)}); }

Polynomial UPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Polynomial(roster_); }

void UPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (!roster_) roster_ = o.roster_;
  if (o.roster_) require_same_roster(roster_, o.roster_, "upoly +");
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Polynomial(roster_));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) { return *this += -o; }

UPoly UPoly::operator-() const {
  UPoly r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  require_same_roster(a.roster_, b.roster_, "upoly *");
  if (a.is_zero() || b.is_zero()) return UPoly(a.roster_);
  std::vector<Polynomial> out(a.coeffs_.size() + b.coeffs_.size() - 1, Polynomial(a.roster_));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return UPoly(a.roster_, std::move(out));
}

UPoly operator*(const Polynomial& c, const UPoly& a) { return UPoly::constant(c) * a; }

bool UPoly::operator==(const UPoly& o) const {
  if (coeffs_.size() != o.coeffs_.size()) return false;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (!(coeffs_[i] == o.coeffs_[i])) return false;
  return true;
}

UPoly UPoly::derivative() const {
  std::vector<Polynomial> out;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out.push_back(coeffs_[i] * Rational(static_cast<long>(i)));
  return UPoly(roster_, std::move(out));
}

UPoly UPoly::divide_linear(const Polynomial& root) const {
  // Synthetic division from the top coefficient down.
  if (coeffs_.empty()) return *this;
  const std::size_t n = coeffs_.size();
  std::vector<Polynomial> q(n - 1, Polynomial(roster_));
  Polynomial carry(roster_);
  for (std::size_t k = n; k-- > 1;) {
    carry = coeffs_[k] + root * carry;
    q[k - 1] = carry;
  }
  Polynomial rem = coeffs_[0] + root * carry;
  if (!rem.is_zero()) throw AlgebraError("divide_linear: nonzero remainder " + rem.str());
  return UPoly(roster_, std::move(q));
}

bool UPoly::divisible_linear(const Polynomial& root) const {
  try {
    (void)divide_linear(root);
    return true;
  } catch (const AlgebraError&) {
    return false;
  }
}

UPoly UPoly::map(const RingMap& m) const {
  std::vector<Polynomial> out;
  for (const auto& c : coeffs_) out.push_back(m(c));
  return UPoly(m.target(), std::move(out));
}

UPoly UPoly::transport(const RosterPtr& target) const {
  std::vector<Polynomial> out;
  for (const auto& c : coeffs_) out.push_back(c.transport(target));
  return UPoly(target, std::move(out));
}

std::string UPoly::str(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    if (coeffs_[k].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    std::string c = coeffs_[k].str();
    if (k == 0) {
      os << c;
      continue;
    }
    if (c != "1") os << "(" << c << ")*";
    os << var;
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

// ---- MatrixPoly ----

MatrixPoly::MatrixPoly(UPoly a11, UPoly a12, UPoly a21, UPoly a22)
    : e_{std::move(a11), std::move(a12), std::move(a21), std::move(a22)} {
  RosterPtr r;
  for (const auto& x : e_)
    if (x.roster()) r = x.roster();
  if (!r) throw AlgebraError("matrix: no roster");
  for (auto& x : e_) {
    if (!x.roster()) x = UPoly(r);
    require_same_roster(r, x.roster(), "matrix");
  }
}

MatrixPoly MatrixPoly::identity(const RosterPtr& roster) {
  UPoly one = UPoly::constant(Polynomial(roster, 1));
  return MatrixPoly(one, UPoly(roster), UPoly(roster), one);
}

MatrixPoly MatrixPoly::diagonal(const UPoly& d1, const UPoly& d2) {
  return MatrixPoly(d1, UPoly(d1.roster()), UPoly(d1.roster()), d2);
}

MatrixPoly operator*(const MatrixPoly& a, const MatrixPoly& b) {
  MatrixPoly r;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t k = 0; k < 2; ++k) r.at(i, k) = a.at(i, 0) * b.at(0, k) + a.at(i, 1) * b.at(1, k);
  return r;
}

MatrixPoly operator+(const MatrixPoly& a, const MatrixPoly& b) {
  MatrixPoly r;
  for (std::size_t i = 0; i < 4; ++i) r.e_[i] = a.e_[i] + b.e_[i];
  return r;
}

MatrixPoly operator-(const MatrixPoly& a, const MatrixPoly& b) {
  MatrixPoly r;
  for (std::size_t i = 0; i < 4; ++i) r.e_[i] = a.e_[i] - b.e_[i];
  return r;
}

MatrixPoly operator*(const UPoly& s, const MatrixPoly& a) {
  MatrixPoly r;
  for (std::size_t i = 0; i < 4; ++i) r.e_[i] = s * a.e_[i];
  return r;
}

bool MatrixPoly::operator==(const MatrixPoly& o) const {
  for (std::size_t i = 0; i < 4; ++i)
    if (!(e_[i] == o.e_[i])) return false;
  return true;
}

UPoly MatrixPoly::det() const { return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0); }

MatrixPoly MatrixPoly::adjugate() const { return MatrixPoly(at(1, 1), -at(0, 1), -at(1, 0), at(0, 0)); }

MatrixPoly MatrixPoly::derivative() const {
  MatrixPoly r;
  for (std::size_t i = 0; i < 4; ++i) r.e_[i] = e_[i].derivative();
  return r;
}

MatrixPoly MatrixPoly::map(const RingMap& m) const {
  MatrixPoly r;
  for (std::size_t i = 0; i < 4; ++i) r.e_[i] = e_[i].map(m);
  return r;
}

MatrixPoly MatrixPoly::transport(const RosterPtr& target) const {
  MatrixPoly r;
  for (std::size_t i = 0; i < 4; ++i) r.e_[i] = e_[i].transport(target);
  return r;
}

std::string MatrixPoly::str(const std::string& var) const {
  std::ostringstream os;
  os << "[ " << at(0, 0).str(var) << " ; " << at(0, 1).str(var) << " ]\n";
  os << "[ " << at(1, 0).str(var) << " ; " << at(1, 1).str(var) << " ]\n";
  return os.str();
}

}  // namespace defring
