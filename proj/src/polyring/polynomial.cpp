#include "defring/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "defring/order.hpp"

namespace defring {

// ---- Monomial ----

void Monomial::set(std::size_t i, unsigned v) {
  if (i >= kMaxVars) throw AlgebraError("monomial: variable index out of range");
  if (v > 0xffff) throw AlgebraError("monomial: exponent overflow");
  e_[i] = static_cast<std::uint16_t>(v);
}

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (auto x : e_) d += x;
  return d;
}

bool Monomial::is_one() const {
  for (auto x : e_)
    if (x) return false;
  return true;
}

bool Monomial::divides(const Monomial& o) const {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (e_[i] > o.e_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& o) const {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (e_[i] && o.e_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    unsigned s = unsigned(e_[i]) + o.e_[i];
    if (s > 0xffff) throw AlgebraError("monomial: exponent overflow");
    r.e_[i] = static_cast<std::uint16_t>(s);
  }
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.e_[i] = static_cast<std::uint16_t>(e_[i] - o.e_[i]);
  return r;
}

Monomial Monomial::lcm(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.e_[i] = std::max(e_[i], o.e_[i]);
  return r;
}

// ---- Roster ----

Roster::Roster(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() > kMaxVars) throw AlgebraError("roster: too many variables");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw AlgebraError("roster: empty variable name");
    if (!index_.emplace(names_[i], i).second) throw AlgebraError("roster: duplicate variable " + names_[i]);
  }
}

RosterPtr Roster::make(std::vector<std::string> names) {
  return std::make_shared<const Roster>(std::move(names));
}

std::optional<std::size_t> Roster::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Roster::index(std::string_view name) const {
  auto i = find(name);
  if (!i) throw AlgebraError("unknown variable '" + std::string(name) + "' in roster " + str());
  return *i;
}

std::string Roster::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (i) s += ",";
    s += names_[i];
  }
  return s + "]";
}

bool same_roster(const RosterPtr& a, const RosterPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

void require_same_roster(const RosterPtr& a, const RosterPtr& b, const char* where) {
  if (!same_roster(a, b)) {
    throw AlgebraError(std::string(where) + ": roster mismatch " + (a ? a->str() : "<none>") + " vs " +
                       (b ? b->str() : "<none>"));
  }
}

// ---- Polynomial ----

Polynomial::Polynomial(RosterPtr roster) : roster_(std::move(roster)) {}

Polynomial::Polynomial(RosterPtr roster, const Rational& c) : roster_(std::move(roster)) {
  if (c != 0) terms_.emplace(Monomial{}, c);
}

Polynomial Polynomial::variable(const RosterPtr& roster, std::string_view name) {
  Monomial m;
  m.set(roster->index(name), 1);
  return term(roster, m, Rational(1));
}

Polynomial Polynomial::term(const RosterPtr& roster, const Monomial& m, const Rational& c) {
  Polynomial p(roster);
  for (std::size_t i = roster->size(); i < kMaxVars; ++i)
    if (m[i]) throw AlgebraError("monomial uses a variable outside the roster");
  if (c != 0) p.terms_.emplace(m, c);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Polynomial::constant_term() const { return coefficient(Monomial{}); }

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

unsigned Polynomial::total_degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

unsigned Polynomial::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max<unsigned>(d, m[var]);
  return d;
}

bool Polynomial::involves(std::size_t var) const { return degree_in(var) > 0; }

std::vector<std::size_t> Polynomial::variables() const {
  std::vector<std::size_t> out;
  if (!roster_) return out;
  for (std::size_t i = 0; i < roster_->size(); ++i)
    if (involves(i)) out.push_back(i);
  return out;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (!roster_) roster_ = o.roster_;
  if (o.roster_) require_same_roster(roster_, o.roster_, "polynomial +");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (!roster_) roster_ = o.roster_;
  if (o.roster_) require_same_roster(roster_, o.roster_, "polynomial -");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_roster(a.roster_, b.roster_, "polynomial *");
  Polynomial r(a.roster_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, x] : terms_) x *= c;
  return *this;
}

Polynomial operator+(Polynomial a, const Rational& c) {
  a.add_term(Monomial{}, c);
  return a;
}

Polynomial operator-(Polynomial a, const Rational& c) {
  a.add_term(Monomial{}, -c);
  return a;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Polynomial Polynomial::pow(unsigned n) const {
  Polynomial r(roster_, Rational(1));
  Polynomial base = *this;
  while (n) {
    if (n & 1) r = r * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (terms_.empty() && o.terms_.empty()) return true;
  require_same_roster(roster_, o.roster_, "polynomial ==");
  return terms_ == o.terms_;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  auto order = TermOrder::grevlex(*roster_);
  const Monomial* lead = nullptr;
  for (const auto& [m, c] : terms_)
    if (!lead || order.compare(m, *lead) > 0) lead = &m;
  Rational inv = 1 / terms_.at(*lead);
  return *this * inv;
}

std::optional<Polynomial> Polynomial::divide_by_power(std::size_t var, unsigned k) const {
  Polynomial r(roster_);
  Monomial d;
  d.set(var, k);
  for (const auto& [m, c] : terms_) {
    if (m[var] < k) return std::nullopt;
    r.terms_.emplace(m / d, c);
  }
  return r;
}

Polynomial Polynomial::transport(const RosterPtr& target) const {
  if (same_roster(roster_, target)) {
    Polynomial r(*this);
    r.roster_ = target;
    return r;
  }
  std::vector<std::size_t> where(roster_ ? roster_->size() : 0, kMaxVars);
  for (std::size_t i = 0; i < where.size(); ++i) {
    if (auto j = target->find(roster_->name(i))) where[i] = *j;
  }
  Polynomial r(target);
  for (const auto& [m, c] : terms_) {
    Monomial out;
    for (std::size_t i = 0; i < where.size(); ++i) {
      if (!m[i]) continue;
      if (where[i] == kMaxVars)
        throw AlgebraError("transport: variable " + roster_->name(i) + " missing from " + target->str());
      out.set(where[i], m[i]);
    }
    r.add_term(out, c);
  }
  return r;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  auto order = TermOrder::grevlex(*roster_);
  std::vector<const std::pair<const Monomial, Rational>*> ts;
  for (const auto& t : terms_) ts.push_back(&t);
  std::sort(ts.begin(), ts.end(), [&](auto* a, auto* b) { return order.compare(a->first, b->first) > 0; });
  std::ostringstream os;
  bool first = true;
  for (auto* t : ts) {
    const Rational& c = t->second;
    const Monomial& m = t->first;
    bool neg = c < 0;
    Rational a = neg ? Rational(-c) : c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    bool coef_shown = !(a == 1) || m.is_one();
    if (coef_shown) os << to_display(a);
    bool any = coef_shown;
    for (std::size_t i = 0; i < roster_->size(); ++i) {
      if (!m[i]) continue;
      if (any) os << "*";
      os << roster_->name(i);
      if (m[i] > 1) os << "^" << m[i];
      any = true;
    }
  }
  return os.str();
}

std::vector<Polynomial> variables(const RosterPtr& roster, const std::vector<std::string>& names) {
  std::vector<Polynomial> out;
  out.reserve(names.size());
  for (const auto& n : names) out.push_back(Polynomial::variable(roster, n));
  return out;
}

}  // namespace defring
