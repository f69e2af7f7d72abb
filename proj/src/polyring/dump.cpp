#include "defring/dump.hpp"

#include <algorithm>
#include <sstream>

namespace defring {

namespace {

std::string header(const Roster& roster, const TermOrder& order, const DumpParams& params) {
  std::ostringstream os;
  os << "# roster=" << roster.str() << " order=" << order.describe(roster);
  for (const auto& [k, v] : params) os << " " << k << "=" << v;
  return os.str();
}

}  // namespace

std::string canonical_polynomial(const Polynomial& f, const TermOrder& order) {
  if (f.is_zero()) return "0/1";
  std::vector<std::pair<Monomial, Rational>> ts(f.terms().begin(), f.terms().end());
  std::sort(ts.begin(), ts.end(), [&](const auto& a, const auto& b) { return order.compare(a.first, b.first) > 0; });
  const Roster& r = *f.roster();
  std::ostringstream os;
  for (std::size_t t = 0; t < ts.size(); ++t) {
    if (t) os << " + ";
    os << to_fraction(ts[t].second);
    for (std::size_t k = 0; k < order.nvars(); ++k) {
      std::size_t i = order.priority()[k];
      if (ts[t].first[i]) os << "*" << r.name(i) << "^" << ts[t].first[i];
    }
  }
  return os.str();
}

std::string dump_ideal(const Ideal& I, const TermOrder& order, const DumpParams& params) {
  std::ostringstream os;
  os << header(*I.roster(), order, params) << "\n";
  for (const auto& g : I.basis(order).elements()) os << canonical_polynomial(g, order) << "\n";
  return os.str();
}

std::string dump_matrix(const MatrixPoly& m, const TermOrder& order, const DumpParams& params) {
  std::ostringstream os;
  os << header(*m.roster(), order, params) << "\n";
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t k = 0; k < 2; ++k) {
      if (k) os << " | ";
      const UPoly& e = m.at(i, k);
      if (e.is_zero()) {
        os << "0/1";
        continue;
      }
      bool first = true;
      for (std::size_t d = e.coeffs().size(); d-- > 0;) {
        if (e.coeff(d).is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << canonical_polynomial(e.coeff(d), order) << ")*u^" << d;
      }
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace defring
