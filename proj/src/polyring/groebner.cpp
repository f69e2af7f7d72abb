#include "defring/groebner.hpp"

#include <algorithm>
#include <tuple>

namespace defring {

using detail::SortedPoly;
using detail::Term;

namespace {

SortedPoly to_sorted(const Polynomial& f, const TermOrder& order) {
  SortedPoly out;
  out.reserve(f.size());
  for (const auto& [m, c] : f.terms()) out.push_back({order.to_internal(m), c});
  std::sort(out.begin(), out.end(),
            [&](const Term& a, const Term& b) { return order.compare_internal(a.m, b.m) > 0; });
  return out;
}

Polynomial from_sorted(const SortedPoly& f, const RosterPtr& roster, const TermOrder& order) {
  Polynomial out(roster);
  for (const auto& t : f) out.add_term(order.to_external(t.m), t.c);
  return out;
}

void make_monic(SortedPoly& f) {
  if (f.empty() || f[0].c == 1) return;
  Rational inv = 1 / f[0].c;
  for (auto& t : f) t.c *= inv;
}

// Returns f[from..] - c * q * g[gfrom..], keeping the result sorted.
SortedPoly sub_scaled(const SortedPoly& f, std::size_t from, const Rational& c, const Monomial& q,
                      const SortedPoly& g, std::size_t gfrom, const TermOrder& order) {
  SortedPoly out;
  out.reserve(f.size() - from + g.size() - gfrom);
  std::size_t i = from, j = gfrom;
  while (i < f.size() || j < g.size()) {
    if (j == g.size()) {
      out.push_back(f[i++]);
      continue;
    }
    Monomial gm = g[j].m * q;
    int cmp = i == f.size() ? -1 : order.compare_internal(f[i].m, gm);
    if (cmp > 0) {
      out.push_back(f[i++]);
    } else if (cmp < 0) {
      out.push_back({gm, -c * g[j].c});
      ++j;
    } else {
      Rational v = f[i].c - c * g[j].c;
      if (v != 0) out.push_back({gm, std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

const SortedPoly* find_reducer(const Monomial& m, const std::vector<const SortedPoly*>& basis) {
  for (auto* g : basis)
    if ((*g)[0].m.divides(m)) return g;
  return nullptr;
}

// Full reduction (every term) when `full`, otherwise only the head.
// Reducers must be monic.
SortedPoly reduce(SortedPoly f, const std::vector<const SortedPoly*>& basis, const TermOrder& order, bool full) {
  SortedPoly rem;
  std::size_t k = 0;
  while (k < f.size()) {
    const SortedPoly* g = find_reducer(f[k].m, basis);
    if (!g) {
      if (!full) {
        rem.insert(rem.end(), f.begin() + static_cast<std::ptrdiff_t>(k), f.end());
        return rem;
      }
      rem.push_back(f[k]);
      ++k;
      continue;
    }
    Monomial q = f[k].m / (*g)[0].m;
    Rational c = f[k].c;
    f = sub_scaled(f, k + 1, c, q, *g, 1, order);
    k = 0;
  }
  return rem;
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  unsigned sugar;
};

class Buchberger {
 public:
  explicit Buchberger(const TermOrder& order) : order_(order) {}

  std::vector<SortedPoly> run(std::vector<SortedPoly> input, GroebnerStats& stats) {
    std::sort(input.begin(), input.end(), [&](const SortedPoly& a, const SortedPoly& b) {
      return order_.compare_internal(a[0].m, b[0].m) < 0;
    });
    for (auto& f : input) {
      SortedPoly h = reduce(std::move(f), active_list(), order_, true);
      if (h.empty()) continue;
      make_monic(h);
      unsigned s = degree_of(h);
      if (insert(std::move(h), s)) return {unit()};
    }
    while (!pairs_.empty()) {
      auto it = std::min_element(pairs_.begin(), pairs_.end(), [&](const Pair& a, const Pair& b) {
        if (a.sugar != b.sugar) return a.sugar < b.sugar;
        int c = order_.compare_internal(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        return std::tie(a.i, a.j) < std::tie(b.i, b.j);
      });
      Pair pr = *it;
      pairs_.erase(it);
      ++stats.pairs_considered;
      SortedPoly s = spoly(pr);
      SortedPoly h = reduce(std::move(s), active_list(), order_, false);
      ++stats.pairs_reduced;
      if (h.empty()) {
        ++stats.zero_reductions;
        continue;
      }
      make_monic(h);
      if (insert(std::move(h), pr.sugar)) return {unit()};
    }
    return finish();
  }

 private:
  static SortedPoly unit() { return SortedPoly{Term{Monomial{}, Rational(1)}}; }

  static unsigned degree_of(const SortedPoly& f) {
    unsigned d = 0;
    for (const auto& t : f) d = std::max(d, t.m.degree());
    return d;
  }

  std::vector<const SortedPoly*> active_list() const {
    std::vector<const SortedPoly*> out;
    for (std::size_t i = 0; i < polys_.size(); ++i)
      if (active_[i]) out.push_back(&polys_[i]);
    return out;
  }

  SortedPoly spoly(const Pair& pr) const {
    const SortedPoly& f = polys_[pr.i];
    const SortedPoly& g = polys_[pr.j];
    Monomial qf = pr.lcm / f[0].m;
    Monomial qg = pr.lcm / g[0].m;
    SortedPoly fm;
    fm.reserve(f.size());
    for (std::size_t k = 1; k < f.size(); ++k) fm.push_back({f[k].m * qf, f[k].c});
    return sub_scaled(fm, 0, Rational(1), qg, g, 1, order_);
  }

  // Gebauer-Moeller update. Returns true when h is a nonzero constant.
  bool insert(SortedPoly h, unsigned sugar) {
    if (h[0].m.is_one()) return true;
    const std::size_t hi = polys_.size();
    const Monomial hm = h[0].m;
    polys_.push_back(std::move(h));
    sugar_.push_back(sugar);
    active_.push_back(true);

    struct Cand {
      std::size_t g;
      Monomial lcm;
      bool coprime;
    };
    std::vector<Cand> c;
    for (std::size_t g = 0; g < hi; ++g) {
      if (!active_[g]) continue;
      const Monomial& gm = polys_[g][0].m;
      c.push_back({g, gm.lcm(hm), gm.coprime(hm)});
    }
    // Chain criterion among the new pairs.
    std::vector<Cand> d;
    for (std::size_t a = 0; a < c.size(); ++a) {
      bool keep = c[a].coprime;
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < c.size() && keep; ++b)
          if (c[b].lcm.divides(c[a].lcm)) keep = false;
        for (std::size_t b = 0; b < d.size() && keep; ++b)
          if (d[b].lcm.divides(c[a].lcm)) keep = false;
      }
      if (keep) d.push_back(c[a]);
    }
    // Old pairs made redundant by h.
    std::vector<Pair> kept;
    for (const auto& pr : pairs_) {
      if (hm.divides(pr.lcm) && polys_[pr.i][0].m.lcm(hm) != pr.lcm && polys_[pr.j][0].m.lcm(hm) != pr.lcm) continue;
      kept.push_back(pr);
    }
    pairs_ = std::move(kept);
    for (const auto& x : d) {
      if (x.coprime) continue;  // product criterion
      const SortedPoly& gp = polys_[x.g];
      unsigned s = std::max(sugar_[x.g] + (x.lcm / gp[0].m).degree(), sugar + (x.lcm / hm).degree());
      pairs_.push_back({x.g, hi, x.lcm, s});
    }
    for (std::size_t g = 0; g < hi; ++g)
      if (active_[g] && hm.divides(polys_[g][0].m)) active_[g] = false;
    return false;
  }

  std::vector<SortedPoly> finish() {
    std::vector<SortedPoly> basis;
    for (std::size_t i = 0; i < polys_.size(); ++i)
      if (active_[i]) basis.push_back(polys_[i]);
    std::sort(basis.begin(), basis.end(), [&](const SortedPoly& a, const SortedPoly& b) {
      return order_.compare_internal(a[0].m, b[0].m) < 0;
    });
    for (std::size_t i = 0; i < basis.size(); ++i) {
      std::vector<const SortedPoly*> others;
      for (std::size_t j = 0; j < basis.size(); ++j)
        if (j != i) others.push_back(&basis[j]);
      SortedPoly tail(basis[i].begin() + 1, basis[i].end());
      SortedPoly r = reduce(std::move(tail), others, order_, true);
      SortedPoly out;
      out.reserve(r.size() + 1);
      out.push_back(basis[i][0]);
      out.insert(out.end(), r.begin(), r.end());
      basis[i] = std::move(out);
    }
    return basis;
  }

  const TermOrder& order_;
  std::vector<SortedPoly> polys_;
  std::vector<unsigned> sugar_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
};

}  // namespace

GroebnerBasis::GroebnerBasis(RosterPtr roster, TermOrder order, std::vector<SortedPoly> elements,
                             GroebnerStats stats)
    : roster_(std::move(roster)), order_(std::move(order)), internal_(std::move(elements)), stats_(stats) {
  elements_.reserve(internal_.size());
  for (const auto& f : internal_) elements_.push_back(from_sorted(f, roster_, order_));
}

bool GroebnerBasis::is_unit() const { return internal_.size() == 1 && internal_[0][0].m.is_one(); }

Polynomial GroebnerBasis::normal_form(const Polynomial& f) const {
  require_same_roster(roster_, f.roster(), "normal_form");
  std::vector<const SortedPoly*> basis;
  for (const auto& g : internal_) basis.push_back(&g);
  return from_sorted(reduce(to_sorted(f, order_), basis, order_, true), roster_, order_);
}

bool GroebnerBasis::reduces_to_zero(const Polynomial& f) const {
  if (f.is_zero()) return true;
  if (is_unit()) return true;
  return normal_form(f).is_zero();
}

Monomial GroebnerBasis::leading_monomial(std::size_t i) const { return order_.to_external(internal_.at(i)[0].m); }

std::vector<std::pair<Monomial, Rational>> GroebnerBasis::sorted_terms(const Polynomial& f) const {
  std::vector<std::pair<Monomial, Rational>> out;
  for (const auto& t : to_sorted(f, order_)) out.emplace_back(order_.to_external(t.m), t.c);
  return out;
}

GroebnerBasis groebner(const RosterPtr& roster, const std::vector<Polynomial>& generators, const TermOrder& order) {
  if (!roster || roster->size() == 0) {
    // Over an empty roster every ideal is 0 or the whole field.
    if (!roster) throw AlgebraError("groebner: missing roster");
  }
  if (order.nvars() != roster->size()) throw AlgebraError("groebner: order does not match roster");
  std::vector<SortedPoly> input;
  for (const auto& g : generators) {
    require_same_roster(roster, g.roster(), "groebner");
    if (!g.is_zero()) input.push_back(to_sorted(g, order));
  }
  GroebnerStats stats;
  Buchberger bb(order);
  auto basis = bb.run(std::move(input), stats);
  return GroebnerBasis(roster, order, std::move(basis), stats);
}

}  // namespace defring
