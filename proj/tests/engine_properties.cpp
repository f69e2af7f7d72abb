#include "engine_properties.hpp"

#include <random>

#include "defring/ideal.hpp"

namespace defring::testing {

namespace {

struct Gen {
  std::mt19937_64 rng;
  RosterPtr r;

  Polynomial var(std::size_t i) const { return Polynomial::variable(r, r->name(i)); }

  // Up to `terms` terms of degree <= deg with coefficients in [-3, 3].
  Polynomial poly(int deg, int terms = 3) {
    std::uniform_int_distribution<int> c(-3, 3), d(0, deg), v(0, static_cast<int>(r->size()) - 1);
    Polynomial f(r);
    for (int t = 0; t < terms; ++t) {
      Polynomial m(r, c(rng));
      for (int k = d(rng); k > 0; --k) m *= var(static_cast<std::size_t>(v(rng)));
      f += m;
    }
    return f;
  }

  // Generators with a distinct variable in each leading part, so most ideals are proper.
  Ideal ideal(std::size_t n) {
    std::vector<Polynomial> gens;
    for (std::size_t i = 0; i < n; ++i) gens.push_back(var(i % r->size()) * poly(1, 2) + poly(2));
    return Ideal(r, std::move(gens));
  }

  // A random combination of the generators of I.
  Polynomial element(const Ideal& I) {
    Polynomial f(r);
    for (const auto& g : I.generators()) f += poly(1) * g;
    return f;
  }

  Rational scalar() {
    std::uniform_int_distribution<int> c(-5, 5);
    int n = c(rng);
    return rational(n == 0 ? 1 : n, 1 + static_cast<long>(rng() % 3));
  }
};

void record(PropertyTally& t, bool ok, const std::string& what) {
  ++t.instances;
  if (ok) return;
  if (t.failures++ == 0) t.first_failure = what;
}

}  // namespace

std::vector<PropertyTally> run_engine_properties(int instances, std::uint64_t seed) {
  Gen g{std::mt19937_64(seed), Roster::make({"x", "y", "z"})};
  PropertyTally lin{"membership linearity", 0, 0, ""}, inter{"intersection containments", 0, 0, ""},
      sat{"saturation containments", 0, 0, ""},
      pre{"preimage correspondence", 0, 0, ""};

  for (int n = 0; n < instances; ++n) {
    Ideal I = g.ideal(2);
    const GroebnerBasis& gb = I.basis();
    Polynomial f = g.element(I), h = g.element(I), u = g.poly(3), w = g.poly(3);
    Rational a = g.scalar(), b = g.scalar();
    bool ok = I.contains(f) && I.contains(h) && I.contains(f * Polynomial(g.r, a) + h * Polynomial(g.r, b)) &&
              I.contains(f * g.poly(2));
    ok = ok && gb.normal_form(u * Polynomial(g.r, a) + w * Polynomial(g.r, b)) ==
                   gb.normal_form(u) * Polynomial(g.r, a) + gb.normal_form(w) * Polynomial(g.r, b);
    ok = ok && gb.normal_form(u + f) == gb.normal_form(u);
    ok = ok && I.contains(u - gb.normal_form(u));
    record(lin, ok, "I = " + I.str() + ", u = " + u.str());
  }

  for (int n = 0; n < instances; ++n) {
    Ideal I = g.ideal(2), J = g.ideal(2);
    Ideal K = ideal_intersect(I, J);
    bool ok = I.contains(K) && J.contains(K) && K.contains(ideal_product(I, J));
    Polynomial a = g.element(I), b = g.element(J), c = g.poly(2);
    ok = ok && K.contains(a * b);
    ok = ok && K.contains(a) == J.contains(a) && K.contains(b) == I.contains(b);
    ok = ok && K.contains(c) == (I.contains(c) && J.contains(c));
    ok = ok && ideal_equal(ideal_intersect(I, I), I) && ideal_equal(ideal_intersect(J, I), K);
    record(inter, ok, "I = " + I.str() + ", J = " + J.str());
  }

  for (int n = 0; n < instances; ++n) {
    Ideal I = g.ideal(2);
    Polynomial h = g.var(static_cast<std::size_t>(n) % 3) + g.poly(1, 2);
    if (h.is_zero() || h.total_degree() == 0) h = g.var(0);
    Polynomial q = g.poly(2);
    Ideal Iq = I.with({h * h * q});
    Ideal S = ideal_saturate(Iq, h);
    bool ok = S.contains(Iq) && S.contains(q) && ideal_equal(ideal_saturate(S, h), S);
    // Some power of h carries S back into the ideal.
    bool power = true;
    for (const auto& s : S.reduced_generators()) {
      bool found = false;
      Polynomial t = s;
      for (int k = 0; k <= 8 && !found; ++k, t *= h) found = Iq.contains(t);
      power = power && found;
    }
    ok = ok && power;
    record(sat, ok, "I = " + Iq.str() + ", h = " + h.str());
  }

  auto src = Roster::make({"s1", "s2", "s3", "s4"});
  for (int n = 0; n < instances; ++n) {
    // Triangular images make the map surjective.
    const Polynomial x = g.var(0), y = g.var(1), z = g.var(2);
    const Polynomial a(g.r, g.scalar()), b(g.r, g.scalar());
    std::vector<Polynomial> images{x, y + a * x * x, z + b * x * y, g.poly(2)};
    RingMap phi(src, g.r, images);
    Ideal J = g.ideal(1 + n % 2);
    Ideal P = preimage_ideal(phi, J);
    bool ok = P.contains(phi.kernel());
    for (const auto& p : P.generators()) ok = ok && J.contains(phi(p));
    for (const auto& j : J.generators()) ok = ok && P.contains(phi.lift(j));
    Gen s{std::mt19937_64(g.rng()), src};
    for (int k = 0; k < 3; ++k) {
      // A random element and one forced into P; membership must match downstairs.
      Polynomial t = s.poly(2);
      Polynomial in = s.poly(1) * phi.lift(g.element(J)) + t * t - phi.lift(phi(t * t));
      ok = ok && P.contains(t) == J.contains(phi(t)) && P.contains(in) && J.contains(phi(in));
    }
    record(pre, ok, "J = " + J.str());
  }
  return {lin, inter, sat, pre};
}

}  // namespace defring::testing
