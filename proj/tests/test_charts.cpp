#include <doctest.h>

#include "defring/charts.hpp"
#include "defring/parse.hpp"

using namespace defring;
using namespace defring::charts;

namespace {

Polynomial P(const RosterPtr& r, const std::string& s, long p = 23) {
  return parse_polynomial(r, s, {{"p", Polynomial(r, p)}});
}

}  // namespace

TEST_CASE("expression parser") {
  auto r = Roster::make({"x", "y"});
  CHECK(parse_polynomial(r, "(x+1)^2 - 2*x/2") == P(r, "x^2 + x + 1"));
  CHECK(parse_polynomial(r, "-x*y + 3/4") == Polynomial(r, Rational(3, 4)) - P(r, "x") * P(r, "y"));
  CHECK(parse_polynomial(r, "k*x", {{"k", Polynomial(r, 5)}}) == P(r, "5*x"));
  CHECK_THROWS(parse_polynomial(r, "x/y"));
  CHECK_THROWS(parse_polynomial(r, "z"));
  CHECK_THROWS(parse_polynomial(r, "(x"));
  CHECK_THROWS(parse_polynomial(r, "x/0"));
}

TEST_CASE("gauge labels") {
  CHECK(all_gauges().size() == 7);
  for (Gauge g : all_gauges()) {
    CHECK(parse_gauge(gauge_name(g)) == g);
    CHECK(parse_gauge(gauge_factor(g).str()) == g);
    CHECK(paired_gauge(paired_gauge(g)) == g);
    auto adm30 = weyl::admissible_set({3, 0});
    CHECK(std::find(adm30.begin(), adm30.end(), gauge_factor(g)) != adm30.end());
  }
  CHECK(gauge_factor(Gauge::t12s).str() == "t(1,2)s");
  CHECK(gauge_factor(Gauge::t03s).str() == "t(0,3)s");
  CHECK(gauge_factor(Gauge::t21s).str() == "t(2,1)s");
  CHECK_FALSE(parse_gauge("t(4,-1)").has_value());
  CHECK_THROWS(build_gauge(Gauge::t30, {2, 1}));
}

TEST_CASE("gauge matrices") {
  GaugeChart g = build_gauge(Gauge::t21);
  const auto& r = g.roster;
  // u^2 + a1 u + a0 at (1,1); v (c1 u + c0) at (2,1).
  CHECK(g.matrix.at(0, 0) == UPoly(r, {P(r, "a0"), P(r, "a1"), P(r, "1")}));
  CHECK(g.matrix.at(1, 0) == UPoly(r, {P(r, "-23*c0"), P(r, "c0 - 23*c1"), P(r, "c1")}));
  CHECK(g.matrix.det().degree() == 3);
  CHECK(g.matrix.det().coeff(3) == Polynomial(r, 1));

  GaugeChart t30 = build_gauge(Gauge::t30);
  CHECK(t30.matrix.at(1, 1) == UPoly::constant(Polynomial(t30.roster, 1)));
  CHECK(t30.matrix.at(0, 1).is_zero());
  CHECK(build_gauge(Gauge::t12s).matrix.det().coeff(3) == Polynomial(build_gauge(Gauge::t12s).roster, -1));

  for (bool symbolic : {false, true})
    for (Gauge gg : all_gauges()) {
      GaugeChart c = build_gauge(gg, {3, 0}, {31, symbolic});
      CHECK(degree_bounds_hold(c));
      CHECK(c.matrix.det().degree() == 3);
      CHECK(c.matrix.det().coeff(3).is_constant());
      CHECK(c.roster->size() == 6 + (symbolic ? 1 : 0));
    }
}

TEST_CASE("conjugation of gauges") {
  for (bool symbolic : {false, true})
    for (Gauge g : all_gauges()) {
      PMode mode{23, symbolic};
      GaugeChart c = build_gauge(g, {3, 0}, mode);
      GaugeChart conj = conjugate_gauge(c);
      CHECK(conj.label == paired_gauge(g));
      CHECK(conj.matrix == build_gauge(paired_gauge(g), {3, 0}, mode).matrix);
      GaugeChart back = conjugate_gauge(conj);
      CHECK(back.matrix == c.matrix);
      // Diagonal entries swap, determinant preserved up to the unit.
      CHECK(conj.matrix.det() == c.matrix.det().map(conjugation_relabel(c.roster, conj.roster)));
    }
}

TEST_CASE("multi-type charts and projection identities") {
  for (bool symbolic : {false, true})
    for (Gauge base : {Gauge::t21, Gauge::t12, Gauge::t12s}) {
      MultiChart m = build_multichart(base, {43, symbolic});
      CHECK(m.roster->size() == 10 + (symbolic ? 1 : 0));
      REQUIRE(m.table.size() == 3);
      CHECK(m.table[0].target == base);
      CHECK(m.table[0].shift == 0);
      for (const auto& pr : m.table) {
        CHECK_MESSAGE(projection_identity_holds(m, pr), gauge_name(base), " -> ", gauge_name(pr.target));
        CHECK(pr.map.surjective());
        // The target is the base shape shifted by the recorded root multiple.
        weyl::Factor expected = gauge_factor(base).shifted(pr.shift, -pr.shift);
        CHECK(gauge_factor(pr.target) == expected);
      }
    }
  MultiChart t21 = build_multichart(Gauge::t21);
  const auto& r = t21.roster;
  CHECK(t21.psi_v3.at(0, 0) == UPoly(r, {P(r, "alpha0"), P(r, "alpha1"), P(r, "alpha2"), P(r, "1")}));
  const auto& self = t21.projection(Gauge::t21).map;
  CHECK(self.image("alpha2") == P(self.target(), "a1 - 23"));
  CHECK(self.image("alpha0") == P(self.target(), "-23*a0"));
  // A wrong image breaks the identity.
  auto images = std::vector<Polynomial>();
  for (std::size_t i = 0; i < r->size(); ++i) images.push_back(self.image(i));
  images[0] = images[0] + Polynomial(self.target(), 1);
  Projection broken{Gauge::t21, 0, RingMap(r, self.target(), images)};
  CHECK_FALSE(projection_identity_holds(t21, broken));
}
