#include <doctest.h>

#include "defring/monodromy.hpp"
#include "defring/parse.hpp"

using namespace defring;
using namespace defring::monodromy;

namespace {

Config cfg(long p, long kappa, bool symbolic = false) {
  Config c;
  c.p = p;
  c.kappa = kappa;
  c.symbolic_p = symbolic;
  return c;
}

}  // namespace

TEST_CASE("levels and config validation") {
  for (Level l : {Level::le30, Level::w21, Level::w30}) CHECK(parse_level(level_name(l)) == l);
  CHECK_THROWS(parse_level("31"));
  CHECK_NOTHROW(cfg(23, 7).validate());
  CHECK_THROWS(cfg(23, 5).validate());
  CHECK_THROWS(cfg(23, 19).validate());
  CHECK_THROWS(cfg(23, 23).validate());
  CHECK_THROWS(cfg(21, 7).validate());
  CHECK_THROWS(cfg(5, 2).validate());
  CHECK(kappa_op(Gauge::t21, 7) == Rational(7));
  CHECK(kappa_op(Gauge::t12, 7) == Rational(-6));
  CHECK(kappa_op(Gauge::t21s, 7) == Rational(-6));
  CHECK(kappa_op(Gauge::t03s, 7) == Rational(7));
}

TEST_CASE("det condition") {
  auto chart = charts::build_gauge(Gauge::t30);
  auto gens = det_condition_generators(chart);
  CHECK(gens.size() == 3);
  // diag(u^3, 1) satisfies the condition identically.
  auto r = Roster::make({"x"});
  GaugeChart trivial{Gauge::t30, {3, 0}, {}, r,
                     MatrixPoly::diagonal(UPoly(r, {Polynomial(r, 0), Polynomial(r, 0), Polynomial(r, 0),
                                                    Polynomial(r, 1)}),
                                          UPoly::constant(Polynomial(r, 1)))};
  CHECK(det_condition_ideal(trivial).is_zero());
  GaugeChart bad{Gauge::t30, {3, 0}, {}, r,
                 MatrixPoly::diagonal(UPoly::u(r), UPoly::constant(Polynomial(r, 1)))};
  CHECK_THROWS_AS(det_condition_generators(bad), AlgebraError);
}

TEST_CASE("p-content stripping") {
  auto r = Roster::make({"x", "p"});
  auto b = std::map<std::string, Polynomial>{};
  CHECK(strip_p_content(parse_polynomial(r, "p^2*x + p^3", b)) == parse_polynomial(r, "x + p", b));
  CHECK(strip_p_content(parse_polynomial(r, "x + p", b)) == parse_polynomial(r, "x + p", b));
  auto q = Roster::make({"x"});
  CHECK(strip_p_content(parse_polynomial(q, "23*x", b)) == parse_polynomial(q, "23*x", b));
}

TEST_CASE("derived ideals match the corrected tables") {
  for (long kappa : {5L, 9L})
    for (Gauge g : charts::all_gauges()) {
      auto r = fixed_weight_consistency(g, cfg(23, kappa));
      CHECK_MESSAGE(r.le30_matches, charts::gauge_name(g), " kappa=", kappa);
      CHECK_MESSAGE(r.w21_matches, charts::gauge_name(g), " kappa=", kappa);
      CHECK_MESSAGE(r.w30_matches, charts::gauge_name(g), " kappa=", kappa);
      CHECK_MESSAGE(r.decomposition_holds, charts::gauge_name(g), " kappa=", kappa);
    }
}

TEST_CASE("uncorrected table forms are rejected") {
  Config c = cfg(23, 7);
  CHECK_FALSE(ideal_equal(derive_le_ideal(Gauge::t21, Level::le30, c), table_ideal(Gauge::t21, Level::le30, c, true)));
  CHECK_FALSE(ideal_equal(derive_le_ideal(Gauge::t12, Level::le30, c), table_ideal(Gauge::t12, Level::le30, c, true)));
  CHECK_FALSE(
      ideal_equal(derive_le_ideal(Gauge::t12s, Level::le30, c), table_ideal(Gauge::t12s, Level::le30, c, true)));
  Ideal t21 = table_ideal(Gauge::t21, Level::w21, c);
  CHECK_FALSE(ideal_equal(derive_le_ideal(Gauge::t21, Level::le30, c),
                          ideal_intersect(t21, table_ideal(Gauge::t21, Level::w30, c, true))));
}

TEST_CASE("symbolic p") {
  Config c = cfg(23, 7, true);
  for (Gauge g : {Gauge::t21, Gauge::t12s, Gauge::t03s}) {
    auto r = fixed_weight_consistency(g, c);
    CHECK_MESSAGE(r.pass(), charts::gauge_name(g), ": ", r.detail);
  }
}

TEST_CASE("conjugation coherence") {
  Config c = cfg(31, 8);
  for (Gauge g : charts::all_gauges())
    for (Level l : {Level::le30, Level::w21}) CHECK_MESSAGE(conjugation_coherent(g, l, c), charts::gauge_name(g));
}

TEST_CASE("displayed K-ideals") {
  Config c = cfg(23, 7);
  for (const auto& d : k_displays()) {
    auto chart = charts::build_multichart(d.base, c.pmode());
    CHECK_MESSAGE(ideal_equal(k_ideal(chart, d.target, d.level, c), k_display_ideal(d.name, c)), d.name);
  }
  auto chart = charts::build_multichart(Gauge::t21, c.pmode());
  CHECK_FALSE(ideal_equal(k_ideal(chart, Gauge::t12, Level::w30, c), k_display_ideal("2_30", c, true)));
}

TEST_CASE("det condition on charts lies in every K-ideal") {
  Config c = cfg(23, 7);
  for (Gauge base : {Gauge::t21, Gauge::t12s}) {
    auto chart = charts::build_multichart(base, c.pmode());
    Ideal det = det_condition_on_chart(chart);
    for (const auto& d : k_displays())
      if (d.base == base) CHECK_MESSAGE(k_display_ideal(d.name, c).contains(det), d.name);
  }
}
