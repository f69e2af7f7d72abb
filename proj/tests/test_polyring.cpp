#include "doctest.h"

#include "defring/dump.hpp"
#include "defring/ideal.hpp"
#include "engine_properties.hpp"

using namespace defring;

namespace {

struct Ring {
  RosterPtr r;
  explicit Ring(std::vector<std::string> names) : r(Roster::make(std::move(names))) {}
  Polynomial operator()(const char* name) const { return Polynomial::variable(r, name); }
  Polynomial c(long n, long d = 1) const { return Polynomial(r, rational(n, d)); }
  Ideal ideal(std::vector<Polynomial> g) const { return Ideal(r, std::move(g)); }
};

}  // namespace

TEST_CASE("rational canonical form") {
  CHECK(to_fraction(rational(6, -4)) == "-3/2");
  CHECK(to_fraction(rational(0, 5)) == "0/1");
  CHECK(parse_rational(" -6/4 ") == rational(-3, 2));
  CHECK(residue_mod(rational(1, 2), 7) == 4);
}

TEST_CASE("polynomial arithmetic") {
  Ring R({"x", "y"});
  auto x = R("x"), y = R("y");
  auto f = (x + y) * (x - y);
  CHECK(f == x * x - y * y);
  CHECK(f.str() == "x^2 - y^2");
  CHECK((x + y).pow(3).size() == 4);
  CHECK((f - f).is_zero());
  Ring S({"x", "z"});
  CHECK_THROWS_AS(x + S("x"), AlgebraError);
}

TEST_CASE("groebner basics") {
  Ring R({"x", "y"});
  auto x = R("x"), y = R("y");
  auto I = R.ideal({x, y});
  CHECK(I.basis(TermOrder::lex(*R.r)).elements().size() == 2);
  // p specialized to a nonzero constant: unit ideal
  auto J = R.ideal({x * y - R.c(23), x});
  CHECK(J.is_unit());
  auto K = R.ideal({x * x + y, x * y - 1});
  CHECK(K.contains(y * y * y + x) == K.basis().reduces_to_zero(y * y * y + x));
}

TEST_CASE("cyclic-3 has the known lex basis size") {
  Ring R({"x", "y", "z"});
  auto x = R("x"), y = R("y"), z = R("z");
  auto I = R.ideal({x + y + z, x * y + y * z + z * x, x * y * z - R.c(1)});
  const auto& gb = I.basis(TermOrder::lex(*R.r));
  CHECK(gb.size() == 3);
  CHECK(gb.elements().front() == z.pow(3) - R.c(1));
}

TEST_CASE("intersection and saturation") {
  Ring R({"x", "y"});
  auto x = R("x"), y = R("y");
  auto I = ideal_intersect(R.ideal({x}), R.ideal({y}));
  CHECK(ideal_equal(I, R.ideal({x * y})));
  CHECK(ideal_equal(ideal_intersect(R.ideal({x}), R.ideal({x})), R.ideal({x})));
  CHECK(ideal_equal(ideal_saturate(R.ideal({x * y}), y), R.ideal({x})));
  CHECK(ideal_saturate(R.ideal({R.c(1)}), x).is_unit());
  CHECK_THROWS_AS(ideal_saturate(R.ideal({x}), R.c(0)), AlgebraError);
  CHECK(!ideal_equal(R.ideal({x}), R.ideal({x * x})));
  CHECK(ideal_equal(R.ideal({x, y}), R.ideal({x + y, y})));
}

TEST_CASE("preimage through a ring map") {
  Ring S({"s1", "s2", "s3"});
  Ring T({"t1", "t2"});
  // s1 -> t1, s2 -> t2, s3 -> t1*t2
  RingMap pr(S.r, T.r, {T("t1"), T("t2"), T("t1") * T("t2")});
  CHECK(pr.surjective());
  CHECK(ideal_equal(pr.kernel(), S.ideal({S("s3") - S("s1") * S("s2")})));
  auto K = preimage_ideal(pr, T.ideal({T("t1")}));
  CHECK(ideal_equal(K, S.ideal({S("s1"), S("s3")})));
  auto Z = preimage_ideal(pr, T.ideal({}));
  CHECK(ideal_equal(Z, pr.kernel()));
  RingMap bad(S.r, T.r, {T("t1"), T("t1"), T("t1")});
  CHECK(!bad.surjective());
  CHECK_THROWS_AS(preimage_ideal(bad, T.ideal({T("t2")})), AlgebraError);
}

TEST_CASE("canonical dump") {
  Ring R({"a", "b"});
  auto I = R.ideal({R("a") * 2 - R("b") * R("b") * rational(3, 2)});
  auto s = dump_ideal(I, TermOrder::grevlex(*R.r), {{"p", "23"}});
  CHECK(s == "# roster=[a,b] order=grevlex(a>b) p=23\n1/1*b^2 + -4/3*a^1\n");
}

TEST_CASE("randomized engine properties") {
  for (const auto& t : testing::run_engine_properties(40, 11)) {
    CHECK_MESSAGE(t.failures == 0, t.name, ": ", t.first_failure);
    CHECK(t.instances == 40);
  }
}
