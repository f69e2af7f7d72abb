#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "defring/weyl.hpp"

using namespace defring::weyl;

namespace {

std::set<std::string> rendered(const std::vector<Factor>& xs) {
  std::set<std::string> out;
  for (const auto& x : xs) out.insert(x.str());
  return out;
}

std::vector<Factor> small_factors(int bound) {
  std::vector<Factor> out;
  for (bool flip : {false, true})
    for (int a = -bound; a <= bound; ++a)
      for (int b = -bound; b <= bound; ++b) out.push_back({flip, a, b});
  return out;
}

}  // namespace

TEST_CASE("render and parse") {
  CHECK(Factor::translation(2, 1).str() == "t(2,1)");
  CHECK(Factor::parse("t(1,2)s") == Factor{true, 2, 1});
  CHECK(Factor::parse(" t(-3, 4) ") == Factor::translation(-3, 4));
  CHECK(Element::parse("t(2,1);t(1,2)s;t(0,3)").str() == "t(2,1);t(1,2)s;t(0,3)");
  CHECK_THROWS(Factor::parse("t(1,2)x"));
  CHECK_THROWS(Factor::parse("s(1,2)"));
  CHECK_THROWS(Factor::parse("t(1)"));
}

TEST_CASE("group law: associativity and inverses") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-6, 6);
  auto rnd = [&] { return Factor{static_cast<bool>(rng() & 1), d(rng), d(rng)}; };
  for (int i = 0; i < 600; ++i) {
    Factor x = rnd(), y = rnd(), z = rnd();
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * x.inverse() == Factor{});
    CHECK(x.inverse() * x == Factor{});
    CHECK((x * y).omega() == x.omega() + y.omega());
  }
  // Right multiplication by a translation adds to nu.
  CHECK(Factor::translation(2, 1) * Factor::translation(1, -1) == Factor::translation(3, 0));
  CHECK(Factor{true, 2, 1}.shifted(1, -1) == Factor::parse("t(0,3)s"));
}

TEST_CASE("length and reduced words") {
  CHECK(length(Factor{}) == 0);
  CHECK(length(simple_reflection(0)) == 1);
  CHECK(length(simple_reflection(1)) == 1);
  CHECK(length(omega_power(1)) == 0);
  CHECK(length(Factor::translation(2, 1)) == 1);
  CHECK(length(Factor::translation(3, 0)) == 3);
  for (const auto& x : small_factors(4)) {
    auto w = reduced_word(x);
    REQUIRE(static_cast<int>(w.size()) == length(x));
    Factor rebuilt = omega_power(x.omega());
    for (int letter : w) rebuilt = rebuilt * simple_reflection(letter);
    CHECK(rebuilt == x);
    for (std::size_t i = 1; i < w.size(); ++i) CHECK(w[i] != w[i - 1]);
  }
}

TEST_CASE("bruhat examples") {
  const Factor t21 = Factor::translation(2, 1);
  CHECK(bruhat_leq(t21, t21));
  CHECK(bruhat_leq(Factor::parse("t(1,2)s"), t21));
  CHECK_FALSE(bruhat_leq(Factor::translation(3, 0), t21));
  CHECK_FALSE(bruhat_leq(Factor::translation(1, 1), t21));  // other coset
}

TEST_CASE("bruhat is a partial order on small factors") {
  const auto xs = small_factors(4);
  for (const auto& x : xs) {
    CHECK(bruhat_leq(x, x));
    for (const auto& y : xs) {
      const bool xy = bruhat_leq(x, y);
      // In affine A1 the order within a coset is: equal or strictly shorter.
      const bool expected = x.omega() == y.omega() && (x == y || length(x) < length(y));
      CHECK(xy == expected);
      if (xy && bruhat_leq(y, x)) CHECK(x == y);
    }
  }
  // Transitivity on a smaller range (cubic).
  const auto zs = small_factors(2);
  for (const auto& x : zs)
    for (const auto& y : zs) {
      if (!bruhat_leq(x, y)) continue;
      for (const auto& z : zs)
        if (bruhat_leq(y, z)) CHECK(bruhat_leq(x, z));
    }
}

TEST_CASE("admissible sets match the displayed lists") {
  CHECK(rendered(admissible_set({2, 1})) == std::set<std::string>{"t(2,1)", "t(1,2)", "t(1,2)s"});
  CHECK(rendered(admissible_set({3, 0})) ==
        std::set<std::string>{"t(3,0)", "t(0,3)s", "t(0,3)", "t(2,1)s", "t(2,1)", "t(1,2)", "t(1,2)s"});
  CHECK(rendered(admissible_set({0, 0})) == std::set<std::string>{"t(0,0)"});
  CHECK_THROWS(admissible_set({4, -1}));
  for (std::size_t f = 1; f <= 3; ++f) {
    CHECK(admissible_product(std::vector<Weight>(f, {2, 1})).size() == static_cast<std::size_t>(std::pow(3, f)));
    CHECK(admissible_product(std::vector<Weight>(f, {3, 0})).size() == static_cast<std::size_t>(std::pow(7, f)));
  }
}

TEST_CASE("filtered admissible sets") {
  CHECK(rendered(adm_rho_factor({2, 1}, true)) == std::set<std::string>{"t(2,1)", "t(1,2)s"});
  auto s30 = rendered(adm_rho_factor({3, 0}, true));
  CHECK(s30.size() == 6);
  CHECK(s30.count("t(0,3)") == 0);
  CHECK(adm_rho_factor({2, 1}, false).size() == 3);

  for (std::size_t f = 1; f <= 3; ++f)
    for (unsigned mask = 0; mask < (1u << f); ++mask) {
      RhoBarShape shape;
      for (std::size_t j = 0; j < f; ++j) {
        shape.unipotent_nontrivial.push_back((mask >> j) & 1);
        shape.frak_w.push_back(false);
        shape.mu.push_back({6, 0});
      }
      for (Weight lambda : {Weight{2, 1}, Weight{3, 0}}) {
        std::vector<Weight> ls(f, lambda);
        auto full = admissible_product(ls);
        auto filtered = adm_rho(ls, shape);
        for (const auto& x : filtered) CHECK(std::find(full.begin(), full.end(), x) != full.end());
        CHECK((filtered.size() == full.size()) == (mask == 0));
      }
      auto h = hypercube_check(shape.unipotent_nontrivial);
      CHECK(h.pass);
      CHECK(h.checks > 0);
    }
}

TEST_CASE("lowest alcove elements") {
  Presentation tau{{false}, {{0, 0}}};
  CHECK(w_star(tau, 23, 0) == Element{{Factor::translation(1, 0)}});
  CHECK_THROWS(w_star(tau, 23, 2));
  Presentation deep{{true, false}, {{8, 1}, {5, 0}}};
  Element w = w_star(deep, 23, 3);
  CHECK(w * w.inverse() == Element::identity(2));
  CHECK(w.factors[0] == Factor{true, 9, 1});

  RhoBarShape shape{{false}, {false}, {{7, 0}}, 3, true};
  shape.validate(23);
  // Same presentation on both sides: the relative element is trivial, which is
  // not admissible of weight (2,1).
  Presentation same{{false}, {{7, 0}}};
  CHECK(w_star_rho_tau(shape, same, 23, 3) == Element::identity(1));
  CHECK_FALSE(type_lifts(shape, same, {{2, 1}}, 23, 3));
  Presentation shifted{{false}, {{5, 1}}};
  CHECK(w_star_rho_tau(shape, shifted, 23, 3) == Element{{Factor::translation(2, -1)}});
  Presentation lifting{{false}, {{5, -1}}};
  CHECK(w_star_rho_tau(shape, lifting, 23, 3) == Element{{Factor::translation(2, 1)}});
  CHECK(type_lifts(shape, lifting, {{2, 1}}, 23, 3));

  RhoBarShape bad{{false}, {true}, {{7, 0}}, 3, true};
  CHECK_THROWS(bad.validate(23));
}
