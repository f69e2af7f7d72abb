#include <doctest.h>

#include <random>
#include <set>

#include "defring/chars.hpp"

using namespace defring::chars;

namespace {

WeightVector random_weight(std::mt19937_64& rng, std::size_t f, int bound = 50) {
  std::uniform_int_distribution<int> d(-bound, bound);
  WeightVector w(f);
  for (auto& v : w) v = {d(rng), d(rng)};
  return w;
}

}  // namespace

TEST_CASE("character classes") {
  Context split{7, 1, Torus::split};
  CHECK(char_class(zero_weight(1), split).residues == std::vector<std::int64_t>{0, 0});
  CHECK(char_class({{8, -3}}, split).residues == std::vector<std::int64_t>{2, 3});

  std::mt19937_64 rng(11);
  for (int p : {5, 7, 23})
    for (std::size_t f = 1; f <= 3; ++f)
      for (Torus t : {Torus::split, Torus::nonsplit})
        for (bool conj : {false, true}) {
          Context ctx{p, f, t, conj};
          for (int i = 0; i < 40; ++i) {
            WeightVector a = random_weight(rng, f), b = random_weight(rng, f);
            CHECK(char_class(a + b, ctx) == char_class(a, ctx) + char_class(b, ctx));
            CharacterClass rel = char_class(frobenius_relation(a, ctx), ctx);
            for (auto r : rel.residues) CHECK(r == 0);
          }
        }
}

TEST_CASE("class map is onto the residue group") {
  for (int p : {5, 7, 11})
    for (std::size_t f = 1; f <= 2; ++f)
      for (Torus t : {Torus::split, Torus::nonsplit}) {
        Context ctx{p, f, t};
        const std::int64_t q = ctx.q();
        const std::int64_t expected = t == Torus::split ? (q - 1) * (q - 1) : q * q - 1;
        std::set<CharacterClass> image;
        // Weights supported at j0 already reach every class.
        const std::int64_t range = t == Torus::split ? q - 1 : ctx.modulus();
        for (std::int64_t a = 0; a < range; ++a)
          for (std::int64_t b = 0; b < (t == Torus::split ? q - 1 : 1); ++b) {
            WeightVector mu = zero_weight(f);
            mu[0] = {a, b};
            image.insert(char_class(mu, ctx));
          }
        CHECK(static_cast<std::int64_t>(image.size()) == expected);
      }
}

TEST_CASE("split f=1 quotient agrees with brute force") {
  Context ctx{7, 1, Torus::split};
  // Weights differing by multiples of (p-1) in each coordinate collide.
  for (int a = -10; a <= 10; ++a)
    for (int b = -10; b <= 10; ++b)
      CHECK(char_class({{a, b}}, ctx) == char_class({{a + 6, b - 12}}, ctx));
}

TEST_CASE("products of embeddings") {
  CHECK(check_products_of_embeddings({7, 1, Torus::split}).ok);
  auto r = check_products_of_embeddings({7, 2, Torus::nonsplit});
  CHECK(r.ok);
  CHECK(r.tuples == 25);
  auto bad = check_products_of_embeddings({3, 1, Torus::split});
  CHECK_FALSE(bad.ok);
  CHECK_FALSE(bad.violations.empty());
  for (int p : {5, 7, 11, 23, 31, 43})
    for (std::size_t f = 1; f <= 3; ++f)
      for (Torus t : {Torus::split, Torus::nonsplit}) CHECK(check_products_of_embeddings({p, f, t}).ok);
}

TEST_CASE("graded pieces and PBW count") {
  for (std::size_t f = 1; f <= 3; ++f) {
    Context ctx{23, f, Torus::split};
    WeightVector mu = zero_weight(f);
    mu[0] = {5, 1};
    auto g = graded_pieces(char_class(mu, ctx), ctx);
    CHECK(g.degree[0].size() == 1);
    CHECK(g.degree[1].size() == 2 * f);
    CHECK(g.degree[2].size() == 2 * f + 2 * f + (2 * f * (2 * f - 1) / 2 - f));
    CHECK(g.total() == pbw_dimension(f));
  }
  Context ctx{23, 2, Torus::split};
  WeightVector mu = zero_weight(2);
  CHECK(graded_pieces(char_class(mu, ctx), ctx).degree[2].size() == 12);
  Context one{23, 1, Torus::split};
  CharacterClass chi = char_class({{4, 0}}, one);
  auto g = graded_pieces(chi, one);
  std::multiset<CharacterClass> deg2(g.degree[2].begin(), g.degree[2].end());
  std::multiset<CharacterClass> expected{chi, chi, chi + char_class({{2, -2}}, one), chi + char_class({{-2, 2}}, one)};
  CHECK(deg2 == expected);
}

TEST_CASE("multiplicity audit") {
  std::mt19937_64 rng(5);
  const std::vector<Context> cases{
      {7, 2, Torus::split}, {23, 3, Torus::nonsplit}, {5, 2, Torus::split}, {5, 1, Torus::nonsplit}, {7, 1, Torus::split}};
  for (Context base : cases)
    for (bool conj : {false, true}) {
      Context ctx = base;
      ctx.conjugate = conj;
      const std::size_t f = ctx.f;
      for (int i = 0; i < 20; ++i) {
        auto a = multiplicity_audit(char_class(random_weight(rng, f), ctx), ctx);
        CHECK_MESSAGE(a.pass(), a.detail);
      }
    }
  // p = 5, f = 1, split: alpha^4 is trivial on F_5^x, so chi*alpha^2 = chi*alpha^-2.
  Context five{5, 1, Torus::split};
  auto a = multiplicity_audit(char_class({{3, 0}}, five), five);
  CHECK_FALSE(a.complement_multiplicity_free);
  CHECK(a.shifts_multiplicity_one);
}

TEST_CASE("tau exponents") {
  auto z = tau_exponents({false}, zero_weight(1), 23);
  CHECK(z.e == Vec2{0, 0});
  auto t = tau_exponents({false}, {{30, -4}}, 23);
  CHECK(t.d == 1);
  CHECK(t.e == Vec2{8, 18});
  CHECK(tau_exponents({true, false}, zero_weight(2), 7).d == 4);

  std::mt19937_64 rng(3);
  for (std::size_t f = 1; f <= 3; ++f)
    for (Torus tor : {Torus::split, Torus::nonsplit}) {
      auto wh = torus_flips(tor, f);
      for (int i = 0; i < 50; ++i) {
        WeightVector mu = random_weight(rng, f), al = random_weight(rng, f, 3);
        auto a = tau_exponents(wh, mu + al, 11), b = tau_exponents(wh, mu, 11), c = tau_exponents(wh, al, 11);
        CHECK(a.e[0] == (b.e[0] + c.e[0]) % a.modulus);
        CHECK(a.e[1] == (b.e[1] + c.e[1]) % a.modulus);
        // The class and the type carry the same residue at j0.
        Context ctx{11, f, tor};
        if (tor == Torus::split) {
          auto cls = char_class(mu, ctx);
          CHECK(cls.residues[0] == b.e[0]);
          CHECK(cls.residues[1] == b.e[1]);
        } else {
          CHECK(char_class(mu, ctx).residues[0] == b.e[0]);
        }
      }
    }
}

TEST_CASE("inertial JL shift") {
  // f = 1, w = w_H: the + sign.
  Context one{23, 1, Torus::split};
  defring::weyl::Presentation pres{{false}, {{9, 1}}};
  auto r = inertial_jl_shift(pres, root(0, 1), one, 3);
  CHECK(r.valid);
  CHECK(r.epsilon == 1);
  CHECK(inertial_jl_shift(pres, zero_weight(1), one).epsilon == 1);

  // f = 2, split torus, w nontrivial of even parity.
  Context two{23, 2, Torus::split};
  defring::weyl::Presentation mixed{{true, true}, {{9, 1}, {12, 2}}};
  auto m = inertial_jl_shift(mixed, root(0, 2), two, 3);
  CHECK_MESSAGE(m.valid, m.message);

  std::mt19937_64 rng(17);
  int count = 0;
  for (int p : {23, 31, 43})
    for (std::size_t f = 1; f <= 3; ++f)
      for (Torus t : {Torus::split, Torus::nonsplit}) {
        Context ctx{p, f, t};
        for (int i = 0; i < 12; ++i) {
          auto pr = random_presentation(rng, ctx, 3);
          if (!regular(char_class(character_weight(pr, ctx), ctx), ctx)) continue;
          for (const auto& a : roots(f)) {
            auto s = inertial_jl_shift(pr, a, ctx, 3);
            CHECK_MESSAGE(s.valid, s.message);
            // Regularity is stable under the shift.
            CHECK(regular(char_class(s.mu + a, ctx), ctx));
            ++count;
          }
        }
      }
  CHECK(count >= 200);
}
