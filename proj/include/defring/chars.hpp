#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "defring/weyl.hpp"

namespace defring::chars {

// Iwahori (split torus) or units of the quaternion order (nonsplit torus).
enum class Torus { split, nonsplit };

std::string to_string(Torus t);

using Vec2 = std::array<std::int64_t, 2>;
using WeightVector = std::vector<Vec2>;

// Embeddings are ordered j0, j0 o Frob, ...; index 0 is j0.
WeightVector zero_weight(std::size_t f);
WeightVector root(std::size_t j, std::size_t f, int sign = 1);
// +alpha_0, ..., +alpha_{f-1}, -alpha_0, ..., -alpha_{f-1}
std::vector<WeightVector> roots(std::size_t f);
WeightVector operator+(const WeightVector& a, const WeightVector& b);
WeightVector operator-(const WeightVector& a);
WeightVector operator*(std::int64_t k, const WeightVector& a);

struct Context {
  int p = 23;
  std::size_t f = 1;
  Torus torus = Torus::split;
  // Use the Frob_q-conjugate representative in the nonsplit case.
  bool conjugate = false;

  std::int64_t q() const;
  // q - 1 (split) or q^2 - 1 (nonsplit).
  std::int64_t modulus() const;
};

struct CharacterClass {
  Torus torus = Torus::split;
  std::int64_t modulus = 1;
  std::vector<std::int64_t> residues;  // two (split) or one (nonsplit)

  CharacterClass operator+(const CharacterClass& o) const;
  std::string str() const;
  auto operator<=>(const CharacterClass&) const = default;
};

CharacterClass char_class(const WeightVector& mu, const Context& ctx);
// (w_H F - 1) nu, whose class is zero.
WeightVector frobenius_relation(const WeightVector& nu, const Context& ctx);
// Not factoring through the determinant (split) or the reduced norm (nonsplit).
bool regular(const CharacterClass& chi, const Context& ctx);

struct ProductsResult {
  bool ok = true;
  std::size_t tuples = 0;
  std::vector<WeightVector> violations;
};

// Sum of n_j alpha_j with n_j in {0, +-1, +-2} has trivial class only when zero.
ProductsResult check_products_of_embeddings(const Context& ctx);

struct GradedPieces {
  std::array<std::vector<CharacterClass>, 3> degree;
  std::size_t total() const { return degree[0].size() + degree[1].size() + degree[2].size(); }
};

GradedPieces graded_pieces(const CharacterClass& chi, const Context& ctx);
// 1 + 2f + C(2f+1, 2) + f, counted from generators.
std::size_t pbw_dimension(std::size_t f);

struct AuditResult {
  bool complement_multiplicity_free = true;
  bool isotypic_size_ok = true;
  bool shifts_multiplicity_one = true;
  std::string detail;
  bool pass() const { return complement_multiplicity_free && isotypic_size_ok && shifts_multiplicity_one; }
};

AuditResult multiplicity_audit(const CharacterClass& chi, const Context& ctx);

struct TauExponents {
  int d = 1;
  std::int64_t modulus = 1;  // p^d - 1
  Vec2 e{0, 0};

  // Equal as inertial types: same level and the same unordered exponent pair.
  bool same_type(const TauExponents& o) const;
  std::string str() const;
};

// flips: s_j per embedding; operator (F* o s^-1)(mu)_i = p s_{i+1}(mu_{i+1}).
TauExponents tau_exponents(const std::vector<bool>& flips, const WeightVector& mu, int p);
std::vector<bool> torus_flips(Torus t, std::size_t f);

struct ShiftResult {
  bool valid = false;
  int epsilon = 0;
  bool plus_ok = false;
  bool minus_ok = false;
  bool plus_in_alcove = false;
  bool minus_in_alcove = false;
  WeightVector mu;  // torus-side representative of the character
  TauExponents target, plus, minus;
  std::string message;
};

// Torus-side weight mu with tau(w_H, mu) = tau(w, nu + eta).
WeightVector character_weight(const weyl::Presentation& pres, const Context& ctx);

// Which of nu + eps*alpha presents the type of chi*alpha.
ShiftResult inertial_jl_shift(const weyl::Presentation& pres, const WeightVector& alpha, const Context& ctx,
                              int depth = 0);

// Random lowest-alcove presentation with pr(w) matching the torus.
weyl::Presentation random_presentation(std::mt19937_64& rng, const Context& ctx, int depth);

}  // namespace defring::chars
